#include "grnet/quiver.hpp"

#include <algorithm>

#include "grnet/errors.hpp"

namespace grnet {

Quiver::Quiver(std::vector<std::string> names, std::vector<bool> frozen,
               std::vector<std::vector<int>> b, int star)
    : names_(std::move(names)), frozen_(std::move(frozen)), b_(std::move(b)), star_(star) {
  const size_t n = names_.size();
  if (frozen_.size() != n || b_.size() != n) throw ParameterError("quiver data sizes differ");
  for (size_t i = 0; i < n; ++i) {
    if (b_[i].size() != n) throw ParameterError("b-matrix is not square");
    if (b_[i][i] != 0) throw InvariantViolation("no loops", "vertex " + names_[i]);
    for (size_t j = 0; j < i; ++j)
      if (b_[i][j] != -b_[j][i])
        throw InvariantViolation("antisymmetry", names_[i] + "," + names_[j]);
  }
  if (star_ >= 0 && (star_ >= static_cast<int>(n) || !frozen_[star_]))
    throw InvariantViolation("star is frozen", "bad star vertex");
}

int Quiver::index(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

int Quiver::require(const std::string& name) const {
  int i = index(name);
  if (i < 0) throw ParameterError("no vertex named '" + name + "'");
  return i;
}

std::vector<int> Quiver::mutable_vertices() const {
  std::vector<int> out;
  for (size_t i = 0; i < size(); ++i)
    if (!frozen_[i]) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<std::pair<int, int>> Quiver::out_arrows(int j) const {
  std::vector<std::pair<int, int>> out;
  for (size_t i = 0; i < size(); ++i)
    if (b_[j][i] > 0) out.emplace_back(static_cast<int>(i), b_[j][i]);
  return out;
}

std::vector<std::pair<int, int>> Quiver::in_arrows(int j) const {
  std::vector<std::pair<int, int>> out;
  for (size_t i = 0; i < size(); ++i)
    if (b_[i][j] > 0) out.emplace_back(static_cast<int>(i), b_[i][j]);
  return out;
}

LatticePtr Quiver::lattice() const { return make_lattice(names_); }

LatticePtr Quiver::lattice_no_star() const {
  std::vector<std::string> l;
  for (size_t i = 0; i < size(); ++i)
    if (static_cast<int>(i) != star_) l.push_back(names_[i]);
  return make_lattice(l);
}

Quiver Quiver::renamed(int i, const std::string& name) const {
  Quiver q = *this;
  q.names_[i] = name;
  return q;
}

Quiver fz_mutate(const Quiver& q, int j) {
  if (j < 0 || j >= static_cast<int>(q.size())) throw ParameterError("vertex out of range");
  if (q.frozen(j)) throw NotMutable("vertex " + q.name(j) + " is frozen");
  const int n = static_cast<int>(q.size());
  std::vector<std::vector<int>> b = q.matrix();
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (i == j || k == j) {
        b[i][k] = -q.b(i, k);
        continue;
      }
      int bij = q.b(i, j), bjk = q.b(j, k);
      int sgn = (bij > 0) - (bij < 0);
      b[i][k] = q.b(i, k) + sgn * std::max(bij * bjk, 0);
    }
  std::vector<bool> fr;
  for (int i = 0; i < n; ++i) fr.push_back(q.frozen(i));
  return Quiver(q.names(), fr, b, q.star());
}

bool mutable_part_equal(const Quiver& a, const Quiver& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a.frozen(i) != b.frozen(i)) return false;
    for (size_t j = 0; j < a.size(); ++j)
      if ((!a.frozen(i) || !a.frozen(j)) && a.b(i, j) != b.b(i, j)) return false;
  }
  return true;
}

}  // namespace grnet
