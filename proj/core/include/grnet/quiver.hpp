#pragma once

#include <string>
#include <utility>
#include <vector>

#include "grnet/laurent.hpp"

namespace grnet {

// Quiver stored by its signed arrow-count matrix: b(i,j) = #(i->j) - #(j->i).
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> names, std::vector<bool> frozen,
         std::vector<std::vector<int>> b, int star = -1);

  size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_[i]; }
  int index(const std::string& name) const;  // -1 when absent
  int require(const std::string& name) const;
  bool frozen(int i) const { return frozen_[i]; }
  int star() const { return star_; }
  int b(int i, int j) const { return b_[i][j]; }
  const std::vector<std::vector<int>>& matrix() const { return b_; }
  std::vector<int> mutable_vertices() const;

  // (neighbour, multiplicity) for arrows leaving / entering j
  std::vector<std::pair<int, int>> out_arrows(int j) const;
  std::vector<std::pair<int, int>> in_arrows(int j) const;

  LatticePtr lattice() const;          // one coordinate per vertex
  LatticePtr lattice_no_star() const;  // star vertex omitted

  Quiver renamed(int i, const std::string& name) const;

 private:
  std::vector<std::string> names_;
  std::vector<bool> frozen_;
  std::vector<std::vector<int>> b_;
  int star_ = -1;
};

Quiver fz_mutate(const Quiver& q, int j);

// equality of b entries having at least one mutable endpoint; vertices
// matched by position
bool mutable_part_equal(const Quiver& a, const Quiver& b);

}  // namespace grnet
