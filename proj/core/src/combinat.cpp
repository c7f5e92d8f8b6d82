#include "grnet/combinat.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "grnet/errors.hpp"

namespace grnet {

KSubset::KSubset(int n, std::vector<int> elems) : n_(n), elems_(std::move(elems)) {
  if (n < 1) throw ParameterError("subset ambient size must be positive");
  std::sort(elems_.begin(), elems_.end());
  for (size_t t = 0; t < elems_.size(); ++t) {
    if (elems_[t] < 1 || elems_[t] > n)
      throw ParameterError("element " + std::to_string(elems_[t]) + " outside [1," +
                           std::to_string(n) + "]");
    if (t > 0 && elems_[t] == elems_[t - 1])
      throw ParameterError("duplicate element " + std::to_string(elems_[t]));
  }
}

bool KSubset::contains(int x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

std::string KSubset::str() const {
  std::string out;
  for (size_t t = 0; t < elems_.size(); ++t) {
    if (n_ >= 10 && t > 0) out += ',';
    out += std::to_string(elems_[t]);
  }
  return out;
}

KSubset KSubset::parse(const std::string& text, int n) {
  std::vector<int> out;
  if (text.empty() || text == "-") return KSubset(n, {});
  if (text.find(',') != std::string::npos) {
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(), ::isdigit))
        throw ParameterError("bad subset '" + text + "'");
      out.push_back(std::stoi(tok));
    }
  } else {
    if (n >= 10 && text.size() > 1)
      throw ParameterError("subset '" + text + "' is ambiguous for n >= 10; use commas");
    for (char c : text) {
      if (!::isdigit(static_cast<unsigned char>(c)))
        throw ParameterError("bad subset '" + text + "'");
      out.push_back(c - '0');
    }
  }
  return KSubset(n, out);
}

KSubset interval(int n, int start, int len) {
  std::vector<int> e;
  for (int t = 0; t < len; ++t) e.push_back((start - 1 + t) % n + 1);
  return KSubset(n, e);
}

std::vector<KSubset> all_subsets(int k, int n) {
  if (k < 0 || k > n) throw ParameterError("invalid (k,n)");
  std::vector<KSubset> out;
  std::vector<int> cur(k);
  for (int t = 0; t < k; ++t) cur[t] = t + 1;
  while (true) {
    out.emplace_back(n, cur);
    int t = k - 1;
    while (t >= 0 && cur[t] == n - k + t + 1) --t;
    if (t < 0) break;
    ++cur[t];
    for (int u = t + 1; u < k; ++u) cur[u] = cur[u - 1] + 1;
  }
  return out;
}

static void same_shape(const KSubset& a, const KSubset& b) {
  if (a.n() != b.n() || a.k() != b.k())
    throw ParameterError("subsets " + a.str() + " and " + b.str() + " differ in (k,n)");
}

bool weakly_separated(const KSubset& a, const KSubset& b) {
  same_shape(a, b);
  // walk [n] cyclically and count changes between a-only and b-only elements
  std::vector<int> seq;
  for (int x = 1; x <= a.n(); ++x) {
    bool ia = a.contains(x), ib = b.contains(x);
    if (ia != ib) seq.push_back(ia ? 0 : 1);
  }
  if (seq.empty()) return true;
  int changes = 0;
  for (size_t t = 0; t < seq.size(); ++t)
    if (seq[t] != seq[(t + 1) % seq.size()]) ++changes;
  return changes <= 2;
}

int cyclic_pos(int x, int i, int n) { return ((x - i) % n + n) % n; }

static std::vector<int> in_order(const KSubset& s, int i) {
  std::vector<int> p;
  for (int x : s.elems()) p.push_back(cyclic_pos(x, i, s.n()));
  std::sort(p.begin(), p.end());
  return p;
}

bool gale_leq(const KSubset& a, const KSubset& b, int i) {
  same_shape(a, b);
  auto pa = in_order(a, i), pb = in_order(b, i);
  for (size_t t = 0; t < pa.size(); ++t)
    if (pa[t] > pb[t]) return false;
  return true;
}

NecklaceReport necklace_check(const std::vector<KSubset>& seq) {
  if (seq.empty()) throw ParameterError("empty sequence");
  const int n = seq[0].n(), k = seq[0].k();
  if (static_cast<int>(seq.size()) != n)
    throw ParameterError("necklace needs n = " + std::to_string(n) + " terms");
  for (const auto& s : seq)
    if (s.n() != n || s.k() != k) throw ParameterError("terms differ in (k,n)");

  NecklaceReport r;
  std::ostringstream diag;
  auto at = [&](int i) -> const KSubset& { return seq[(i - 1) % n]; };

  r.step_rule = true;
  for (int i = 1; i <= n && r.step_rule; ++i)
    for (int x : at(i).elems())
      if (x != i && !at(i + 1).contains(x)) {
        r.step_rule = false;
        diag << "step rule fails at i=" << i << "; ";
        break;
      }

  r.interval_rule = true;
  for (int i = 1; i <= n && r.interval_rule; ++i)
    for (int j = 1; j <= n && r.interval_rule; ++j) {
      if (i == j) continue;
      for (int x : at(i).elems())
        if (!at(j).contains(x) && cyclic_pos(x, i, n) >= cyclic_pos(j, i, n)) {
          r.interval_rule = false;
          diag << "interval rule fails at (i,j)=(" << i << "," << j << "); ";
          break;
        }
    }

  r.order_rule = true;
  for (int i = 1; i <= n && r.order_rule; ++i)
    for (int j = 1; j <= n; ++j)
      if (!gale_leq(at(i), at(j), i) || !weakly_separated(at(i), at(j))) {
        r.order_rule = false;
        diag << "order rule fails at (i,j)=(" << i << "," << j << "); ";
        break;
      }

  if (r.step_rule != r.interval_rule || r.step_rule != r.order_rule)
    throw ConsistencyError("necklace criteria disagree: " + diag.str());
  r.value = r.step_rule;
  r.diagnostic = diag.str();
  return r;
}

std::vector<KSubset> necklace_of_positroid(const std::set<KSubset>& p) {
  if (p.empty()) throw ParameterError("empty positroid");
  const int n = p.begin()->n();
  std::vector<KSubset> out;
  for (int i = 1; i <= n; ++i) {
    const KSubset* best = nullptr;
    for (const auto& s : p)
      if (!best || in_order(s, i) < in_order(*best, i)) best = &s;
    out.push_back(*best);
  }
  return out;
}

YoungDiagram young_of(const KSubset& s) {
  YoungDiagram y{s.k(), s.n(), {}};
  const auto& e = s.elems();
  for (int t = 1; t <= s.k(); ++t) y.parts.push_back(e[s.k() - t] - (s.k() + 1 - t));
  return y;
}

KSubset subset_of(const YoungDiagram& y) {
  std::vector<int> e(y.k);
  for (int t = 1; t <= y.k; ++t) {
    int p = y.parts[t - 1];
    if (p < 0 || p > y.n - y.k || (t > 1 && p > y.parts[t - 2]))
      throw ParameterError("not a diagram in the box");
    e[y.k - t] = p + (y.k + 1 - t);
  }
  return KSubset(y.n, e);
}

int max_diag(const KSubset& j, const KSubset& i) {
  same_shape(j, i);
  auto lj = young_of(j).parts, li = young_of(i).parts;
  std::map<int, int> count;
  for (size_t r = 0; r < lj.size(); ++r)
    for (int c = li[r]; c < lj[r]; ++c) ++count[c - static_cast<int>(r)];
  int best = 0;
  for (auto& [d, m] : count) best = std::max(best, m);
  return best;
}

}  // namespace grnet
