#pragma once

#include <compare>
#include <set>
#include <string>
#include <vector>

namespace grnet {

// A k-element subset of the cyclic set [n] = {1..n}. Elements kept sorted.
class KSubset {
 public:
  KSubset() = default;
  KSubset(int n, std::vector<int> elems);

  int n() const { return n_; }
  int k() const { return static_cast<int>(elems_.size()); }
  const std::vector<int>& elems() const { return elems_; }
  bool contains(int x) const;

  // "1457" when n < 10, otherwise "1,4,5,7"
  std::string str() const;

  // accepts "1457" (n < 10 only) or "1,4,5,7"; "" or "-" is the empty set
  static KSubset parse(const std::string& text, int n);

  friend bool operator==(const KSubset&, const KSubset&) = default;
  friend auto operator<=>(const KSubset& a, const KSubset& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.elems_ <=> b.elems_;
  }

 private:
  int n_ = 0;
  std::vector<int> elems_;
};

KSubset interval(int n, int start, int len);  // cyclic [start, start+len-1]
std::vector<KSubset> all_subsets(int k, int n);

bool weakly_separated(const KSubset& a, const KSubset& b);

// i-th cyclic order: i < i+1 < ... < n < 1 < ... < i-1
int cyclic_pos(int x, int i, int n);
// termwise comparison of both sets listed increasingly in the i-th order
bool gale_leq(const KSubset& a, const KSubset& b, int i);

struct NecklaceReport {
  bool value = false;
  bool step_rule = false;      // I_i \ {i} in I_{i+1}
  bool interval_rule = false;  // I_i \ I_j in [i, j)
  bool order_rule = false;     // I_i <=_i I_j and pairwise weak separation
  std::string diagnostic;
};

// All three criteria are evaluated; ConsistencyError if they disagree.
NecklaceReport necklace_check(const std::vector<KSubset>& seq);
std::vector<KSubset> necklace_of_positroid(const std::set<KSubset>& p);

struct YoungDiagram {
  int k = 0, n = 0;
  std::vector<int> parts;  // weakly decreasing, each in [0, n-k]
  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
};

YoungDiagram young_of(const KSubset& s);
KSubset subset_of(const YoungDiagram& y);

// max over diagonals d of #{cells (r,c) in lam_J minus lam_I : c - r = d}
int max_diag(const KSubset& j, const KSubset& i);

}  // namespace grnet
