#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace grnet {

using Int = mpz_class;
using Exponent = std::vector<long long>;

// Ordered list of distinct coordinate labels; the basis of a free Z-module.
class Lattice {
 public:
  explicit Lattice(std::vector<std::string> labels);
  size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(size_t i) const { return labels_[i]; }
  int index(const std::string& label) const;  // -1 when absent
  int require(const std::string& label) const;
  friend bool operator==(const Lattice& a, const Lattice& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  std::map<std::string, int> pos_;
};

using LatticePtr = std::shared_ptr<const Lattice>;
LatticePtr make_lattice(std::vector<std::string> labels);
bool same_lattice(const LatticePtr& a, const LatticePtr& b);

struct LatticeVector {
  LatticePtr lattice;
  Exponent v;

  LatticeVector() = default;
  LatticeVector(LatticePtr lat, Exponent coords);
  static LatticeVector zero(LatticePtr lat);
  long long at(const std::string& label) const;
  bool is_zero() const;
  std::string str() const;  // {label:value,...} omitting zeros
  friend bool operator==(const LatticeVector& a, const LatticeVector& b);
};

// Z-linear map given by the image of each domain basis vector.
class LatticeMap {
 public:
  LatticeMap(LatticePtr dom, LatticePtr cod);
  LatticeMap(LatticePtr dom, LatticePtr cod, std::vector<Exponent> cols);
  const LatticePtr& domain() const { return dom_; }
  const LatticePtr& codomain() const { return cod_; }
  long long& at(size_t row, size_t col) { return cols_[col][row]; }
  long long at(size_t row, size_t col) const { return cols_[col][row]; }
  const Exponent& column(size_t col) const { return cols_[col]; }
  Exponent apply(const Exponent& x) const;
  LatticeVector apply(const LatticeVector& x) const;
  LatticeMap compose(const LatticeMap& inner) const;  // this o inner
  LatticeMap transpose() const;
  friend bool operator==(const LatticeMap& a, const LatticeMap& b);

 private:
  LatticePtr dom_, cod_;
  std::vector<Exponent> cols_;
};

LatticeMap identity_map(LatticePtr lat);
// exact inverse over Z; ParameterError if not unimodular
LatticeMap inverse(const LatticeMap& m);

class LaurentPoly {
 public:
  using Terms = std::map<Exponent, Int>;

  LaurentPoly() = default;
  explicit LaurentPoly(LatticePtr lat) : lat_(std::move(lat)) {}

  static LaurentPoly constant(LatticePtr lat, const Int& c);
  static LaurentPoly monomial(LatticePtr lat, Exponent e, const Int& c = 1);
  static LaurentPoly variable(LatticePtr lat, const std::string& label, long long power = 1);

  const LatticePtr& lattice() const { return lat_; }
  const Terms& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  Int coeff(const Exponent& e) const;

  void add_term(const Exponent& e, const Int& c);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& g);
  LaurentPoly& operator-=(const LaurentPoly& g);
  friend LaurentPoly operator+(LaurentPoly f, const LaurentPoly& g) { return f += g; }
  friend LaurentPoly operator-(LaurentPoly f, const LaurentPoly& g) { return f -= g; }
  friend LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g);
  friend bool operator==(const LaurentPoly& f, const LaurentPoly& g);

 private:
  LatticePtr lat_;
  Terms terms_;
};

LaurentPoly lp_add(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly lp_mul(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly lp_pow(const LaurentPoly& f, long long e);

// h with f = g*h, or NotLaurent
LaurentPoly lp_exact_div(const LaurentPoly& f, const LaurentPoly& g);

// Ring map sending the i-th variable of f's lattice to images[i]. Negative
// powers are allowed only for monomial images (NotInvertible otherwise).
LaurentPoly lp_substitute(const LaurentPoly& f, const LatticePtr& target,
                          const std::vector<LaurentPoly>& images);
LaurentPoly lp_substitute(const LaurentPoly& f, const LatticePtr& target,
                          const std::map<std::string, LaurentPoly>& images);

// Monomial change of variables x^e -> x^{m(e)}.
LaurentPoly pushforward(const LaurentPoly& f, const LatticeMap& m);

// Variable i goes to x^{monos[i]} * g^{powers[i]}. The common denominator is
// cleared and removed again by exact division, so the result is Laurent or
// NotLaurent is thrown.
LaurentPoly substitute_with_factor(const LaurentPoly& f, const LatticePtr& target,
                                   const std::vector<Exponent>& monos,
                                   const std::vector<long long>& powers, const LaurentPoly& g);

struct Extremum {
  Exponent exp;
  bool unique = false;  // a product-order extremum exists
};

// Product-order minimum when it exists; otherwise the lex minimum in the
// order given by `tiebreak` (lattice order when empty), flagged non-unique.
Extremum lp_min_exponent(const LaurentPoly& f, const std::vector<std::string>& tiebreak = {});
Extremum lp_max_exponent(const LaurentPoly& f, const std::vector<std::string>& tiebreak = {});

// Distinct exponents; Trop(f)(v) = min over them of <m, v>.
std::vector<Exponent> tropicalize(const LaurentPoly& f);

// Same coefficients on a lattice of equal rank with new labels.
LaurentPoly relabel(const LaurentPoly& f, const LatticePtr& target);
// Re-express over `target`: coordinates missing from target are dropped,
// new ones are zero.
LaurentPoly project(const LaurentPoly& f, const LatticePtr& target);

std::string to_json(const LaurentPoly& f);
LaurentPoly laurent_from_json(const std::string& text);
// human form such as y34*(1+y24); variables are prefix+label
std::string pretty(const LaurentPoly& f, const std::string& prefix = "x");

}  // namespace grnet
