#include "grnet/laurent.hpp"

#include <algorithm>
#include <climits>
#include <json.hpp>
#include <numeric>
#include <set>
#include <sstream>

#include "grnet/errors.hpp"

namespace grnet {

using nlohmann::json;

Lattice::Lattice(std::vector<std::string> labels) : labels_(std::move(labels)) {
  for (size_t i = 0; i < labels_.size(); ++i)
    if (!pos_.emplace(labels_[i], static_cast<int>(i)).second)
      throw ParameterError("duplicate lattice label '" + labels_[i] + "'");
}

int Lattice::index(const std::string& label) const {
  auto it = pos_.find(label);
  return it == pos_.end() ? -1 : it->second;
}

int Lattice::require(const std::string& label) const {
  int i = index(label);
  if (i < 0) throw ParameterError("unknown lattice label '" + label + "'");
  return i;
}

LatticePtr make_lattice(std::vector<std::string> labels) {
  return std::make_shared<const Lattice>(std::move(labels));
}

bool same_lattice(const LatticePtr& a, const LatticePtr& b) {
  return a == b || (a && b && *a == *b);
}

static void check_same(const LatticePtr& a, const LatticePtr& b) {
  if (!same_lattice(a, b)) throw ParameterError("lattice mismatch");
}

// ---------------------------------------------------------------- vectors

LatticeVector::LatticeVector(LatticePtr lat, Exponent coords)
    : lattice(std::move(lat)), v(std::move(coords)) {
  if (v.size() != lattice->size()) throw ParameterError("vector length does not match lattice");
}

LatticeVector LatticeVector::zero(LatticePtr lat) {
  Exponent z(lat->size(), 0);
  return LatticeVector(std::move(lat), std::move(z));
}

long long LatticeVector::at(const std::string& label) const { return v[lattice->require(label)]; }

bool LatticeVector::is_zero() const {
  return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
}

std::string LatticeVector::str() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!first) os << ',';
    os << lattice->label(i) << ':' << v[i];
    first = false;
  }
  os << '}';
  return os.str();
}

bool operator==(const LatticeVector& a, const LatticeVector& b) {
  return same_lattice(a.lattice, b.lattice) && a.v == b.v;
}

// ---------------------------------------------------------------- maps

LatticeMap::LatticeMap(LatticePtr dom, LatticePtr cod)
    : dom_(std::move(dom)), cod_(std::move(cod)), cols_(dom_->size(), Exponent(cod_->size(), 0)) {}

LatticeMap::LatticeMap(LatticePtr dom, LatticePtr cod, std::vector<Exponent> cols)
    : dom_(std::move(dom)), cod_(std::move(cod)), cols_(std::move(cols)) {
  if (cols_.size() != dom_->size()) throw ParameterError("map is not total on the domain");
  for (auto& c : cols_)
    if (c.size() != cod_->size()) throw ParameterError("image has wrong length");
}

Exponent LatticeMap::apply(const Exponent& x) const {
  if (x.size() != dom_->size()) throw ParameterError("map applied to vector of wrong length");
  Exponent y(cod_->size(), 0);
  for (size_t j = 0; j < x.size(); ++j)
    if (x[j] != 0)
      for (size_t i = 0; i < y.size(); ++i) y[i] += cols_[j][i] * x[j];
  return y;
}

LatticeVector LatticeMap::apply(const LatticeVector& x) const {
  check_same(x.lattice, dom_);
  return LatticeVector(cod_, apply(x.v));
}

LatticeMap LatticeMap::compose(const LatticeMap& inner) const {
  check_same(inner.cod_, dom_);
  std::vector<Exponent> cols;
  for (const auto& c : inner.cols_) cols.push_back(apply(c));
  return LatticeMap(inner.dom_, cod_, std::move(cols));
}

LatticeMap LatticeMap::transpose() const {
  LatticeMap t(cod_, dom_);
  for (size_t i = 0; i < cod_->size(); ++i)
    for (size_t j = 0; j < dom_->size(); ++j) t.at(j, i) = at(i, j);
  return t;
}

bool operator==(const LatticeMap& a, const LatticeMap& b) {
  return same_lattice(a.dom_, b.dom_) && same_lattice(a.cod_, b.cod_) && a.cols_ == b.cols_;
}

LatticeMap identity_map(LatticePtr lat) {
  LatticeMap m(lat, lat);
  for (size_t i = 0; i < lat->size(); ++i) m.at(i, i) = 1;
  return m;
}

LatticeMap inverse(const LatticeMap& m) {
  const size_t n = m.domain()->size();
  if (m.codomain()->size() != n) throw ParameterError("inverse of a non-square map");
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(m.at(i, j));
    a[i][n + i] = 1;
  }
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw ParameterError("map is singular");
    std::swap(a[p], a[c]);
    mpq_class piv = a[c][c];
    for (auto& x : a[c]) x /= piv;
    for (size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      mpq_class f = a[r][c];
      for (size_t j = 0; j < 2 * n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  LatticeMap inv(m.codomain(), m.domain());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      const mpq_class& x = a[i][n + j];
      if (x.get_den() != 1 || !x.get_num().fits_slong_p())
        throw ParameterError("map is not invertible over Z");
      inv.at(i, j) = x.get_num().get_si();
    }
  return inv;
}

// ---------------------------------------------------------------- polynomials

LaurentPoly LaurentPoly::constant(LatticePtr lat, const Int& c) {
  Exponent z(lat->size(), 0);
  return monomial(std::move(lat), std::move(z), c);
}

LaurentPoly LaurentPoly::monomial(LatticePtr lat, Exponent e, const Int& c) {
  if (e.size() != lat->size()) throw ParameterError("exponent length does not match lattice");
  LaurentPoly f(std::move(lat));
  f.add_term(e, c);
  return f;
}

LaurentPoly LaurentPoly::variable(LatticePtr lat, const std::string& label, long long power) {
  Exponent e(lat->size(), 0);
  e[lat->require(label)] = power;
  return monomial(std::move(lat), std::move(e));
}

Int LaurentPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly::add_term(const Exponent& e, const Int& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly f(*this);
  for (auto& [e, c] : f.terms_) c = -c;
  return f;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& g) {
  if (!lat_) lat_ = g.lat_;
  check_same(lat_, g.lat_);
  for (const auto& [e, c] : g.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& g) {
  if (!lat_) lat_ = g.lat_;
  check_same(lat_, g.lat_);
  for (const auto& [e, c] : g.terms_) add_term(e, -c);
  return *this;
}

static Exponent add_exp(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

static Exponent sub_exp(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g) {
  check_same(f.lat_, g.lat_);
  LaurentPoly h(f.lat_);
  for (const auto& [a, x] : f.terms_)
    for (const auto& [b, y] : g.terms_) h.add_term(add_exp(a, b), x * y);
  return h;
}

bool operator==(const LaurentPoly& f, const LaurentPoly& g) {
  return same_lattice(f.lat_, g.lat_) && f.terms_ == g.terms_;
}

LaurentPoly lp_add(const LaurentPoly& f, const LaurentPoly& g) { return f + g; }
LaurentPoly lp_mul(const LaurentPoly& f, const LaurentPoly& g) { return f * g; }

LaurentPoly lp_pow(const LaurentPoly& f, long long e) {
  if (e < 0) {
    if (!f.is_monomial()) throw NotInvertible("negative power of a non-monomial");
    const auto& [x, c] = *f.terms().begin();
    if (c != 1 && c != -1) throw NotInvertible("negative power of a non-unit monomial");
    Exponent y(x.size());
    for (size_t i = 0; i < x.size(); ++i) y[i] = -x[i] * -e;
    Int cc = (c == -1 && (e % 2 != 0)) ? Int(-1) : Int(1);
    return LaurentPoly::monomial(f.lattice(), y, cc);
  }
  LaurentPoly result = LaurentPoly::constant(f.lattice(), 1), base = f;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

LaurentPoly lp_exact_div(const LaurentPoly& f, const LaurentPoly& g) {
  check_same(f.lattice(), g.lattice());
  if (g.is_zero()) throw ParameterError("division by zero polynomial");
  LaurentPoly q(f.lattice());
  if (f.is_zero()) return q;
  const size_t d = f.lattice()->size();
  // the quotient's exponents lie in the box fixed by the Newton polytopes
  Exponent lo(d), hi(d);
  for (size_t i = 0; i < d; ++i) {
    long long fmin = LLONG_MAX, fmax = LLONG_MIN, gmin = LLONG_MAX, gmax = LLONG_MIN;
    for (auto& [e, c] : f.terms()) fmin = std::min(fmin, e[i]), fmax = std::max(fmax, e[i]);
    for (auto& [e, c] : g.terms()) gmin = std::min(gmin, e[i]), gmax = std::max(gmax, e[i]);
    lo[i] = fmin - gmin;
    hi[i] = fmax - gmax;
    if (lo[i] > hi[i]) throw NotLaurent("not divisible (degree box empty)");
  }
  const auto& [glead, gc] = *g.terms().rbegin();
  LaurentPoly r = f;
  while (!r.is_zero()) {
    const auto& [rlead, rc] = *r.terms().rbegin();
    if (!mpz_divisible_p(rc.get_mpz_t(), gc.get_mpz_t())) throw NotLaurent("coefficient not divisible");
    Exponent e = sub_exp(rlead, glead);
    for (size_t i = 0; i < d; ++i)
      if (e[i] < lo[i] || e[i] > hi[i]) throw NotLaurent("not divisible (remainder leaves degree box)");
    LaurentPoly t = LaurentPoly::monomial(f.lattice(), e, rc / gc);
    q += t;
    r -= t * g;
  }
  return q;
}

LaurentPoly lp_substitute(const LaurentPoly& f, const LatticePtr& target,
                          const std::vector<LaurentPoly>& images) {
  if (images.size() != f.lattice()->size()) throw ParameterError("every variable needs an image");
  for (auto& im : images) check_same(im.lattice(), target);
  LaurentPoly out(target);
  std::map<std::pair<size_t, long long>, LaurentPoly> cache;
  for (const auto& [e, c] : f.terms()) {
    LaurentPoly t = LaurentPoly::constant(target, c);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto key = std::make_pair(i, e[i]);
      auto it = cache.find(key);
      if (it == cache.end()) it = cache.emplace(key, lp_pow(images[i], e[i])).first;
      t = t * it->second;
    }
    out += t;
  }
  return out;
}

LaurentPoly lp_substitute(const LaurentPoly& f, const LatticePtr& target,
                          const std::map<std::string, LaurentPoly>& images) {
  std::vector<LaurentPoly> v;
  for (const auto& l : f.lattice()->labels()) {
    auto it = images.find(l);
    if (it == images.end()) throw ParameterError("no image for variable '" + l + "'");
    v.push_back(it->second);
  }
  return lp_substitute(f, target, v);
}

LaurentPoly pushforward(const LaurentPoly& f, const LatticeMap& m) {
  check_same(f.lattice(), m.domain());
  LaurentPoly out(m.codomain());
  for (const auto& [e, c] : f.terms()) out.add_term(m.apply(e), c);
  return out;
}

LaurentPoly substitute_with_factor(const LaurentPoly& f, const LatticePtr& target,
                                   const std::vector<Exponent>& monos,
                                   const std::vector<long long>& powers, const LaurentPoly& g) {
  const size_t d = f.lattice()->size();
  if (monos.size() != d || powers.size() != d) throw ParameterError("every variable needs an image");
  check_same(g.lattice(), target);
  if (f.is_zero()) return LaurentPoly(target);
  std::vector<std::pair<Exponent, long long>> img;
  long long pmin = LLONG_MAX;
  for (const auto& [e, c] : f.terms()) {
    Exponent m(target->size(), 0);
    long long p = 0;
    for (size_t i = 0; i < d; ++i) {
      if (e[i] == 0) continue;
      for (size_t t = 0; t < m.size(); ++t) m[t] += e[i] * monos[i][t];
      p += e[i] * powers[i];
    }
    img.emplace_back(std::move(m), p);
    pmin = std::min(pmin, p);
  }
  LaurentPoly num(target);
  std::map<long long, LaurentPoly> gpow;
  size_t t = 0;
  for (const auto& [e, c] : f.terms()) {
    auto& [m, p] = img[t++];
    auto it = gpow.find(p - pmin);
    if (it == gpow.end()) it = gpow.emplace(p - pmin, lp_pow(g, p - pmin)).first;
    num += LaurentPoly::monomial(target, m, c) * it->second;
  }
  if (pmin >= 0) return num * lp_pow(g, pmin);
  return lp_exact_div(num, lp_pow(g, -pmin));
}

static std::vector<size_t> label_order(const LatticePtr& lat, const std::vector<std::string>& tiebreak) {
  std::vector<size_t> order;
  std::vector<bool> seen(lat->size(), false);
  for (auto& l : tiebreak) {
    int i = lat->require(l);
    if (!seen[i]) order.push_back(i), seen[i] = true;
  }
  for (size_t i = 0; i < lat->size(); ++i)
    if (!seen[i]) order.push_back(i);
  return order;
}

static Extremum extremum(const LaurentPoly& f, const std::vector<std::string>& tiebreak, int sign) {
  if (f.is_zero()) throw ParameterError("extremal exponent of the zero polynomial");
  // candidate: product-order bound of all exponents, attained iff unique
  const size_t d = f.lattice()->size();
  Exponent bound = f.terms().begin()->first;
  for (const auto& [e, c] : f.terms())
    for (size_t i = 0; i < d; ++i) bound[i] = sign < 0 ? std::min(bound[i], e[i]) : std::max(bound[i], e[i]);
  if (f.terms().count(bound)) return {bound, true};
  auto order = label_order(f.lattice(), tiebreak);
  const Exponent* best = nullptr;
  for (const auto& [e, c] : f.terms()) {
    if (!best) {
      best = &e;
      continue;
    }
    for (size_t i : order) {
      if (e[i] == (*best)[i]) continue;
      if ((sign < 0) == (e[i] < (*best)[i])) best = &e;
      break;
    }
  }
  return {*best, false};
}

Extremum lp_min_exponent(const LaurentPoly& f, const std::vector<std::string>& tiebreak) {
  return extremum(f, tiebreak, -1);
}

Extremum lp_max_exponent(const LaurentPoly& f, const std::vector<std::string>& tiebreak) {
  return extremum(f, tiebreak, +1);
}

std::vector<Exponent> tropicalize(const LaurentPoly& f) {
  std::vector<Exponent> out;
  for (const auto& [e, c] : f.terms()) out.push_back(e);
  return out;
}

LaurentPoly relabel(const LaurentPoly& f, const LatticePtr& target) {
  if (target->size() != f.lattice()->size()) throw ParameterError("relabel needs equal rank");
  LaurentPoly g(target);
  for (const auto& [e, c] : f.terms()) g.add_term(e, c);
  return g;
}

LaurentPoly project(const LaurentPoly& f, const LatticePtr& target) {
  std::vector<int> where;
  for (const auto& l : f.lattice()->labels()) where.push_back(target->index(l));
  LaurentPoly g(target);
  for (const auto& [e, c] : f.terms()) {
    Exponent x(target->size(), 0);
    for (size_t i = 0; i < e.size(); ++i)
      if (where[i] >= 0) x[where[i]] = e[i];
    g.add_term(x, c);
  }
  return g;
}

// ---------------------------------------------------------------- text forms

std::string to_json(const LaurentPoly& f) {
  json j;
  j["lattice"] = f.lattice()->labels();
  j["terms"] = json::array();
  for (const auto& [e, c] : f.terms()) {
    json t;
    if (c.fits_slong_p())
      t["coeff"] = c.get_si();
    else
      t["coeff"] = c.get_str();
    json ex = json::object();
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) ex[f.lattice()->label(i)] = e[i];
    t["exp"] = ex;
    j["terms"].push_back(t);
  }
  return j.dump();
}

LaurentPoly laurent_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParameterError(std::string("bad polynomial json: ") + e.what());
  }
  auto lat = make_lattice(j.at("lattice").get<std::vector<std::string>>());
  LaurentPoly f(lat);
  for (const auto& t : j.at("terms")) {
    Exponent e(lat->size(), 0);
    for (auto& [k, v] : t.at("exp").items()) e[lat->require(k)] = v.get<long long>();
    const auto& c = t.at("coeff");
    Int coeff = c.is_string() ? Int(c.get<std::string>()) : Int(c.get<long>());
    f.add_term(e, coeff);
  }
  return f;
}

static std::string monomial_str(const LaurentPoly& f, const Exponent& e, const std::string& prefix) {
  std::string s;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += prefix + f.lattice()->label(i);
    if (e[i] != 1) s += '^' + std::to_string(e[i]);
  }
  return s;
}

static std::string sum_str(const LaurentPoly& f, const std::string& prefix) {
  std::vector<std::pair<Exponent, Int>> ts(f.terms().begin(), f.terms().end());
  auto deg = [](const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0LL); };
  std::stable_sort(ts.begin(), ts.end(), [&](auto& a, auto& b) {
    if (deg(a.first) != deg(b.first)) return deg(a.first) < deg(b.first);
    return a.first > b.first;
  });
  std::string out;
  for (auto& [e, c] : ts) {
    std::string mono = monomial_str(f, e, prefix);
    Int a = abs(c);
    std::string body = mono.empty() ? a.get_str() : (a == 1 ? mono : a.get_str() + "*" + mono);
    if (out.empty())
      out = (c < 0 ? "-" : "") + body;
    else
      out += (c < 0 ? "-" : "+") + body;
  }
  return out;
}

std::string pretty(const LaurentPoly& f, const std::string& prefix) {
  if (f.is_zero()) return "0";
  if (f.is_monomial()) return sum_str(f, prefix);
  Exponent common = f.terms().begin()->first;
  for (const auto& [e, c] : f.terms())
    for (size_t i = 0; i < e.size(); ++i) common[i] = std::min(common[i], e[i]);
  if (std::all_of(common.begin(), common.end(), [](long long x) { return x == 0; }))
    return sum_str(f, prefix);
  LaurentPoly rest(f.lattice());
  for (const auto& [e, c] : f.terms()) rest.add_term(sub_exp(e, common), c);
  return monomial_str(f, common, prefix) + "*(" + sum_str(rest, prefix) + ")";
}

}  // namespace grnet
