#include "grnet/cones.hpp"

#include <algorithm>
#include <functional>
#include <json.hpp>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "grnet/errors.hpp"

namespace grnet {

using nlohmann::json;

namespace {

long long gcd_of(const Exponent& m) {
  long long g = 0;
  for (long long x : m) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

long long dot(const Exponent& a, const Exponent& b) {
  long long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

Cone& Cone::canonicalize() {
  std::vector<Exponent> out;
  for (auto& m : ineqs) {
    long long g = gcd_of(m);
    if (g == 0) continue;
    Exponent c = m;
    for (auto& x : c) x /= g;
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  ineqs = std::move(out);
  return *this;
}

Cone Cone::canonical() const {
  Cone c = *this;
  return c.canonicalize();
}

bool Cone::contains(const Exponent& x) const {
  if (x.size() != ambient->size()) throw ParameterError("point does not fit the cone's ambient");
  return std::all_of(ineqs.begin(), ineqs.end(), [&](const Exponent& m) { return dot(m, x) >= 0; });
}

bool Cone::contains(long long r, const Exponent& v) const {
  Exponent x{r};
  x.insert(x.end(), v.begin(), v.end());
  return contains(x);
}

bool Cone::contains(long long r, const LatticeVector& v) const {
  Exponent x(ambient->size(), 0);
  x[0] = r;
  for (size_t i = 0; i < v.v.size(); ++i) {
    int p = ambient->index(v.lattice->label(i));
    if (p < 0) {
      if (v.v[i] != 0) throw ParameterError("point coordinate '" + v.lattice->label(i) + "' not in cone");
      continue;
    }
    x[p] = v.v[i];
  }
  return contains(x);
}

std::vector<std::string> Cone::coordinate_labels() const {
  return {ambient->labels().begin() + 1, ambient->labels().end()};
}

bool cone_equal(const Cone& a, const Cone& b) {
  return *a.ambient == *b.ambient && a.canonical().ineqs == b.canonical().ineqs;
}

Cone cone_on(const Cone& c, const LatticePtr& target, const std::vector<std::pair<std::string, std::string>>& rename) {
  std::map<std::string, std::string> ren(rename.begin(), rename.end());
  std::vector<int> pos(c.ambient->size());
  for (size_t i = 0; i < c.ambient->size(); ++i) {
    std::string l = c.ambient->label(i);
    if (auto it = ren.find(l); it != ren.end()) l = it->second;
    pos[i] = target->require(l);
  }
  Cone out{target, {}};
  for (auto& m : c.ineqs) {
    Exponent e(target->size(), 0);
    for (size_t i = 0; i < m.size(); ++i) e[pos[i]] += m[i];
    out.ineqs.push_back(e);
  }
  return out;
}

Cone pull_cone(const Cone& c, const LatticeMap& m) {
  if (!same_lattice(m.codomain(), c.ambient)) throw ParameterError("map does not land in the cone's ambient");
  Cone out{m.domain(), {}};
  auto t = m.transpose();
  for (auto& row : c.ineqs) out.ineqs.push_back(t.apply(row));
  return out;
}

std::string grid_label(int k, int n, int i, int j) {
  if (k >= 10 || n - k >= 10) return std::to_string(i) + "_" + std::to_string(j);
  return std::to_string(i) + std::to_string(j);
}

std::vector<std::string> grid_labels(int k, int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= n - k; ++j) out.push_back(grid_label(k, n, i, j));
  return out;
}

LatticePtr gt_ambient(int k, int n) {
  std::vector<std::string> l{"r"};
  for (auto& g : grid_labels(k, n)) l.push_back(g);
  return make_lattice(l);
}

Cone gt_inequalities(int k, int n) {
  if (k < 1 || n - k < 1) throw ParameterError("need 1 <= k < n");
  auto amb = gt_ambient(k, n);
  const int w = n - k;
  // coordinate of v_ij, or -1 for the zero entries on the axes
  auto at = [&](int i, int j) { return i <= 0 || j <= 0 ? -1 : 1 + (i - 1) * w + (j - 1); };
  Cone c{amb, {}};
  auto row = [&](std::initializer_list<std::pair<int, long long>> terms) {
    Exponent m(amb->size(), 0);
    for (auto [p, s] : terms)
      if (p >= 0) m[p] += s;
    c.ineqs.push_back(m);
  };
  row({{at(1, 1), 1}});
  row({{0, 1}, {at(k, w), -1}, {at(k - 1, w - 1), 1}});
  for (int i = 2; i <= k; ++i)
    for (int j = 1; j <= w; ++j) row({{at(i, j), 1}, {at(i - 1, j - 1), -1}, {at(i - 1, j), -1}, {at(i - 2, j - 1), 1}});
  for (int i = 1; i <= k; ++i)
    for (int j = 2; j <= w; ++j) row({{at(i, j), 1}, {at(i - 1, j - 1), -1}, {at(i, j - 1), -1}, {at(i - 1, j - 2), 1}});
  return c;
}

Cone cone_from_tropical(const LaurentPoly& w, const std::string& q_label, const std::string& star_label) {
  if (w.is_zero()) throw ParameterError("zero superpotential");
  const auto& lat = *w.lattice();
  const int qp = lat.require(q_label);
  const int sp = star_label.empty() ? -1 : lat.index(star_label);
  std::vector<std::string> labels{"r"};
  std::vector<int> pos(lat.size(), -1);
  pos[qp] = 0;
  for (size_t i = 0; i < lat.size(); ++i) {
    if (static_cast<int>(i) == qp || static_cast<int>(i) == sp) continue;
    pos[i] = static_cast<int>(labels.size());
    labels.push_back(lat.label(i));
  }
  Cone c{make_lattice(labels), {}};
  for (auto& [e, coeff] : w.terms()) {
    Exponent m(labels.size(), 0);
    for (size_t i = 0; i < e.size(); ++i)
      if (pos[i] >= 0) m[pos[i]] += e[i];
    c.ineqs.push_back(m);
  }
  return c;
}

// ------------------------------------------------------------ enumeration

namespace {

// c + a.x >= 0 over the first coordinates, with the original rows it came from
struct FmRow {
  Int c;
  std::vector<Int> a;
  std::vector<bool> hist;
};

void normalize(FmRow& r) {
  Int g = 0;
  for (auto& x : r.a) g = gcd(g, x);
  if (g == 0) return;
  for (auto& x : r.a) x /= g;
  // integer tightening of the constant
  r.c = r.c >= 0 ? Int(r.c / g) : Int(-((-r.c + g - 1) / g));
}

size_t popcount(const std::vector<bool>& h) { return static_cast<size_t>(std::count(h.begin(), h.end(), true)); }

}  // namespace

std::vector<Exponent> lattice_points(const Cone& c, long long r) {
  const size_t d = c.ambient->size() - 1;
  std::vector<std::vector<FmRow>> sys(d + 1);
  for (size_t t = 0; t < c.ineqs.size(); ++t) {
    FmRow row{Int(static_cast<long>(c.ineqs[t][0])) * static_cast<long>(r), {}, std::vector<bool>(c.ineqs.size(), false)};
    for (size_t i = 1; i <= d; ++i) row.a.push_back(static_cast<long>(c.ineqs[t][i]));
    row.hist[t] = true;
    sys[d].push_back(std::move(row));
  }
  // eliminate coordinates from the last one down
  for (size_t v = d; v >= 1; --v) {
    const size_t col = v - 1;
    const size_t eliminated = d - v + 1;
    std::vector<FmRow> pos, neg, next;
    for (auto& row : sys[v]) {
      if (row.a[col] > 0) pos.push_back(row);
      else if (row.a[col] < 0) neg.push_back(row);
      else next.push_back(row);
    }
    for (auto& p : pos)
      for (auto& q : neg) {
        std::vector<bool> h(p.hist.size());
        for (size_t i = 0; i < h.size(); ++i) h[i] = p.hist[i] || q.hist[i];
        if (popcount(h) > eliminated + 1) continue;
        Int fp = -q.a[col], fq = p.a[col];
        FmRow m{fp * p.c + fq * q.c, std::vector<Int>(d), h};
        for (size_t i = 0; i < d; ++i) m.a[i] = fp * p.a[i] + fq * q.a[i];
        next.push_back(std::move(m));
      }
    std::vector<FmRow> kept;
    std::set<std::pair<std::vector<Int>, Int>> seen;
    for (auto& row : next) {
      normalize(row);
      bool zero = std::all_of(row.a.begin(), row.a.end(), [](const Int& x) { return x == 0; });
      if (zero) {
        if (row.c < 0) return {};  // empty slice
        continue;
      }
      if (seen.insert({row.a, row.c}).second) kept.push_back(std::move(row));
    }
    sys[v - 1] = std::move(kept);
  }

  std::vector<Exponent> out;
  Exponent x(d, 0);
  std::function<void(size_t)> rec = [&](size_t v) {
    if (v == d) {
      if (c.contains(r, x)) out.push_back(x);
      return;
    }
    const size_t col = v;
    bool has_lo = false, has_hi = false;
    Int lo = 0, hi = 0;
    for (auto& row : sys[v + 1]) {
      const Int& a = row.a[col];
      if (a == 0) continue;
      Int rest = row.c;
      for (size_t i = 0; i < col; ++i) rest += row.a[i] * static_cast<long>(x[i]);
      if (a > 0) {
        // x >= ceil(-rest / a)
        Int b = -rest;
        Int q = b >= 0 ? Int((b + a - 1) / a) : Int(-((-b) / a));
        if (!has_lo || q > lo) lo = q, has_lo = true;
      } else {
        Int pa = -a;
        Int q = rest >= 0 ? Int(rest / pa) : Int(-((-rest + pa - 1) / pa));
        if (!has_hi || q < hi) hi = q, has_hi = true;
      }
    }
    if (!has_lo || !has_hi) throw Unbounded("coordinate '" + c.ambient->label(col + 1) + "' is unbounded on the slice");
    for (Int t = lo; t <= hi; ++t) {
      x[col] = t.get_si();
      rec(v + 1);
    }
    x[col] = 0;
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

Int weyl_dim(int k, int n, long long r) {
  if (r < 0) throw ParameterError("negative level");
  mpq_class p = 1;
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= n - k; ++j) p *= mpq_class(static_cast<long>(r + i + j - 1), static_cast<long>(i + j - 1));
  p.canonicalize();
  if (p.get_den() != 1) throw ConsistencyError("Weyl dimension is not an integer");
  return p.get_num();
}

Exponent gt_pattern(int k, int n, const KSubset& s) {
  Exponent v;
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= n - k; ++j) v.push_back(max_diag(rectangle_label(k, n, i, j), s));
  return v;
}

std::vector<KSubset> gt_decompose(int k, int n, long long r, const Exponent& v) {
  Cone c = gt_inequalities(k, n);
  if (v.size() + 1 != c.ambient->size()) throw ParameterError("pattern has the wrong size");
  if (r < 0 || !c.contains(r, v)) throw ParameterError("pattern is not in the GT cone at level " + std::to_string(r));
  auto subs = all_subsets(k, n);
  std::vector<Exponent> pats;
  for (auto& s : subs) pats.push_back(gt_pattern(k, n, s));
  std::vector<KSubset> out;
  Exponent rest = v;
  for (long long t = r; t >= 1; --t) {
    bool found = false;
    for (size_t a = 0; a < subs.size() && !found; ++a) {
      Exponent diff = rest;
      for (size_t i = 0; i < diff.size(); ++i) diff[i] -= pats[a][i];
      if (c.contains(t - 1, diff)) {
        out.push_back(subs[a]);
        rest = diff;
        found = true;
      }
    }
    if (!found) throw ConsistencyError("GT pattern admits no peel at level " + std::to_string(t));
  }
  if (std::any_of(rest.begin(), rest.end(), [](long long x) { return x != 0; }))
    throw ConsistencyError("GT decomposition does not sum back to the pattern");
  return out;
}

std::vector<LatticeVector> no_body_level1(const Seed& s) {
  auto lat = s.quiver.lattice_no_star();
  std::vector<LatticeVector> out;
  for (auto& i : all_subsets(s.k, s.n)) {
    auto kv = kappa_vector(s, i);
    Exponent e;
    for (size_t v = 0; v < kv.v.size(); ++v)
      if (static_cast<int>(v) != s.star()) e.push_back(kv.v[v]);
    out.emplace_back(lat, e);
  }
  return out;
}

std::vector<size_t> body_membership_check(const std::vector<LatticeVector>& pts, const Cone& c, long long r) {
  std::vector<size_t> bad;
  for (size_t i = 0; i < pts.size(); ++i)
    if (!c.contains(r, pts[i])) bad.push_back(i);
  return bad;
}

namespace {

size_t affine_rank(const std::vector<Exponent>& pts) {
  if (pts.size() < 2) return 0;
  std::vector<std::vector<mpq_class>> rows;
  for (size_t i = 1; i < pts.size(); ++i) {
    std::vector<mpq_class> r;
    for (size_t j = 0; j < pts[i].size(); ++j) r.emplace_back(static_cast<long>(pts[i][j] - pts[0][j]));
    rows.push_back(std::move(r));
  }
  size_t rank = 0;
  const size_t cols = pts[0].size();
  for (size_t col = 0; col < cols && rank < rows.size(); ++col) {
    size_t p = rank;
    while (p < rows.size() && rows[p][col] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (size_t q = 0; q < rows.size(); ++q) {
      if (q == rank || rows[q][col] == 0) continue;
      mpq_class f = rows[q][col] / rows[rank][col];
      for (size_t j = col; j < cols; ++j) rows[q][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

Exponent on_cone(const Cone& c, const LatticeVector& p) {
  Exponent x(c.ambient->size() - 1, 0);
  for (size_t i = 0; i < p.v.size(); ++i) x[c.ambient->require(p.lattice->label(i)) - 1] = p.v[i];
  return x;
}

}  // namespace

HullReport hull_matches_slice(const std::vector<LatticeVector>& pts, const Cone& c, long long r) {
  HullReport rep;
  std::vector<Exponent> xs;
  for (auto& p : pts) xs.push_back(on_cone(c, p));
  rep.inside = std::all_of(xs.begin(), xs.end(), [&](const Exponent& x) { return c.contains(r, x); });
  if (!rep.inside) rep.diagnostics.push_back("a point lies outside the slice");
  const size_t dim = c.ambient->size() - 1;
  rep.facets_tight = true;
  for (auto& m : c.canonical().ineqs) {
    std::vector<Exponent> tight;
    for (auto& x : xs) {
      Exponent full{r};
      full.insert(full.end(), x.begin(), x.end());
      if (dot(m, full) == 0) tight.push_back(x);
    }
    if (affine_rank(tight) + 1 < dim) {
      rep.facets_tight = false;
      std::ostringstream os;
      os << "inequality [";
      for (size_t i = 0; i < m.size(); ++i) os << (i ? " " : "") << m[i];
      os << "] is tight at affine rank " << affine_rank(tight) << " < " << dim - 1;
      rep.diagnostics.push_back(os.str());
    }
  }
  auto all = lattice_points(c, r);
  std::set<Exponent> given(xs.begin(), xs.end());
  rep.same_points = std::set<Exponent>(all.begin(), all.end()) == given;
  if (!rep.same_points)
    rep.diagnostics.push_back("slice has " + std::to_string(all.size()) + " lattice points, " +
                              std::to_string(given.size()) + " given");
  return rep;
}

std::vector<LatticeVector> trop_mutate_points(const Quiver& q, int j, const std::vector<LatticeVector>& pts) {
  std::vector<LatticeVector> out;
  for (auto& p : pts) {
    Exponent full(q.size(), 0);
    std::vector<int> where(p.v.size(), -1);
    for (size_t i = 0; i < p.v.size(); ++i) {
      int v = q.index(p.lattice->label(i));
      if (v < 0) continue;  // level slot or foreign coordinate
      full[v] = p.v[i];
      where[i] = v;
    }
    Exponent m = trop_a_mutate(q, j, full);
    LatticeVector np = p;
    for (size_t i = 0; i < p.v.size(); ++i)
      if (where[i] >= 0) np.v[i] = m[where[i]];
    out.push_back(std::move(np));
  }
  return out;
}

std::string cone_to_json(const Cone& c) {
  json j;
  j["ambient"] = c.ambient->labels();
  j["ineqs"] = json::array();
  for (auto& m : c.ineqs) {
    json row = json::object();
    for (size_t i = 0; i < m.size(); ++i)
      if (m[i]) row[c.ambient->label(i)] = m[i];
    j["ineqs"].push_back(row);
  }
  return j.dump();
}

Cone cone_from_json(const std::string& text) {
  try {
    json j = json::parse(text);
    Cone c{make_lattice(j.at("ambient").get<std::vector<std::string>>()), {}};
    for (auto& row : j.at("ineqs")) {
      Exponent m(c.ambient->size(), 0);
      for (auto& [k, v] : row.items()) m[c.ambient->require(k)] = v.get<long long>();
      c.ineqs.push_back(m);
    }
    return c;
  } catch (const json::exception& e) {
    throw ParameterError(std::string("bad cone json: ") + e.what());
  }
}

std::string points_to_json(const std::vector<LatticeVector>& pts) {
  json j = json::array();
  for (auto& p : pts) {
    json row = json::object();
    for (size_t i = 0; i < p.v.size(); ++i) row[p.lattice->label(i)] = p.v[i];
    j.push_back(row);
  }
  return j.dump();
}

std::string points_to_csv(const std::vector<LatticeVector>& pts) {
  std::ostringstream os;
  if (pts.empty()) return "";
  const auto& labels = pts[0].lattice->labels();
  for (size_t i = 0; i < labels.size(); ++i) os << (i ? "," : "") << labels[i];
  os << "\n";
  for (auto& p : pts) {
    for (size_t i = 0; i < p.v.size(); ++i) os << (i ? "," : "") << p.v[i];
    os << "\n";
  }
  return os.str();
}

}  // namespace grnet
