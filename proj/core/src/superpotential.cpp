#include "grnet/superpotential.hpp"

#include <map>

#include "grnet/errors.hpp"
#include "grnet/plabic.hpp"

namespace grnet {

namespace {

void check_kn(int k, int n) {
  if (k < 1 || n - k < 1) throw ParameterError("need 1 <= k < n");
}

std::string p_label(int k, int n, int i, int j) { return i <= 0 || j <= 0 ? "0" : grid_label(k, n, i, j); }

}  // namespace

LatticePtr w_lattice(int k, int n) {
  check_kn(k, n);
  std::vector<std::string> l{"q", "0"};
  for (auto& g : grid_labels(k, n)) l.push_back(g);
  return make_lattice(l);
}

LatticePtr simples_lattice(int k, int n) {
  check_kn(k, n);
  std::vector<std::string> l{"0"};
  for (auto& g : grid_labels(k, n)) l.push_back(g);
  return make_lattice(l);
}

LaurentPoly w_rectangles(int k, int n) {
  auto lat = w_lattice(k, n);
  const int w = n - k;
  LaurentPoly out(lat);
  auto term = [&](std::initializer_list<std::pair<std::string, long long>> fs) {
    Exponent e(lat->size(), 0);
    for (auto& [l, p] : fs) e[lat->require(l)] += p;
    out.add_term(e, 1);
  };
  auto p = [&](int i, int j) { return p_label(k, n, i, j); };
  term({{p(1, 1), 1}, {"0", -1}});
  for (int i = 1; i <= k; ++i)
    for (int j = 2; j <= w; ++j) term({{p(i, j), 1}, {p(i - 1, j - 2), 1}, {p(i - 1, j - 1), -1}, {p(i, j - 1), -1}});
  term({{"q", 1}, {p(k - 1, w - 1), 1}, {p(k, w), -1}});
  for (int i = 2; i <= k; ++i)
    for (int j = 1; j <= w; ++j) term({{p(i, j), 1}, {p(i - 2, j - 1), 1}, {p(i - 1, j - 1), -1}, {p(i - 1, j), -1}});
  return out;
}

LaurentPoly quotient_f_polynomial(const Uniserial& m, const LatticePtr& lat) {
  LaurentPoly f(lat);
  Exponent e(lat->size(), 0);
  f.add_term(e, 1);
  for (auto it = m.factors.rbegin(); it != m.factors.rend(); ++it) {
    e[lat->require(*it)] += 1;
    f.add_term(e, 1);
  }
  return f;
}

std::pair<int, int> projective_position(int k, int n, int s) {
  check_kn(k, n);
  if (s < 1 || s > n) throw ParameterError("boundary index out of range");
  if (s == n) return {0, 0};
  if (s <= n - k) return {k, s};
  return {n - s, n - k};
}

Uniserial ext_module(int k, int n, int s) {
  check_kn(k, n);
  Uniserial m;
  if (0 < s && s < n - k)
    for (int i = 1; i <= k - 1; ++i) m.factors.push_back(grid_label(k, n, i, s));
  else if (n - k < s && s < n)
    for (int j = 1; j <= n - k - 1; ++j) m.factors.push_back(grid_label(k, n, n - s, j));
  return m;
}

LaurentPoly w_x_rectangles(int k, int n) {
  auto lat = simples_lattice(k, n);
  LaurentPoly out(lat);
  for (int s = 1; s <= n; ++s) {
    auto [i, j] = projective_position(k, n, s);
    auto x = LaurentPoly::variable(lat, p_label(k, n, i, j));
    out += x * quotient_f_polynomial(ext_module(k, n, s), lat);
  }
  return out;
}

namespace {

// seed vertex of each simples_lattice coordinate
std::vector<int> grid_vertices(const Seed& s, int k, int n) {
  std::vector<int> out;
  auto at = [&](const KSubset& l) {
    int v = s.vertex_of(l);
    if (v < 0) throw ParameterError("seed has no vertex labelled " + l.str());
    return v;
  };
  out.push_back(at(interval(n, 1, k)));
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= n - k; ++j) out.push_back(at(rectangle_label(k, n, i, j)));
  return out;
}

std::string describe(const Exponent& e, const LatticePtr& lat) { return LatticeVector(lat, e).str(); }

}  // namespace

WFormulaReport verify_wformula(int k, int n) {
  check_kn(k, n);
  // with k = 1 or n-k = 1 every vertex is frozen and beta is not defined
  if (k < 2 || n - k < 2) throw ParameterError("W-formula needs 2 <= k <= n-2");
  Seed s = seed_of(build_rectangles_model(k, n));
  auto gv = grid_vertices(s, k, n);
  LatticeMap beta = beta_matrix(s);
  const auto [ji, jj] = projective_position(k, n, n - k);
  const int jstar = s.vertex_of(rectangle_label(k, n, ji, jj));

  std::vector<std::string> out_labels{"q"};
  for (auto& g : grid_labels(k, n)) out_labels.push_back(g);
  auto out_lat = make_lattice(out_labels);

  WFormulaReport rep;
  rep.transported = LaurentPoly(out_lat);
  auto wx = w_x_rectangles(k, n);
  for (auto& [x, c] : wx.terms()) {
    // X on seed vertices
    Exponent xv(s.quiver.size(), 0);
    for (size_t t = 0; t < x.size(); ++t) xv[gv[t]] += x[t];
    Exponent e(out_lat->size(), 0);
    e[0] = xv[jstar];
    // grid coordinate t >= 1 sits at seed vertex gv[t]; the star (t = 0) is dropped
    for (size_t t = 1; t < gv.size(); ++t) {
      long long p = 0;
      for (size_t u = 0; u < xv.size(); ++u) p -= beta.at(u, gv[t]) * xv[u];
      e[t] = p;
    }
    rep.transported.add_term(e, c);
  }
  rep.expected = project(w_rectangles(k, n), out_lat);
  rep.ok = rep.transported == rep.expected;
  if (!rep.ok) {
    for (auto& [e, c] : rep.expected.terms())
      if (rep.transported.coeff(e) != c) rep.diffs.push_back("missing " + describe(e, out_lat));
    for (auto& [e, c] : rep.transported.terms())
      if (rep.expected.coeff(e) != c) rep.diffs.push_back("extra " + describe(e, out_lat));
  }
  return rep;
}

LaurentPoly w_on_seed(const Seed& rect, int k, int n) {
  auto gv = grid_vertices(rect, k, n);
  std::vector<std::string> labels{"q"};
  for (auto& nm : rect.quiver.names()) labels.push_back(nm);
  auto lat = make_lattice(labels);
  auto w = w_rectangles(k, n);
  LaurentPoly out(lat);
  for (auto& [e, c] : w.terms()) {
    Exponent f(lat->size(), 0);
    f[0] = e[0];
    for (size_t t = 1; t < e.size(); ++t) f[1 + gv[t - 1]] += e[t];
    out.add_term(f, c);
  }
  return out;
}

MutatedW a_mutate_w(const Seed& s, const LaurentPoly& w, int j) {
  if (j < 0 || j >= static_cast<int>(s.quiver.size())) throw ParameterError("vertex out of range");
  if (s.quiver.frozen(j)) throw NotMutable("vertex " + s.quiver.name(j) + " is frozen");
  Seed r;
  try {
    r = mutate_labels(s, j);
  } catch (const NotPlabicMutable&) {
    r = mutate_unlabelled(s, j);
  }
  const auto& lat = *w.lattice();
  std::vector<int> vert(lat.size(), -1);
  std::vector<std::string> labels;
  for (size_t c = 0; c < lat.size(); ++c) {
    if (lat.label(c) == "q") {
      labels.push_back("q");
      continue;
    }
    vert[c] = s.quiver.require(lat.label(c));
    labels.push_back(r.quiver.name(vert[c]));
  }
  auto target = make_lattice(labels);
  std::vector<int> coord(s.quiver.size(), -1);
  for (size_t c = 0; c < vert.size(); ++c)
    if (vert[c] >= 0) coord[vert[c]] = static_cast<int>(c);
  if (coord[j] < 0) throw ParameterError("mutated vertex missing from superpotential lattice");

  Exponent in(target->size(), 0), out(target->size(), 0);
  for (auto [i, m] : s.quiver.in_arrows(j)) {
    if (coord[i] < 0) throw ParameterError("neighbour " + s.quiver.name(i) + " missing from lattice");
    in[coord[i]] += m;
  }
  for (auto [i, m] : s.quiver.out_arrows(j)) {
    if (coord[i] < 0) throw ParameterError("neighbour " + s.quiver.name(i) + " missing from lattice");
    out[coord[i]] += m;
  }
  LaurentPoly g = LaurentPoly::monomial(target, in) + LaurentPoly::monomial(target, out);
  std::vector<Exponent> monos;
  std::vector<long long> powers;
  for (size_t c = 0; c < vert.size(); ++c) {
    Exponent e(target->size(), 0);
    if (vert[c] == j) {
      e[c] = -1;
      powers.push_back(1);
    } else {
      e[c] = 1;
      powers.push_back(0);
    }
    monos.push_back(e);
  }
  return {r, substitute_with_factor(w, target, monos, powers, g)};
}

Cone gvector_cone_ineqs(int k, int n) {
  Seed s = seed_of(build_rectangles_model(k, n));
  auto gv = grid_vertices(s, k, n);
  Cone c{s.quiver.lattice(), {}};
  const auto wx = w_x_rectangles(k, n);
  for (auto& [x, coeff] : wx.terms()) {
    Exponent m(s.quiver.size(), 0);
    for (size_t t = 0; t < x.size(); ++t) m[gv[t]] += x[t];
    c.ineqs.push_back(m);
  }
  return c;
}

}  // namespace grnet
