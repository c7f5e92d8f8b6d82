#include "grnet/charts.hpp"

#include <algorithm>

#include "grnet/errors.hpp"

namespace grnet {

namespace {

Exponent drop_star(const PlabicModel& m, const Exponent& w) {
  Exponent out;
  for (size_t f = 0; f < w.size(); ++f)
    if (static_cast<int>(f) != m.star()) out.push_back(w[f]);
  return out;
}

LaurentPoly edge_monomial(const PlabicModel& m, const LatticePtr& lat, const Matching& mt) {
  Exponent e(lat->size(), 0);
  for (int x : mt.edges) e[x] = 1;
  return LaurentPoly::monomial(lat, e);
}

void check_flow_poly(const LaurentPoly& f, const KSubset& i) {
  if (f.is_zero()) return;
  for (auto& [e, c] : f.terms())
    for (long long x : e)
      if (x < 0) throw InvariantViolation("flow polynomial exponents are non-negative", i.str());
  auto lo = lp_min_exponent(f), hi = lp_max_exponent(f);
  if (!lo.unique || f.coeff(lo.exp) != 1)
    throw InvariantViolation("flow polynomial has a unique minimal term", i.str());
  if (!hi.unique || f.coeff(hi.exp) != 1)
    throw InvariantViolation("flow polynomial has a unique maximal term", i.str());
}

LaurentPoly flows_route(const PlabicModel& m, const LatticePtr& lat, const KSubset& i) {
  LaurentPoly f(lat);
  for (auto& fl : flows(m, i)) f.add_term(drop_star(m, flow_weight(m, fl).v), 1);
  return f;
}

}  // namespace

LaurentPoly partition_function(const PlabicModel& m, const KSubset& i) {
  auto lat = m.edge_lattice();
  LaurentPoly p(lat);
  for (auto& mt : enumerate_matchings(m, i)) p += edge_monomial(m, lat, mt);
  return p;
}

LaurentPoly flow_polynomial(const PlabicModel& m, const KSubset& i) {
  auto lat = m.face_lattice_no_star();
  LaurentPoly a(lat);
  for (auto& mt : enumerate_matchings(m, i)) a.add_term(drop_star(m, weight_of_matching(m, mt).v), 1);
  if (!(a == flows_route(m, lat, i)))
    throw ConsistencyError("flow polynomial of " + i.str() + ": matching and flow routes disagree");
  check_flow_poly(a, i);
  return a;
}

NetworkCharts network_charts(const PlabicModel& m) {
  auto elat = m.edge_lattice();
  auto flat = m.face_lattice_no_star();
  NetworkCharts out;
  for (auto& mt : enumerate_matchings(m)) {
    KSubset b = boundary_value(m, mt);
    auto [pit, p_new] = out.partition.try_emplace(b, elat);
    pit->second += edge_monomial(m, elat, mt);
    auto [fit, f_new] = out.flow.try_emplace(b, flat);
    fit->second.add_term(drop_star(m, weight_of_matching(m, mt).v), 1);
  }
  for (auto& [i, f] : out.flow) {
    if (!(f == flows_route(m, flat, i)))
      throw ConsistencyError("flow polynomial of " + i.str() + ": matching and flow routes disagree");
    check_flow_poly(f, i);
  }
  return out;
}

LatticeVector valuation(const LaurentPoly& f, const std::vector<std::string>& order) {
  if (f.is_zero()) throw ParameterError("valuation of the zero polynomial");
  return LatticeVector(f.lattice(), lp_min_exponent(f, order).exp);
}

namespace {

// coordinate position of f's lattice -> q_old vertex
std::vector<int> resolve_coords(const Quiver& q, int j, const LatticePtr& lat, LatticePtr& target) {
  if (lat->size() == q.size()) target = q.lattice();
  else if (lat->size() + 1 == q.size() && q.star() >= 0) target = q.lattice_no_star();
  else throw ParameterError("polynomial lattice does not fit the quiver");
  std::vector<int> vert(lat->size(), -1);
  int unknown = -1;
  for (size_t c = 0; c < lat->size(); ++c) {
    int v = q.index(lat->label(c));
    if (v < 0) {
      if (unknown >= 0) throw ParameterError("more than one unknown coordinate '" + lat->label(c) + "'");
      unknown = static_cast<int>(c);
      v = j;
    }
    vert[c] = v;
  }
  std::vector<int> seen(q.size(), 0);
  for (int v : vert)
    if (seen[v]++) throw ParameterError("coordinate names map twice to vertex " + q.name(v));
  if (std::find(vert.begin(), vert.end(), j) == vert.end())
    throw ParameterError("mutated vertex missing from polynomial lattice");
  return vert;
}

// position of vertex v inside target
int target_pos(const Quiver& q, const LatticePtr& target, int v) { return target->require(q.name(v)); }

}  // namespace

// Variable convention: with c = b(i,j) of the old quiver,
//   s'_j -> x^{-s_j}
//   s'_i -> x^{s_i} (1 + x^{s_j})^{c}           for c >= 0
//   s'_i -> x^{s_i} (1 + x^{-s_j})^{c}          for c < 0
// and the negative case is written x^{s_i - c s_j} (1 + x^{s_j})^{c}.
LaurentPoly x_mutate(const Quiver& q_old, int j, const LaurentPoly& f) {
  if (j < 0 || j >= static_cast<int>(q_old.size())) throw ParameterError("vertex out of range");
  if (q_old.frozen(j)) throw NotMutable("vertex " + q_old.name(j) + " is frozen");
  LatticePtr target;
  auto vert = resolve_coords(q_old, j, f.lattice(), target);
  const int jp = target_pos(q_old, target, j);
  std::vector<Exponent> monos;
  std::vector<long long> powers;
  for (size_t c = 0; c < vert.size(); ++c) {
    const int v = vert[c];
    Exponent e(target->size(), 0);
    if (v == j) {
      e[jp] = -1;
      monos.push_back(e);
      powers.push_back(0);
      continue;
    }
    const int b = q_old.b(v, j);
    e[target_pos(q_old, target, v)] = 1;
    if (b < 0) e[jp] -= b;
    monos.push_back(e);
    powers.push_back(b);
  }
  Exponent zero(target->size(), 0), xj(target->size(), 0);
  xj[jp] = 1;
  LaurentPoly g = LaurentPoly::monomial(target, zero) + LaurentPoly::monomial(target, xj);
  return substitute_with_factor(f, target, monos, powers, g);
}

LaurentPoly x_mutate_variable(const Quiver& q_old, int j, int i) {
  auto lat = q_old.lattice();
  return x_mutate(q_old, j, LaurentPoly::variable(lat, lat->label(i)));
}

std::string PluckerTriple::str() const {
  return s.str() + "|" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," +
         std::to_string(d);
}

std::vector<PluckerTriple> plucker_triples(int k, int n) {
  std::vector<PluckerTriple> out;
  if (k < 2 || n - k < 2) return out;
  for (auto& s : all_subsets(k - 2, n)) {
    std::vector<int> rest;
    for (int x = 1; x <= n; ++x)
      if (!s.contains(x)) rest.push_back(x);
    const size_t r = rest.size();
    for (size_t p = 0; p < r; ++p)
      for (size_t q = p + 1; q < r; ++q)
        for (size_t u = q + 1; u < r; ++u)
          for (size_t w = u + 1; w < r; ++w) out.push_back({s, rest[p], rest[q], rest[u], rest[w]});
  }
  return out;
}

bool plucker_holds(const std::map<KSubset, LaurentPoly>& chart, const LatticePtr& lat, const PluckerTriple& t) {
  auto get = [&](int x, int y) {
    std::vector<int> e = t.s.elems();
    e.push_back(x);
    e.push_back(y);
    auto it = chart.find(KSubset(t.s.n(), e));
    return it == chart.end() ? LaurentPoly(lat) : it->second;
  };
  LaurentPoly lhs = get(t.a, t.c) * get(t.b, t.d);
  LaurentPoly rhs = get(t.a, t.b) * get(t.c, t.d) + get(t.a, t.d) * get(t.b, t.c);
  return lhs == rhs;
}

namespace {

PluckerReport verify_with(const PlabicModel& m, const NetworkCharts& ch, const std::vector<PluckerTriple>& ts) {
  PluckerReport r;
  auto elat = m.edge_lattice();
  auto flat = m.face_lattice_no_star();
  for (auto& t : ts) {
    ++r.checked;
    if (!plucker_holds(ch.partition, elat, t)) r.failures.push_back("P:" + t.str());
    if (!plucker_holds(ch.flow, flat, t)) r.failures.push_back("F:" + t.str());
  }
  return r;
}

}  // namespace

PluckerReport plucker_verify(const PlabicModel& m) {
  return verify_with(m, network_charts(m), plucker_triples(m.k(), m.n()));
}

PluckerReport plucker_verify(const PlabicModel& m, const PluckerTriple& t) {
  return verify_with(m, network_charts(m), {t});
}

}  // namespace grnet
