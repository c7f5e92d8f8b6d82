#include "grnet/verify.hpp"

#include <random>
#include <regex>

#include "grnet/charts.hpp"
#include "grnet/cones.hpp"
#include "grnet/errors.hpp"
#include "grnet/superpotential.hpp"

namespace grnet {

bool is_builtin(const std::string& spec) {
  static const std::regex rect(R"(rect:\d+,\d+)");
  return spec == "shark" || std::regex_match(spec, rect);
}

PlabicModel builtin_model(const std::string& spec) {
  if (spec == "shark") return shark_model();
  std::smatch mt;
  static const std::regex rect(R"(rect:(\d+),(\d+))");
  if (std::regex_match(spec, mt, rect)) return build_rectangles_model(std::stoi(mt[1]), std::stoi(mt[2]));
  throw ParameterError("unknown builtin model '" + spec + "'");
}

int face_by_name(const PlabicModel& m, const std::string& name) {
  for (size_t f = 0; f < m.faces().size(); ++f)
    if (m.face_name(static_cast<int>(f)) == name) return static_cast<int>(f);
  try {
    int f = m.find_face(KSubset::parse(name, m.n()));
    if (f >= 0) return f;
  } catch (const Error&) {
  }
  try {
    return m.find_face(name);
  } catch (const Error&) {
    return -1;
  }
}

int vertex_by_name(const Seed& s, const std::string& name) {
  int v = s.quiver.index(name);
  if (v >= 0) return v;
  try {
    return s.vertex_of(KSubset::parse(name, s.n));
  } catch (const Error&) {
    return -1;
  }
}

std::vector<std::string> suite_names() {
  return {"plucker", "valuation-kappa", "xflow", "trop-a", "gt-trop", "wformula", "weyl-count", "exact-seq"};
}

namespace {

std::string instance_of(const PlabicModel& m) {
  return "Gr(" + std::to_string(m.k()) + "," + std::to_string(m.n()) + ")";
}

// internal quadrilaterals on which the square move goes through
std::vector<std::pair<int, SquareMove>> square_moves(const PlabicModel& m) {
  std::vector<std::pair<int, SquareMove>> out;
  for (size_t f = 0; f < m.faces().size(); ++f) {
    const auto& face = m.faces()[f];
    if (face.boundary || face.darts.size() != 4) continue;
    try {
      out.emplace_back(static_cast<int>(f), square_move_full(m, static_cast<int>(f)));
    } catch (const NotMutable&) {
    }
  }
  return out;
}

Exponent no_star(const Seed& s, const Exponent& v) {
  Exponent out;
  for (size_t i = 0; i < v.size(); ++i)
    if (static_cast<int>(i) != s.star()) out.push_back(v[i]);
  return out;
}

void fail(SuiteResult& r, const std::string& what) {
  if (r.pass) r.counterexample = what;
  r.pass = false;
}

void valuation_kappa_on(const PlabicModel& m, const std::string& where, SuiteResult& r) {
  Seed s = seed_of(m);
  auto ch = network_charts(m);
  for (auto& [i, f] : ch.flow) {
    ++r.checks;
    auto val = valuation(f);
    auto kap = no_star(s, kappa_vector(s, i).v);
    if (val.v != kap) fail(r, where + " I=" + i.str() + ": valuation " + val.str() + " vs kappa " + LatticeVector(val.lattice, kap).str());
  }
}

}  // namespace

SuiteResult check_valuation_kappa(const PlabicModel& m) {
  SuiteResult r{"valuation-kappa", instance_of(m)};
  valuation_kappa_on(m, "seed", r);
  for (auto& [f, sm] : square_moves(m)) valuation_kappa_on(sm.model, "after move at " + m.face_name(f), r);
  return r;
}

SuiteResult check_xflow(const PlabicModel& m) {
  SuiteResult r{"xflow", instance_of(m)};
  auto ch = network_charts(m);
  Quiver q = m.dual_quiver();
  for (auto& [f, sm] : square_moves(m)) {
    auto ch2 = network_charts(sm.model);
    if (ch2.flow.size() != ch.flow.size()) fail(r, "positroid changed at " + m.face_name(f));
    for (auto& [i, fnew] : ch2.flow) {
      ++r.checks;
      auto back = x_mutate(q, f, fnew);
      if (!(back == ch.flow.at(i)))
        fail(r, "move at " + m.face_name(f) + ", I=" + i.str() + ": " + pretty(back, "y") + " vs " + pretty(ch.flow.at(i), "y"));
    }
  }
  return r;
}

SuiteResult check_trop_a(const PlabicModel& m, size_t random_vectors, unsigned seed) {
  SuiteResult r{"trop-a", instance_of(m)};
  Seed s = seed_of(m);
  auto subsets = all_subsets(m.k(), m.n());
  auto muts = s.quiver.mutable_vertices();
  for (int j : muts) {
    Seed t;
    try {
      t = mutate_labels(s, j);
    } catch (const NotPlabicMutable&) {
      continue;
    }
    for (auto& i : subsets) {
      ++r.checks;
      auto lhs = trop_a_mutate(s.quiver, j, kappa_vector(s, i).v);
      auto rhs = kappa_vector(t, i).v;
      if (lhs != rhs) fail(r, "vertex " + s.quiver.name(j) + ", I=" + i.str());
    }
  }
  if (!muts.empty()) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long long> coord(-5, 5);
    std::uniform_int_distribution<size_t> pick(0, muts.size() - 1);
    for (size_t t = 0; t < random_vectors; ++t) {
      ++r.checks;
      int j = muts[pick(rng)];
      Exponent v(s.quiver.size());
      for (auto& x : v) x = coord(rng);
      auto back = trop_a_mutate(fz_mutate(s.quiver, j), j, trop_a_mutate(s.quiver, j, v));
      if (back != v) fail(r, "involution fails at " + s.quiver.name(j) + " on " + LatticeVector(s.quiver.lattice(), v).str());
    }
  }
  return r;
}

SuiteResult check_exact_sequence(const Seed& s) {
  SuiteResult r{"exact-seq", "Gr(" + std::to_string(s.k) + "," + std::to_string(s.n) + ")"};
  LatticeMap beta(s.quiver.lattice(), s.quiver.lattice());
  try {
    beta = beta_matrix(s);
  } catch (const InvariantViolation& e) {
    fail(r, e.what());
    return r;
  }
  ++r.checks;
  auto w = wt_maps(s);
  auto wb = w.wt.compose(beta);
  auto rb = w.rk.compose(beta);
  const size_t n = s.quiver.size();
  for (size_t c = 0; c < n; ++c) {
    if (rb.at(0, c) != 0) fail(r, "rk o beta nonzero at " + s.quiver.name(static_cast<int>(c)));
    if (static_cast<int>(c) == s.star()) continue;
    size_t row = 0;
    for (size_t v = 0; v < n; ++v) {
      if (static_cast<int>(v) == s.star()) continue;
      long long want = v == c ? -1 : 0;
      ++r.checks;
      if (wb.at(row, c) != want)
        fail(r, "wt o beta at (" + s.quiver.name(static_cast<int>(v)) + "," + s.quiver.name(static_cast<int>(c)) + ")");
      ++row;
    }
  }
  return r;
}

SuiteResult run_suite(const std::string& suite, const PlabicModel& m, int max_level) {
  const int k = m.k(), n = m.n();
  if (suite == "plucker") {
    SuiteResult r{suite, instance_of(m)};
    auto rep = plucker_verify(m);
    r.checks = rep.checked;
    if (!rep.ok()) fail(r, rep.failures.front());
    return r;
  }
  if (suite == "valuation-kappa") return check_valuation_kappa(m);
  if (suite == "xflow") return check_xflow(m);
  if (suite == "trop-a") return check_trop_a(m);
  if (suite == "exact-seq") {
    if (positroid(m).size() != all_subsets(k, n).size()) {
      SuiteResult r{suite, instance_of(m)};
      r.skipped = "positroid is not the top cell";
      return r;
    }
    if (m.dual_quiver().mutable_vertices().empty()) {
      SuiteResult r{suite, instance_of(m)};
      r.skipped = "no mutable vertex";
      return r;
    }
    SuiteResult r = check_exact_sequence(seed_of(m));
    for (auto& [f, sm] : square_moves(m)) {
      auto t = check_exact_sequence(seed_of(sm.model));
      r.checks += t.checks;
      if (!t.pass) fail(r, "after move at " + m.face_name(f) + ": " + t.counterexample);
    }
    return r;
  }
  if (suite == "gt-trop") {
    SuiteResult r{suite, instance_of(m), true, 1};
    if (!cone_equal(gt_inequalities(k, n), cone_from_tropical(w_rectangles(k, n), "q", "0")))
      fail(r, "GT inequalities and Trop(W) differ");
    return r;
  }
  if (suite == "wformula") {
    SuiteResult r{suite, instance_of(m), true, 1};
    auto rep = verify_wformula(k, n);
    r.checks = rep.expected.size();
    if (!rep.ok) fail(r, rep.diffs.empty() ? "mismatch" : rep.diffs.front());
    return r;
  }
  if (suite == "weyl-count") {
    SuiteResult r{suite, instance_of(m)};
    auto c = gt_inequalities(k, n);
    for (int lvl = 0; lvl <= max_level; ++lvl) {
      ++r.checks;
      auto pts = lattice_points(c, lvl);
      Int d = weyl_dim(k, n, lvl);
      if (Int(static_cast<unsigned long>(pts.size())) != d)
        fail(r, "level " + std::to_string(lvl) + ": " + std::to_string(pts.size()) + " points, dimension " + d.get_str());
    }
    return r;
  }
  throw ParameterError("unknown suite '" + suite + "'");
}

}  // namespace grnet
