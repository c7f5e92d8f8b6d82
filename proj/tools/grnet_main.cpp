// grnet: command-line front end to the library.
//
// exit codes: 0 ok, 1 verification failure, 2 usage, 3 invalid model or
// broken invariant

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "grnet/charts.hpp"
#include "grnet/cones.hpp"
#include "grnet/errors.hpp"
#include "grnet/plabic.hpp"
#include "grnet/seeds.hpp"
#include "grnet/superpotential.hpp"
#include "grnet/verify.hpp"

using namespace grnet;
using nlohmann::json;

namespace {

struct Options {
  std::string format = "pretty";
  std::string order;
  std::string mutations;
  std::string kn;
  int level = -1;
  std::string model;
  std::string subset;
  std::string vertex;
  std::string suite;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

std::pair<int, int> parse_kn(const std::string& s) {
  auto p = split(s, ',');
  if (p.size() != 2) throw UsageError("--kn expects k,n");
  try {
    return {std::stoi(p[0]), std::stoi(p[1])};
  } catch (const std::exception&) {
    throw UsageError("--kn expects k,n");
  }
}

PlabicModel load(const std::string& spec) {
  if (spec.empty()) throw UsageError("no model given");
  if (is_builtin(spec)) return builtin_model(spec);
  std::ifstream in(spec);
  if (!in) throw UsageError("cannot read model file '" + spec + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return load_model(ss.str());
}

// model with the --mutations square moves applied
PlabicModel load_moved(const Options& o) {
  PlabicModel m = load(o.model);
  for (auto& v : split(o.mutations, ',')) {
    int f = face_by_name(m, v);
    if (f < 0) throw UsageError("no face '" + v + "'");
    m = square_move(m, f);
  }
  return m;
}

std::pair<int, int> kn_of(const Options& o) {
  if (!o.kn.empty()) return parse_kn(o.kn);
  if (!o.model.empty()) {
    auto m = load(o.model);
    return {m.k(), m.n()};
  }
  throw UsageError("give --kn k,n or a model");
}

KSubset subset(const PlabicModel& m, const std::string& s) {
  KSubset i = KSubset::parse(s, m.n());
  if (i.k() != m.k()) throw UsageError("subset '" + s + "' does not have " + std::to_string(m.k()) + " elements");
  return i;
}

json vector_json(const LatticeVector& v) {
  json j = json::object();
  for (size_t i = 0; i < v.v.size(); ++i) j[v.lattice->label(i)] = v.v[i];
  return j;
}

std::string vector_csv(const LatticeVector& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.v.size(); ++i) os << (i ? "," : "") << v.lattice->label(i);
  os << "\n";
  for (size_t i = 0; i < v.v.size(); ++i) os << (i ? "," : "") << v.v[i];
  os << "\n";
  return os.str();
}

std::string poly_csv(const LaurentPoly& f) {
  std::ostringstream os;
  os << "coeff";
  for (auto& l : f.lattice()->labels()) os << "," << l;
  os << "\n";
  for (auto& [e, c] : f.terms()) {
    os << c.get_str();
    for (long long x : e) os << "," << x;
    os << "\n";
  }
  return os.str();
}

void emit_poly(const Options& o, const LaurentPoly& f, const std::string& prefix) {
  if (o.format == "json") std::cout << to_json(f) << "\n";
  else if (o.format == "csv") std::cout << poly_csv(f);
  else std::cout << pretty(f, prefix) << "\n";
}

void emit_vector(const Options& o, const LatticeVector& v) {
  if (o.format == "json") std::cout << vector_json(v).dump() << "\n";
  else if (o.format == "csv") std::cout << vector_csv(v);
  else std::cout << v.str() << "\n";
}

// a/b + c/d with numerator and denominator monomials
std::string fraction_sum(const LaurentPoly& f, const std::string& prefix, const std::string& keep) {
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : f.terms()) {
    std::string num, den;
    for (size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      const std::string& l = f.lattice()->label(i);
      std::string var = (l == keep ? l : prefix + l);
      long long a = e[i] < 0 ? -e[i] : e[i];
      std::string piece = var + (a > 1 ? "^" + std::to_string(a) : "");
      std::string& dst = e[i] > 0 ? num : den;
      dst += (dst.empty() ? "" : "*") + piece;
    }
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << c.get_str() << "*";
    os << (num.empty() ? "1" : num);
    if (!den.empty()) os << "/(" << den << ")";
  }
  return first ? "0" : os.str();
}

std::string seed_pretty(const Seed& s) {
  std::ostringstream os;
  const auto& q = s.quiver;
  for (size_t v = 0; v < q.size(); ++v) {
    os << q.name(static_cast<int>(v));
    if (q.frozen(static_cast<int>(v))) os << " frozen";
    if (static_cast<int>(v) == q.star()) os << " star";
    os << "\n";
  }
  for (size_t a = 0; a < q.size(); ++a)
    for (size_t b = 0; b < q.size(); ++b)
      if (q.b(static_cast<int>(a), static_cast<int>(b)) > 0)
        os << q.name(static_cast<int>(a)) << " -> " << q.name(static_cast<int>(b))
           << (q.b(static_cast<int>(a), static_cast<int>(b)) > 1 ? " x" + std::to_string(q.b(static_cast<int>(a), static_cast<int>(b))) : "")
           << "\n";
  return os.str();
}

Seed mutated_seed(const Options& o, const Seed& start) {
  Seed s = start;
  for (auto& v : split(o.mutations, ',')) {
    int j = vertex_by_name(s, v);
    if (j < 0) throw UsageError("no vertex '" + v + "'");
    try {
      s = mutate_labels(s, j);
    } catch (const NotPlabicMutable&) {
      s = mutate_unlabelled(s, j);
    }
  }
  return s;
}

int cmd_matchings(const Options& o) {
  auto m = load_moved(o);
  std::optional<KSubset> filter;
  if (!o.subset.empty()) filter = subset(m, o.subset);
  auto ms = enumerate_matchings(m, filter);
  json j = json::array();
  for (auto& mt : ms) {
    std::vector<int> ids;
    for (int e : mt.edges) ids.push_back(m.edges()[e].id);
    std::string bv = boundary_value(m, mt).str();
    if (o.format == "json") {
      j.push_back({{"boundary", bv}, {"edges", ids}});
    } else {
      std::cout << bv << (o.format == "csv" ? "," : " :");
      for (size_t i = 0; i < ids.size(); ++i) std::cout << (o.format == "csv" && i == 0 ? "" : " ") << ids[i];
      std::cout << "\n";
    }
  }
  if (o.format == "json") std::cout << j.dump() << "\n";
  return 0;
}

int cmd_partition(const Options& o) {
  auto m = load_moved(o);
  emit_poly(o, partition_function(m, subset(m, o.subset)), "x");
  return 0;
}

int cmd_flow(const Options& o) {
  auto m = load_moved(o);
  emit_poly(o, flow_polynomial(m, subset(m, o.subset)), "y");
  return 0;
}

int cmd_valuation(const Options& o) {
  auto m = load_moved(o);
  auto f = flow_polynomial(m, subset(m, o.subset));
  if (f.is_zero()) throw UsageError("subset " + o.subset + " is not in the positroid");
  emit_vector(o, valuation(f, split(o.order, ',')));
  return 0;
}

int cmd_kappa(const Options& o) {
  auto m = load_moved(o);
  Seed s = seed_of(m);
  auto v = kappa_vector(s, subset(m, o.subset));
  if (o.format == "pretty" && o.mutations.empty() && o.model.rfind("rect:", 0) == 0) {
    // the rectangles grid, row i = 1..k, star entry first
    const int k = m.k(), n = m.n();
    std::cout << "star " << v.v[s.star()] << "\n";
    for (int i = 1; i <= k; ++i) {
      for (int j = 1; j <= n - k; ++j)
        std::cout << (j > 1 ? " " : "") << v.v[s.vertex_of(rectangle_label(k, n, i, j))];
      std::cout << "\n";
    }
    return 0;
  }
  emit_vector(o, v);
  return 0;
}

int cmd_mutate(const Options& o) {
  Seed s = mutated_seed(o, seed_of(load(o.model)));
  if (o.format == "json") std::cout << seed_to_json(s) << "\n";
  else std::cout << seed_pretty(s);
  return 0;
}

int cmd_xcheck(const Options& o) {
  auto m = load_moved(o);
  int f = face_by_name(m, o.vertex);
  if (f < 0) throw UsageError("no face '" + o.vertex + "'");
  auto sm = square_move_full(m, f);
  auto ch = network_charts(m), ch2 = network_charts(sm.model);
  auto q = m.dual_quiver();
  bool ok = true;
  for (auto& [i, fnew] : ch2.flow) {
    auto back = x_mutate(q, f, fnew);
    bool same = back == ch.flow.at(i);
    ok = ok && same;
    std::cout << (same ? "PASS " : "FAIL ") << i.str() << " " << pretty(fnew, "y") << " -> " << pretty(back, "y") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_gt_cone(const Options& o) {
  auto [k, n] = kn_of(o);
  Cone c = gt_inequalities(k, n);
  if (o.level >= 0) {
    auto pts = lattice_points(c, o.level);
    std::vector<LatticeVector> lv;
    auto lat = make_lattice(c.coordinate_labels());
    for (auto& p : pts) lv.emplace_back(lat, p);
    if (o.format == "json") std::cout << points_to_json(lv) << "\n";
    else if (o.format == "csv") std::cout << points_to_csv(lv);
    else
      for (auto& p : lv) std::cout << p.str() << "\n";
    return 0;
  }
  if (o.format == "json") {
    std::cout << cone_to_json(c) << "\n";
    return 0;
  }
  for (auto& m : c.ineqs) {
    std::string s;
    for (size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      s += (m[i] < 0 ? " - " : (s.empty() ? "" : " + "));
      long long a = m[i] < 0 ? -m[i] : m[i];
      if (a != 1) s += std::to_string(a) + "*";
      s += (i == 0 ? "r" : "v" + c.ambient->label(i));
    }
    if (o.format == "csv") {
      for (size_t i = 0; i < m.size(); ++i) std::cout << (i ? "," : "") << m[i];
      std::cout << "\n";
    } else {
      std::cout << s << " >= 0\n";
    }
  }
  return 0;
}

int cmd_no_body(const Options& o) {
  auto m = load(o.model);
  Seed s = seed_of(m);
  auto pts = no_body_level1(s);
  for (auto& v : split(o.mutations, ',')) {
    int j = vertex_by_name(s, v);
    if (j < 0) throw UsageError("no vertex '" + v + "'");
    pts = trop_mutate_points(s.quiver, j, pts);
    try {
      s = mutate_labels(s, j);
    } catch (const NotPlabicMutable&) {
      s = mutate_unlabelled(s, j);
    }
    auto lat = s.quiver.lattice_no_star();
    for (auto& p : pts) p = LatticeVector(lat, p.v);
  }
  if (o.format == "json") std::cout << points_to_json(pts) << "\n";
  else if (o.format == "csv") std::cout << points_to_csv(pts);
  else {
    auto subs = all_subsets(s.k, s.n);
    for (size_t i = 0; i < pts.size(); ++i) std::cout << subs[i].str() << " " << pts[i].str() << "\n";
  }
  return 0;
}

int cmd_superpotential(const Options& o) {
  auto [k, n] = kn_of(o);
  LaurentPoly w = w_rectangles(k, n);
  if (!o.mutations.empty()) {
    Seed s = seed_of(build_rectangles_model(k, n));
    w = w_on_seed(s, k, n);
    for (auto& v : split(o.mutations, ',')) {
      int j = vertex_by_name(s, v);
      if (j < 0) throw UsageError("no vertex '" + v + "'");
      auto r = a_mutate_w(s, w, j);
      s = r.seed;
      w = r.w;
    }
  }
  if (o.format == "json") std::cout << to_json(w) << "\n";
  else if (o.format == "csv") std::cout << poly_csv(w);
  else std::cout << fraction_sum(w, "p", "q") << "\n";
  return 0;
}

int cmd_wx(const Options& o) {
  auto [k, n] = kn_of(o);
  emit_poly(o, w_x_rectangles(k, n), "x");
  return 0;
}

int cmd_verify(const Options& o) {
  std::vector<std::string> suites = o.suite == "all" ? suite_names() : std::vector<std::string>{o.suite};
  PlabicModel m;
  if (!o.model.empty()) m = load_moved(o);
  else if (!o.kn.empty()) {
    auto [k, n] = parse_kn(o.kn);
    m = build_rectangles_model(k, n);
  } else {
    m = build_rectangles_model(2, 4);
  }
  bool ok = true;
  for (auto& name : suites) {
    auto known = suite_names();
    if (std::find(known.begin(), known.end(), name) == known.end()) throw UsageError("unknown suite '" + name + "'");
    auto r = run_suite(name, m, o.level < 0 ? 2 : o.level);
    ok = ok && r.pass;
    if (!r.skipped.empty()) {
      std::cout << "SKIP " << r.suite << " " << r.instance << ": " << r.skipped << "\n";
      continue;
    }
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.suite << " " << r.instance << " (" << r.checks << " checks)";
    if (!r.pass) std::cout << ": " << r.counterexample;
    std::cout << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"grnet: plabic networks, cluster charts and GT cones"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
  app.add_option("--order", o.order, "tie-break order for valuations, label,...");
  app.add_option("--mutations", o.mutations, "mutation path v1,v2,...");
  app.add_option("--level", o.level, "level r");
  app.add_option("--kn", o.kn, "Grassmannian k,n");

  std::map<CLI::App*, std::function<int(const Options&)>> run;
  auto sub = [&](const std::string& name, const std::string& help, std::function<int(const Options&)> fn) {
    auto* s = app.add_subcommand(name, help);
    run[s] = std::move(fn);
    return s;
  };
  auto model_arg = [&](CLI::App* s, bool required) {
    auto* opt = s->add_option("model", o.model, "builtin (shark, rect:k,n) or model file");
    if (required) opt->required();
  };

  auto* s = sub("matchings", "perfect matchings, optionally with a given boundary value", cmd_matchings);
  model_arg(s, true);
  s->add_option("subset", o.subset, "boundary value");
  s = sub("partition", "partition function P_I", cmd_partition);
  model_arg(s, true);
  s->add_option("subset", o.subset)->required();
  s = sub("flow", "flow polynomial F_I", cmd_flow);
  model_arg(s, true);
  s->add_option("subset", o.subset)->required();
  s = sub("valuation", "minimal exponent of F_I", cmd_valuation);
  model_arg(s, true);
  s->add_option("subset", o.subset)->required();
  s = sub("kappa", "kappa vector of M_I", cmd_kappa);
  model_arg(s, true);
  s->add_option("subset", o.subset)->required();
  s = sub("mutate", "seed after the --mutations path", cmd_mutate);
  model_arg(s, true);
  s = sub("xcheck", "X-mutation check for one square move", cmd_xcheck);
  model_arg(s, true);
  s->add_option("vertex", o.vertex)->required();
  s = sub("gt-cone", "GT inequalities, or lattice points with --level", cmd_gt_cone);
  model_arg(s, false);
  s = sub("no-body", "level-1 kappa points", cmd_no_body);
  model_arg(s, true);
  s = sub("superpotential", "superpotential in rectangle variables", cmd_superpotential);
  model_arg(s, false);
  s = sub("wx", "superpotential in simples variables", cmd_wx);
  model_arg(s, false);
  s = sub("verify", "run a verification suite", cmd_verify);
  s->add_option("suite", o.suite)->required();
  model_arg(s, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    for (auto& [cmd, fn] : run)
      if (cmd->parsed()) return fn(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
