#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <queue>

#include "grnet/errors.hpp"
#include "grnet/plabic.hpp"

namespace grnet {

namespace {

int other_node(const PlabicEdge& e, int x) {
  for (int s = 0; s < 2; ++s)
    if (e.end[s].boundary || e.end[s].index != x) return e.end[s].boundary ? -1 : e.end[s].index;
  return -1;
}

void cover(const PlabicModel& m, std::vector<char>& used, std::vector<int>& chosen,
           std::vector<Matching>& out) {
  const auto& nodes = m.nodes();
  int best = -1;
  std::vector<int> best_opts;
  for (size_t x = 0; x < nodes.size(); ++x) {
    if (used[x]) continue;
    std::vector<int> opts;
    for (int e : nodes[x].rot) {
      int y = other_node(m.edges()[e], static_cast<int>(x));
      if (y == -1 || !used[y]) opts.push_back(e);
    }
    if (opts.empty()) return;
    if (best == -1 || opts.size() < best_opts.size()) best = static_cast<int>(x), best_opts = std::move(opts);
  }
  if (best == -1) {
    Matching mt{chosen};
    std::sort(mt.edges.begin(), mt.edges.end());
    out.push_back(std::move(mt));
    return;
  }
  for (int e : best_opts) {
    int y = other_node(m.edges()[e], best);
    used[best] = 1;
    if (y != -1) used[y] = 1;
    chosen.push_back(e);
    cover(m, used, chosen, out);
    chosen.pop_back();
    used[best] = 0;
    if (y != -1) used[y] = 0;
  }
}

}  // namespace

std::vector<Matching> enumerate_matchings(const PlabicModel& m, const std::optional<KSubset>& filter) {
  std::vector<char> used(m.nodes().size(), 0);
  std::vector<int> chosen;
  std::vector<Matching> all;
  cover(m, used, chosen, all);
  std::sort(all.begin(), all.end());
  if (!filter) return all;
  std::vector<Matching> out;
  for (auto& mt : all)
    if (boundary_value(m, mt) == *filter) out.push_back(mt);
  return out;
}

KSubset boundary_value(const PlabicModel& m, const Matching& mt) {
  std::vector<int> out;
  for (int b = 1; b <= m.n(); ++b) {
    int e = m.boundary_edge(b);
    bool in = std::binary_search(mt.edges.begin(), mt.edges.end(), e);
    if ((m.color_at(e) == Color::White) == in) out.push_back(b);
  }
  return KSubset(m.n(), out);
}

std::set<KSubset> positroid(const PlabicModel& m) {
  std::set<KSubset> out;
  for (auto& mt : enumerate_matchings(m)) out.insert(boundary_value(m, mt));
  return out;
}

Matching base_matching(const PlabicModel& m) {
  if (!m.cache_) throw ParameterError("empty model");
  std::call_once(m.cache_->once, [&] {
    auto all = enumerate_matchings(m);
    if (all.empty()) throw InvariantViolation("model has a matching", "none found");
    KSubset best = boundary_value(m, all[0]);
    for (auto& mt : all) best = std::max(best, boundary_value(m, mt));
    std::vector<Matching> top;
    for (auto& mt : all)
      if (boundary_value(m, mt) == best) top.push_back(mt);
    if (top.size() != 1)
      throw InvariantViolation("unique matching at the lex-maximal boundary value",
                               std::to_string(top.size()) + " matchings with boundary " + best.str());
    m.cache_->base = top[0];
  });
  return m.cache_->base;
}

namespace {

// Solve w(left) - w(right) = c(e) or w(head) - w(tail) = c(a) by a search
// from the star face; `rel` lists (from, to, delta) meaning w(to) = w(from) + delta.
Exponent solve_from_star(const PlabicModel& m, const std::vector<std::array<long long, 3>>& rel,
                         const char* what) {
  if (m.star() < 0) throw ParameterError("model has no star face");
  const size_t nf = m.faces().size();
  std::vector<std::vector<std::pair<int, long long>>> adj(nf);
  for (auto& [a, b, d] : rel) {
    adj[a].emplace_back(static_cast<int>(b), d);
    adj[b].emplace_back(static_cast<int>(a), -d);
  }
  Exponent w(nf, 0);
  std::vector<bool> seen(nf, false);
  std::queue<int> q;
  q.push(m.star());
  seen[m.star()] = true;
  while (!q.empty()) {
    int f = q.front();
    q.pop();
    for (auto& [g, d] : adj[f])
      if (!seen[g]) seen[g] = true, w[g] = w[f] + d, q.push(g);
  }
  for (auto& [a, b, d] : rel)
    if (w[b] - w[a] != d) throw InvariantViolation(what, "coboundary equation has no solution");
  return w;
}

}  // namespace

LatticeVector weight_of_matching(const PlabicModel& m, const Matching& mt) {
  const Matching base = base_matching(m);
  std::vector<char> in(m.edges().size(), 0), in_base(m.edges().size(), 0);
  for (int e : mt.edges) in[e] = 1;
  for (int e : base.edges) in_base[e] = 1;
  std::vector<std::array<long long, 3>> rel;
  for (auto& a : m.arrows()) rel.push_back({a.tail, a.head, in_base[a.edge] - in[a.edge]});
  Exponent w = solve_from_star(m, rel, "matching weight");
  for (size_t f = 0; f < w.size(); ++f)
    if (w[f] < 0) throw InvariantViolation("matching weights are non-negative", m.face_name(static_cast<int>(f)));
  return LatticeVector(m.face_lattice(), w);
}

Dart oriented_dart(const PlabicModel& m, const Matching& base, int edge) {
  int w = m.white_side(edge);
  bool in = std::binary_search(base.edges.begin(), base.edges.end(), edge);
  // base matching edges run white to black, the others black to white
  return in ? Dart{edge, w} : Dart{edge, 1 - w};
}

Flow flow_of_matching(const PlabicModel& m, const Matching& mt) {
  const Matching base = base_matching(m);
  Flow f;
  std::set_symmetric_difference(mt.edges.begin(), mt.edges.end(), base.edges.begin(), base.edges.end(),
                                std::back_inserter(f.edges));
  return f;
}

std::vector<Flow> flows(const PlabicModel& m, const KSubset& target) {
  if (target.n() != m.n() || target.k() != m.k()) throw ParameterError("subset has wrong (k,n)");
  const Matching base = base_matching(m);
  const KSubset star = boundary_value(m, base);
  const size_t ne = m.edges().size();
  std::vector<int> state(ne, -1);  // -1 open, 0 unused, 1 used
  for (int b = 1; b <= m.n(); ++b) {
    int e = m.boundary_edge(b);
    bool use = target.contains(b) != star.contains(b);
    state[e] = use ? 1 : 0;
  }
  // head node of each oriented edge (or -1 at the rim)
  std::vector<int> head(ne), tail(ne);
  for (size_t e = 0; e < ne; ++e) {
    Dart d = oriented_dart(m, base, static_cast<int>(e));
    const auto& ed = m.edges()[e];
    tail[e] = ed.end[d.from].boundary ? -1 : ed.end[d.from].index;
    head[e] = ed.end[1 - d.from].boundary ? -1 : ed.end[1 - d.from].index;
  }
  const auto& nodes = m.nodes();
  std::vector<Flow> out;
  std::function<void(size_t)> visit = [&](size_t x) {
    if (x == nodes.size()) {
      Flow f;
      for (size_t e = 0; e < ne; ++e)
        if (state[e] == 1) f.edges.push_back(static_cast<int>(e));
      out.push_back(std::move(f));
      return;
    }
    std::vector<int> ins, outs;
    for (int e : nodes[x].rot) (head[e] == static_cast<int>(x) ? ins : outs).push_back(e);
    auto consistent = [&](int ein, int eout) {
      for (int e : nodes[x].rot) {
        bool chosen = e == ein || e == eout;
        if (state[e] != -1 && state[e] != static_cast<int>(chosen)) return false;
      }
      return true;
    };
    auto apply = [&](int ein, int eout, std::vector<int>& touched) {
      for (int e : nodes[x].rot)
        if (state[e] == -1) state[e] = (e == ein || e == eout), touched.push_back(e);
    };
    std::vector<std::pair<int, int>> options{{-1, -1}};
    for (int a : ins)
      for (int b : outs) options.emplace_back(a, b);
    for (auto [a, b] : options) {
      if (!consistent(a, b)) continue;
      std::vector<int> touched;
      apply(a, b, touched);
      visit(x + 1);
      for (int e : touched) state[e] = -1;
    }
  };
  visit(0);
  std::sort(out.begin(), out.end());
  return out;
}

LatticeVector flow_weight(const PlabicModel& m, const Flow& f) {
  const Matching base = base_matching(m);
  std::vector<char> in(m.edges().size(), 0);
  for (int e : f.edges) in[e] = 1;
  std::vector<std::array<long long, 3>> rel;
  for (size_t e = 0; e < m.edges().size(); ++e) {
    Dart d = oriented_dart(m, base, static_cast<int>(e));
    int left = m.face_of(d), right = m.face_of({d.edge, 1 - d.from});
    rel.push_back({right, left, in[e]});
  }
  return LatticeVector(m.face_lattice(), solve_from_star(m, rel, "flow weight"));
}

}  // namespace grnet
