#include <algorithm>
#include <map>
#include <set>

#include "grnet/errors.hpp"
#include "grnet/plabic.hpp"

namespace grnet {

namespace {

Color flip(Color c) { return c == Color::Black ? Color::White : Color::Black; }

// new label S u ({a,b,c,d} \ {a,c}) from the four neighbouring labels
std::optional<KSubset> exchanged_label(const KSubset& old, const std::vector<KSubset>& nbrs) {
  if (nbrs.size() != 4) return std::nullopt;
  const int n = old.n();
  std::vector<int> count(n + 1, 0);
  for (auto& s : nbrs)
    for (int x : s.elems()) ++count[x];
  std::vector<int> out;
  for (int x = 1; x <= n; ++x) {
    if (count[x] == 4) out.push_back(x);
    else if (count[x] == 2 && !old.contains(x)) out.push_back(x);
    else if (count[x] != 0 && count[x] != 2) return std::nullopt;
  }
  if (static_cast<int>(out.size()) != old.k()) return std::nullopt;
  return KSubset(n, out);
}

}  // namespace

SquareMove square_move_full(const PlabicModel& m, int face, bool check) {
  if (face < 0 || face >= static_cast<int>(m.faces().size())) throw ParameterError("no such face");
  const Face& f = m.faces()[face];
  if (f.boundary) throw NotMutable("face " + m.face_name(face) + " is on the rim");
  if (f.darts.size() != 4) throw NotMutable("face " + m.face_name(face) + " is not a quadrilateral");

  std::vector<PlabicNode> nodes = m.nodes();
  std::vector<PlabicEdge> edges = m.edges();
  // square vertices v[t] and edges s[t] from v[t] to v[t+1]
  int v[4], s[4], from[4];
  for (int t = 0; t < 4; ++t) {
    s[t] = f.darts[t].edge;
    from[t] = f.darts[t].from;
    v[t] = edges[s[t]].end[from[t]].index;
  }
  if (std::set<int>(v, v + 4).size() != 4) throw NotMutable("face " + m.face_name(face) + " repeats a vertex");
  for (int t = 0; t < 4; ++t)
    if (nodes[v[t]].rot.size() < 3) throw NotMutable("square vertex " + nodes[v[t]].id + " has no outer leg");

  int next_id = 0;
  for (auto& e : edges) next_id = std::max(next_id, e.id);
  std::set<std::string> ids;
  for (auto& x : nodes) ids.insert(x.id);
  int fresh = 1;
  auto fresh_node = [&]() {
    while (ids.count("u" + std::to_string(fresh))) ++fresh;
    ids.insert("u" + std::to_string(fresh));
    return "u" + std::to_string(fresh);
  };

  int u[4], link[4];
  for (int t = 0; t < 4; ++t) {
    u[t] = static_cast<int>(nodes.size());
    nodes.push_back({fresh_node(), flip(nodes[v[t]].color), {}});
  }
  for (int t = 0; t < 4; ++t) {
    link[t] = static_cast<int>(edges.size());
    PlabicEdge e;
    e.id = ++next_id;
    e.end[0] = {false, v[t]};
    e.end[1] = {false, u[t]};
    edges.push_back(e);
  }
  for (int t = 0; t < 4; ++t) {
    const int prev = (t + 3) % 4;
    // at v[t] the square edges sit as ..., s[t], s[prev], ... ; the link
    // takes their place
    auto& rot = nodes[v[t]].rot;
    auto it = std::find(rot.begin(), rot.end(), s[t]);
    *it = link[t];
    rot.erase(std::find(rot.begin(), rot.end(), s[prev]));
    nodes[u[t]].rot = {s[t], s[prev], link[t]};
  }
  for (int t = 0; t < 4; ++t) {
    edges[s[t]].end[from[t]] = {false, u[t]};
    edges[s[t]].end[1 - from[t]] = {false, u[(t + 1) % 4]};
  }

  // remove v[t] when it is left bivalent
  std::vector<bool> dead_node(nodes.size(), false), dead_edge(edges.size(), false);
  std::set<int> square(v, v + 4);
  for (int t = 0; t < 4; ++t) {
    auto& rot = nodes[v[t]].rot;
    if (rot.size() != 2) continue;
    int leg = rot[0] == link[t] ? rot[1] : rot[0];
    auto& le = edges[leg];
    int ls = le.end[0].boundary || le.end[0].index != v[t] ? 0 : 1;
    if (le.end[ls].boundary) {
      // rim leg: hand it over to u[t]
      auto& ur = nodes[u[t]].rot;
      *std::find(ur.begin(), ur.end(), link[t]) = leg;
      le.end[1 - ls] = {false, u[t]};
      dead_node[v[t]] = true;
      dead_edge[link[t]] = true;
      continue;
    }
    int x = le.end[ls].index;
    if (square.count(x)) throw NotMutable("outer leg joins two square vertices");
    auto& xr = nodes[x].rot;
    auto pos = std::find(xr.begin(), xr.end(), leg);
    const int prev = (t + 3) % 4;
    pos = xr.erase(pos);
    xr.insert(pos, {s[t], s[prev]});
    for (int e : {s[t], s[prev]})
      for (auto& en : edges[e].end)
        if (!en.boundary && en.index == u[t]) en.index = x;
    dead_node[v[t]] = dead_node[u[t]] = true;
    dead_edge[leg] = dead_edge[link[t]] = true;
  }

  // compact
  std::vector<int> node_map(nodes.size(), -1), edge_map(edges.size(), -1);
  std::vector<PlabicNode> nn;
  std::vector<PlabicEdge> ne;
  for (size_t x = 0; x < nodes.size(); ++x)
    if (!dead_node[x]) node_map[x] = static_cast<int>(nn.size()), nn.push_back(nodes[x]);
  std::vector<int> order;
  for (size_t e = 0; e < edges.size(); ++e)
    if (!dead_edge[e]) order.push_back(static_cast<int>(e));
  std::sort(order.begin(), order.end(), [&](int a, int b) { return edges[a].id < edges[b].id; });
  for (int e : order) {
    edge_map[e] = static_cast<int>(ne.size());
    PlabicEdge ed = edges[e];
    for (auto& en : ed.end)
      if (!en.boundary) en.index = node_map[en.index];
    ne.push_back(ed);
  }
  for (auto& x : nn)
    for (auto& r : x.rot) r = edge_map[r];

  SquareMove out{PlabicModel(m.k(), m.n(), std::move(nn), std::move(ne)), {}};
  PlabicModel& r = out.model;

  // carry faces across by dart identity (edge id, slot)
  out.face_map.assign(m.faces().size(), -1);
  for (size_t g = 0; g < m.faces().size(); ++g) {
    for (const Dart& d : m.faces()[g].darts) {
      int e2 = r.edge_index(m.edges()[d.edge].id);
      if (e2 < 0) continue;
      int h = r.face_of({e2, d.from});
      if (out.face_map[g] != -1 && out.face_map[g] != h)
        throw ConsistencyError("square move: face split by surgery");
      out.face_map[g] = h;
    }
    if (out.face_map[g] == -1) throw ConsistencyError("square move: face lost in surgery");
  }
  if (std::set<int>(out.face_map.begin(), out.face_map.end()).size() != out.face_map.size())
    throw ConsistencyError("square move: faces merged by surgery");

  for (size_t g = 0; g < m.faces().size(); ++g) {
    const auto& lab = m.faces()[g].label;
    if (!lab) continue;
    if (static_cast<int>(g) != face) {
      r.set_label(out.face_map[g], *lab);
      continue;
    }
    std::vector<KSubset> nbrs;
    for (const Dart& d : f.darts) {
      const auto& nl = m.faces()[m.face_of({d.edge, 1 - d.from})].label;
      if (nl) nbrs.push_back(*nl);
    }
    auto nl = exchanged_label(*lab, nbrs);
    if (!nl) throw InvariantViolation("square labels are S+ab, S+bc, S+cd, S+ad", m.face_name(face));
    r.set_label(out.face_map[g], *nl);
  }
  if (m.star() >= 0) r.set_star(out.face_map[m.star()]);
  if (r.labelled())
    for (size_t a = 0; a < r.faces().size(); ++a)
      for (size_t b = a + 1; b < r.faces().size(); ++b)
        if (!weakly_separated(*r.faces()[a].label, *r.faces()[b].label))
          throw InvariantViolation("face labels weakly separated", r.face_name(static_cast<int>(a)) + " vs " +
                                                                       r.face_name(static_cast<int>(b)));

  if (check) {
    if (positroid(r) != positroid(m)) throw InvariantViolation("square move keeps the positroid", m.face_name(face));
    Quiver before = fz_mutate(m.dual_quiver(), face);
    Quiver after = r.dual_quiver();
    // compare in the old face order
    std::vector<std::vector<int>> b(before.size(), std::vector<int>(before.size()));
    for (size_t i = 0; i < before.size(); ++i)
      for (size_t j = 0; j < before.size(); ++j) b[i][j] = after.b(out.face_map[i], out.face_map[j]);
    std::vector<bool> fr;
    for (size_t i = 0; i < before.size(); ++i) fr.push_back(after.frozen(out.face_map[i]));
    Quiver pulled(before.names(), fr, b, before.star());
    if (!mutable_part_equal(before, pulled))
      throw InvariantViolation("square move mutates the dual quiver", m.face_name(face));
  }
  return out;
}

PlabicModel square_move(const PlabicModel& m, int face, bool check) {
  return square_move_full(m, face, check).model;
}

}  // namespace grnet
