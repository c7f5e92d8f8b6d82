#include <algorithm>
#include <map>
#include <mutex>
#include <queue>
#include <sstream>

#include "grnet/errors.hpp"
#include "grnet/plabic.hpp"

namespace grnet {

PlabicModel::PlabicModel(int k, int n, std::vector<PlabicNode> nodes, std::vector<PlabicEdge> edges)
    : k_(k), n_(n), nodes_(std::move(nodes)), edges_(std::move(edges)),
      cache_(std::make_shared<Cache>()) {
  if (n < 1 || k < 0 || k > n) throw InvariantViolation("valid (k,n)", "k=" + std::to_string(k) + " n=" + std::to_string(n));

  std::set<std::string> node_ids;
  for (auto& x : nodes_)
    if (!node_ids.insert(x.id).second) throw InvariantViolation("distinct node ids", x.id);

  std::set<int> edge_ids;
  boundary_edge_.assign(n + 1, -1);
  std::vector<std::vector<int>> incident(nodes_.size());
  for (size_t e = 0; e < edges_.size(); ++e) {
    const auto& ed = edges_[e];
    if (!edge_ids.insert(ed.id).second) throw InvariantViolation("distinct edge ids", std::to_string(ed.id));
    if (ed.end[0].boundary && ed.end[1].boundary)
      throw InvariantViolation("edge has an internal end", "edge " + std::to_string(ed.id));
    for (int s = 0; s < 2; ++s) {
      const auto& en = ed.end[s];
      if (en.boundary) {
        if (en.index < 1 || en.index > n)
          throw InvariantViolation("boundary labels in 1..n", "edge " + std::to_string(ed.id));
        if (boundary_edge_[en.index] != -1)
          throw InvariantViolation("boundary labels used once", "label " + std::to_string(en.index));
        boundary_edge_[en.index] = static_cast<int>(e);
      } else {
        if (en.index < 0 || en.index >= static_cast<int>(nodes_.size()))
          throw InvariantViolation("edge ends exist", "edge " + std::to_string(ed.id));
        incident[en.index].push_back(static_cast<int>(e));
      }
    }
    if (!ed.end[0].boundary && !ed.end[1].boundary) {
      if (ed.end[0].index == ed.end[1].index)
        throw InvariantViolation("no loops", "edge " + std::to_string(ed.id));
      if (nodes_[ed.end[0].index].color == nodes_[ed.end[1].index].color)
        throw InvariantViolation("bipartite", "edge " + std::to_string(ed.id));
    }
  }
  for (int b = 1; b <= n; ++b)
    if (boundary_edge_[b] == -1) throw InvariantViolation("every boundary label present", std::to_string(b));

  for (size_t x = 0; x < nodes_.size(); ++x) {
    auto rot = nodes_[x].rot, inc = incident[x];
    std::sort(rot.begin(), rot.end());
    std::sort(inc.begin(), inc.end());
    if (rot != inc) throw InvariantViolation("rotation lists incident edges", nodes_[x].id);
    if (rot.size() < 2) throw InvariantViolation("degree at least 2", nodes_[x].id);
  }

  // connected through internal edges
  if (!nodes_.empty()) {
    std::vector<bool> seen(nodes_.size(), false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int e : nodes_[x].rot)
        for (auto& en : edges_[e].end)
          if (!en.boundary && !seen[en.index]) seen[en.index] = true, q.push(en.index);
    }
    for (size_t x = 0; x < nodes_.size(); ++x)
      if (!seen[x]) throw InvariantViolation("connected", "node " + nodes_[x].id + " unreachable");
  }

  int white = 0, black = 0, black_rim = 0;
  for (auto& x : nodes_) (x.color == Color::White ? white : black)++;
  for (int b = 1; b <= n; ++b)
    if (color_at(boundary_edge_[b]) == Color::Black) ++black_rim;
  if (white - black + black_rim != k)
    throw InvariantViolation("helicity equals k", "computed " + std::to_string(white - black + black_rim));

  trace_faces();
  const int expect = static_cast<int>(edges_.size()) - static_cast<int>(nodes_.size()) + 1;
  if (static_cast<int>(faces_.size()) != expect)
    throw InvariantViolation("planar disc (Euler count)",
                             std::to_string(faces_.size()) + " faces, expected " + std::to_string(expect));
  validate_quiver();
}

int PlabicModel::edge_index(int id) const {
  for (size_t e = 0; e < edges_.size(); ++e)
    if (edges_[e].id == id) return static_cast<int>(e);
  return -1;
}

int PlabicModel::boundary_edge(int label) const {
  if (label < 1 || label > n_) throw ParameterError("boundary label out of range");
  return boundary_edge_[label];
}

Color PlabicModel::color_at(int edge) const {
  const auto& ed = edges_[edge];
  return nodes_[ed.end[ed.end[0].boundary ? 1 : 0].index].color;
}

int PlabicModel::white_side(int edge) const {
  const auto& ed = edges_[edge];
  for (int s = 0; s < 2; ++s)
    if (!ed.end[s].boundary && nodes_[ed.end[s].index].color == Color::White) return s;
  // rim edge at a black node: the rim end plays the white role
  return ed.end[0].boundary ? 0 : 1;
}

static int slot_of_node(const PlabicEdge& e, int node) {
  for (int s = 0; s < 2; ++s)
    if (!e.end[s].boundary && e.end[s].index == node) return s;
  return -1;
}

static int slot_of_rim(const PlabicEdge& e) { return e.end[0].boundary ? 0 : 1; }

void PlabicModel::trace_faces() {
  const size_t m = edges_.size();
  dart_face_.assign(m, {-1, -1});
  std::vector<Face> raw;
  for (size_t e0 = 0; e0 < m; ++e0)
    for (int s0 = 0; s0 < 2; ++s0) {
      if (dart_face_[e0][s0] != -1) continue;
      Face f;
      Dart d{static_cast<int>(e0), s0};
      const int fi = static_cast<int>(raw.size());
      while (dart_face_[d.edge][d.from] == -1) {
        dart_face_[d.edge][d.from] = fi;
        f.darts.push_back(d);
        const auto& ed = edges_[d.edge];
        const EdgeEnd& at = ed.end[1 - d.from];
        if (at.boundary) {
          f.boundary = true;
          int prev = at.index == 1 ? n_ : at.index - 1;
          int e2 = boundary_edge_[prev];
          d = Dart{e2, slot_of_rim(edges_[e2])};
        } else {
          const auto& rot = nodes_[at.index].rot;
          int deg = static_cast<int>(rot.size());
          int p = static_cast<int>(std::find(rot.begin(), rot.end(), d.edge) - rot.begin());
          int e2 = rot[(p - 1 + deg) % deg];
          d = Dart{e2, slot_of_node(edges_[e2], at.index)};
        }
      }
      if (!(d == f.darts.front()))
        throw InvariantViolation("rotation system consistent", "face walk does not close");
      raw.push_back(std::move(f));
    }
  for (auto& f : raw) {
    std::vector<int> ids;
    for (auto& d : f.darts) ids.push_back(edges_[d.edge].id);
    auto mn = std::min_element(ids.begin(), ids.end()) - ids.begin();
    std::rotate(f.darts.begin(), f.darts.begin() + mn, f.darts.end());
    std::rotate(ids.begin(), ids.begin() + mn, ids.end());
    f.edge_ids = ids;
  }
  std::vector<int> order(raw.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return raw[a].edge_ids < raw[b].edge_ids; });
  std::vector<int> where(raw.size());
  faces_.clear();
  for (size_t i = 0; i < order.size(); ++i) {
    where[order[i]] = static_cast<int>(i);
    faces_.push_back(std::move(raw[order[i]]));
  }
  for (auto& df : dart_face_)
    for (auto& x : df) x = where[x];

  arrows_.clear();
  for (size_t e = 0; e < m; ++e) {
    int w = white_side(static_cast<int>(e));
    arrows_.push_back({static_cast<int>(e), dart_face_[e][1 - w], dart_face_[e][w]});
  }
}

void PlabicModel::validate_quiver() const {
  std::map<std::pair<int, int>, int> cnt;
  for (auto& a : arrows_) {
    if (a.tail == a.head)
      throw InvariantViolation("dual quiver has no loops", "edge " + std::to_string(edges_[a.edge].id));
    ++cnt[{a.tail, a.head}];
  }
  for (auto& [p, c] : cnt) {
    auto [t, h] = p;
    if ((!faces_[t].boundary || !faces_[h].boundary) && cnt.count({h, t}))
      throw InvariantViolation("dual quiver has no 2-cycles at mutable vertices",
                               face_spec(t) + " <-> " + face_spec(h));
  }
}

void PlabicModel::set_star(int f) {
  if (f < 0 || f >= static_cast<int>(faces_.size())) throw ParameterError("no such face");
  if (!faces_[f].boundary) throw InvariantViolation("star face is on the rim", face_spec(f));
  star_ = f;
}

void PlabicModel::set_label(int f, const KSubset& label) {
  if (f < 0 || f >= static_cast<int>(faces_.size())) throw ParameterError("no such face");
  if (label.n() != n_ || label.k() != k_) throw ParameterError("face label has wrong (k,n)");
  faces_[f].label = label;
}

bool PlabicModel::labelled() const {
  return std::all_of(faces_.begin(), faces_.end(), [](const Face& f) { return f.label.has_value(); });
}

std::string PlabicModel::face_spec(int f) const {
  std::string s;
  for (int id : faces_[f].edge_ids) s += (s.empty() ? "" : ",") + std::to_string(id);
  return s;
}

static std::vector<int> parse_ids(const std::string& spec) {
  std::vector<int> ids;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t used = 0;
      ids.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw ParameterError("bad face spec '" + spec + "'");
    } catch (const std::logic_error&) {
      throw ParameterError("bad face spec '" + spec + "'");
    }
  }
  if (ids.empty()) throw ParameterError("empty face spec");
  return ids;
}

int PlabicModel::find_face(const std::string& spec) const {
  auto ids = parse_ids(spec);
  auto cyc = ids;
  std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end()), cyc.end());
  for (size_t f = 0; f < faces_.size(); ++f)
    if (faces_[f].edge_ids == cyc) return static_cast<int>(f);
  std::sort(ids.begin(), ids.end());
  int found = -1;
  for (size_t f = 0; f < faces_.size(); ++f) {
    auto s = faces_[f].edge_ids;
    std::sort(s.begin(), s.end());
    if (s == ids) {
      if (found != -1) throw ParameterError("face spec '" + spec + "' is ambiguous; give the cyclic order");
      found = static_cast<int>(f);
    }
  }
  if (found == -1) throw ParameterError("no face '" + spec + "'");
  return found;
}

int PlabicModel::find_face(const KSubset& label) const {
  for (size_t f = 0; f < faces_.size(); ++f)
    if (faces_[f].label == label) return static_cast<int>(f);
  return -1;
}

std::string PlabicModel::face_name(int f) const {
  if (faces_[f].label) return faces_[f].label->str();
  return "f" + face_spec(f);
}

LatticePtr PlabicModel::face_lattice() const {
  std::vector<std::string> l;
  for (size_t f = 0; f < faces_.size(); ++f) l.push_back(face_name(static_cast<int>(f)));
  return make_lattice(l);
}

LatticePtr PlabicModel::face_lattice_no_star() const {
  std::vector<std::string> l;
  for (size_t f = 0; f < faces_.size(); ++f)
    if (static_cast<int>(f) != star_) l.push_back(face_name(static_cast<int>(f)));
  return make_lattice(l);
}

LatticePtr PlabicModel::edge_lattice() const {
  std::vector<std::string> l;
  for (auto& e : edges_) l.push_back("e" + std::to_string(e.id));
  return make_lattice(l);
}

Quiver PlabicModel::dual_quiver() const {
  const size_t nf = faces_.size();
  std::vector<std::string> names;
  std::vector<bool> frozen;
  for (size_t f = 0; f < nf; ++f) {
    names.push_back(face_name(static_cast<int>(f)));
    frozen.push_back(faces_[f].boundary);
  }
  std::vector<std::vector<int>> b(nf, std::vector<int>(nf, 0));
  for (auto& a : arrows_) ++b[a.tail][a.head], --b[a.head][a.tail];
  return Quiver(names, frozen, b, star_);
}

// ---------------------------------------------------------------- text format

PlabicModel load_model(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0, k = -1, n = -1;
  bool header = false;
  std::vector<PlabicNode> nodes;
  std::map<std::string, int> node_at;
  struct RawEdge {
    int id;
    std::string a, b;
    int line;
  };
  std::vector<RawEdge> raw_edges;
  std::vector<std::pair<int, std::vector<std::string>>> rots;
  std::vector<std::tuple<int, std::string, std::string>> labels;
  std::optional<std::pair<int, std::string>> star;

  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    auto need = [&](size_t c) {
      if (tok.size() != c) throw ParseError(lineno, "'" + tok[0] + "' takes " + std::to_string(c - 1) + " arguments");
    };
    auto to_int = [&](const std::string& s) {
      try {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw ParseError(lineno, "bad integer '" + s + "'");
        return v;
      } catch (const std::logic_error&) {
        throw ParseError(lineno, "bad integer '" + s + "'");
      }
    };
    if (!header) {
      if (tok.size() != 2 || tok[0] != "plabic" || tok[1] != "v1") throw ParseError(lineno, "expected 'plabic v1'");
      header = true;
    } else if (tok[0] == "kn") {
      need(3);
      k = to_int(tok[1]);
      n = to_int(tok[2]);
    } else if (tok[0] == "node") {
      need(3);
      if (tok[2] != "black" && tok[2] != "white") throw ParseError(lineno, "colour must be black or white");
      if (node_at.count(tok[1])) throw ParseError(lineno, "duplicate node '" + tok[1] + "'");
      node_at[tok[1]] = static_cast<int>(nodes.size());
      nodes.push_back({tok[1], tok[2] == "white" ? Color::White : Color::Black, {}});
    } else if (tok[0] == "edge") {
      need(4);
      raw_edges.push_back({to_int(tok[1]), tok[2], tok[3], lineno});
    } else if (tok[0] == "rot") {
      if (tok.size() < 2) throw ParseError(lineno, "rot needs a node");
      rots.emplace_back(lineno, std::vector<std::string>(tok.begin() + 1, tok.end()));
    } else if (tok[0] == "label") {
      need(3);
      labels.emplace_back(lineno, tok[1], tok[2]);
    } else if (tok[0] == "star") {
      need(2);
      star = std::make_pair(lineno, tok[1]);
    } else {
      throw ParseError(lineno, "unknown directive '" + tok[0] + "'");
    }
  }
  if (!header) throw ParseError(lineno, "missing 'plabic v1' header");
  if (k < 0 || n < 0) throw ParseError(lineno, "missing 'kn' line");

  std::vector<PlabicEdge> edges;
  std::map<int, int> edge_at;
  for (auto& re : raw_edges) {
    PlabicEdge e;
    e.id = re.id;
    std::string ends[2] = {re.a, re.b};
    for (int s = 0; s < 2; ++s) {
      const auto& t = ends[s];
      if (t.rfind("n:", 0) == 0) {
        auto it = node_at.find(t.substr(2));
        if (it == node_at.end()) throw ParseError(re.line, "unknown node '" + t.substr(2) + "'");
        e.end[s] = {false, it->second};
      } else if (t.rfind("b:", 0) == 0) {
        try {
          e.end[s] = {true, std::stoi(t.substr(2))};
        } catch (const std::logic_error&) {
          throw ParseError(re.line, "bad boundary label '" + t + "'");
        }
      } else {
        throw ParseError(re.line, "edge end must be n:<node> or b:<label>");
      }
    }
    if (edge_at.count(e.id)) throw ParseError(re.line, "duplicate edge id " + std::to_string(e.id));
    edge_at[e.id] = static_cast<int>(edges.size());
    edges.push_back(e);
  }
  for (auto& [ln, r] : rots) {
    auto it = node_at.find(r[0]);
    if (it == node_at.end()) throw ParseError(ln, "unknown node '" + r[0] + "'");
    auto& rot = nodes[it->second].rot;
    if (!rot.empty()) throw ParseError(ln, "second rotation for node '" + r[0] + "'");
    for (size_t t = 1; t < r.size(); ++t) {
      int id;
      try {
        id = std::stoi(r[t]);
      } catch (const std::logic_error&) {
        throw ParseError(ln, "bad edge id '" + r[t] + "'");
      }
      auto e = edge_at.find(id);
      if (e == edge_at.end()) throw ParseError(ln, "unknown edge " + r[t]);
      rot.push_back(e->second);
    }
  }

  PlabicModel m(k, n, std::move(nodes), std::move(edges));
  for (auto& [ln, spec, sub] : labels) {
    try {
      m.set_label(m.find_face(spec), KSubset::parse(sub, n));
    } catch (const ParameterError& e) {
      throw ParseError(ln, e.what());
    }
  }
  if (star) {
    try {
      m.set_star(m.find_face(star->second));
    } catch (const ParameterError& e) {
      throw ParseError(star->first, e.what());
    }
  } else if (k >= 1 && k < n) {
    int f = m.find_face(interval(n, 1, k));
    if (f >= 0) m.set_star(f);
  }
  return m;
}

std::string save_model(const PlabicModel& m) {
  std::ostringstream os;
  os << "plabic v1\n";
  os << "kn " << m.k() << ' ' << m.n() << '\n';
  for (auto& x : m.nodes()) os << "node " << x.id << ' ' << (x.color == Color::White ? "white" : "black") << '\n';
  for (auto& e : m.edges()) {
    os << "edge " << e.id;
    for (auto& en : e.end) os << ' ' << (en.boundary ? "b:" + std::to_string(en.index) : "n:" + m.nodes()[en.index].id);
    os << '\n';
  }
  for (auto& x : m.nodes()) {
    os << "rot " << x.id;
    for (int e : x.rot) os << ' ' << m.edges()[e].id;
    os << '\n';
  }
  for (size_t f = 0; f < m.faces().size(); ++f)
    if (m.faces()[f].label) os << "label " << m.face_spec(static_cast<int>(f)) << ' ' << m.faces()[f].label->str() << '\n';
  if (m.star() >= 0) os << "star " << m.face_spec(m.star()) << '\n';
  return os.str();
}

// ---------------------------------------------------------------- fixtures

std::string shark_model_text() {
  return R"(plabic v1
# five internal nodes, positroid of all 2-subsets of [5] except 45
kn 2 5
node B1 black
node B2 white
node B3 white
node B4 black
node B5 white
edge 1 n:B5 b:1
edge 2 n:B4 b:2
edge 3 n:B3 b:3
edge 4 n:B2 b:4
edge 5 n:B2 b:5
edge 6 n:B1 n:B2
edge 7 n:B1 n:B5
edge 8 n:B1 n:B3
edge 9 n:B4 n:B5
edge 10 n:B4 n:B3
rot B1 7 6 8
rot B2 6 5 4
rot B3 10 8 3
rot B4 2 9 10
rot B5 1 7 9
label 1,5,6,7 12
star 1,5,6,7
)";
}

PlabicModel shark_model() {
  PlabicModel m = load_model(shark_model_text());
  // remaining labels are fixed by the base face and the dual quiver
  const std::pair<const char*, const char*> rest[] = {
      {"1,9,2", "23"}, {"2,10,3", "34"}, {"3,8,6,4", "14"}, {"4,5", "15"}, {"7,8,10,9", "24"}};
  for (auto& [spec, lab] : rest) m.set_label(m.find_face(spec), KSubset::parse(lab, 5));
  return m;
}

KSubset rectangle_label(int k, int n, int i, int j) {
  if (i == 0 && j == 0) return interval(n, 1, k);
  std::vector<int> e;
  for (int x = 1; x <= k - i; ++x) e.push_back(x);
  for (int x = k - i + j + 1; x <= k + j; ++x) e.push_back(x);
  return KSubset(n, e);
}

std::optional<std::pair<int, int>> rectangle_position(int k, int n, const KSubset& s) {
  if (s == interval(n, 1, k)) return std::make_pair(0, 0);
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= n - k; ++j)
      if (rectangle_label(k, n, i, j) == s) return std::make_pair(i, j);
  return std::nullopt;
}

PlabicModel build_rectangles_model(int k, int n) {
  if (k < 1 || k >= n) throw ParameterError("rectangles model needs 1 <= k <= n-1");
  const int c = n - k;
  // quiver vertices: 0 is the empty rectangle, then (i,j) row-major
  auto vid = [&](int i, int j) { return (i == 0 && j == 0) ? 0 : 1 + (i - 1) * c + (j - 1); };
  struct Arrow {
    int tail, head;
  };
  std::vector<Arrow> arrows;
  std::map<std::tuple<char, int, int>, int> arrow_at;  // kind, i, j
  auto add = [&](char kind, int i, int j, int t, int h) {
    arrow_at[{kind, i, j}] = static_cast<int>(arrows.size());
    arrows.push_back({t, h});
  };
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j < c; ++j) add('h', i, j, vid(i, j + 1), vid(i, j));  // T(i,j+1) -> T(i,j)
  for (int j = 1; j <= c; ++j)
    for (int i = 1; i < k; ++i) add('v', i, j, vid(i + 1, j), vid(i, j));  // T(i+1,j) -> T(i,j)
  for (int i = 1; i < k; ++i)
    for (int j = 1; j < c; ++j) add('d', i, j, vid(i, j), vid(i + 1, j + 1));
  add('s', 0, 0, vid(1, 1), 0);
  add('l', 0, 0, 0, vid(k, 1));
  add('r', 0, 0, 0, vid(1, c));
  auto H = [&](int i, int j) { return arrow_at.at({'h', i, j}); };
  auto V = [&](int i, int j) { return arrow_at.at({'v', i, j}); };
  auto D = [&](int i, int j) { return arrow_at.at({'d', i, j}); };

  struct Cycle {
    std::string id;
    Color color;
    std::vector<int> arrows;
  };
  std::vector<Cycle> cycles;
  for (int i = 1; i < k; ++i)
    for (int j = 1; j < c; ++j) {
      std::string tag = std::to_string(i) + "." + std::to_string(j);
      cycles.push_back({"A" + tag, Color::Black, {D(i, j), V(i, j + 1), H(i, j)}});
      cycles.push_back({"B" + tag, Color::White, {D(i, j), H(i + 1, j), V(i, j)}});
    }
  {
    std::vector<int> cy{arrow_at.at({'s', 0, 0}), arrow_at.at({'l', 0, 0})};
    for (int i = k - 1; i >= 1; --i) cy.push_back(V(i, 1));
    cycles.push_back({"C", Color::Black, cy});
    std::vector<int> dy{arrow_at.at({'s', 0, 0}), arrow_at.at({'r', 0, 0})};
    for (int j = c - 1; j >= 1; --j) dy.push_back(H(1, j));
    cycles.push_back({"D", Color::White, dy});
  }

  // rim labels of the boundary arrows
  std::map<int, int> rim;  // arrow -> label
  rim[arrow_at.at({'l', 0, 0})] = 1;
  for (int i = 2; i <= c; ++i) rim[H(k, i - 1)] = i;
  for (int i = c + 1; i <= n - 1; ++i) rim[V(n - i, c)] = i;
  rim[arrow_at.at({'r', 0, 0})] = n;

  // edge ids: rim edges carry their label, the rest follow
  std::vector<int> edge_id(arrows.size(), 0);
  int next = n + 1;
  for (size_t a = 0; a < arrows.size(); ++a) edge_id[a] = rim.count(static_cast<int>(a)) ? rim[static_cast<int>(a)] : next++;

  std::vector<PlabicNode> nodes;
  std::vector<std::vector<int>> ends(arrows.size());
  for (size_t x = 0; x < cycles.size(); ++x) {
    auto& cy = cycles[x];
    PlabicNode node{cy.id, cy.color, {}};
    auto order = cy.arrows;
    if (cy.color == Color::Black) std::reverse(order.begin(), order.end());
    node.rot = order;  // arrow indices for now, remapped below
    for (int a : cy.arrows) ends[a].push_back(static_cast<int>(x));
    nodes.push_back(node);
  }
  // edge index order = sorted by id
  std::vector<int> by_id(arrows.size());
  for (size_t a = 0; a < arrows.size(); ++a) by_id[a] = static_cast<int>(a);
  std::sort(by_id.begin(), by_id.end(), [&](int a, int b) { return edge_id[a] < edge_id[b]; });
  std::vector<int> index_of(arrows.size());
  std::vector<PlabicEdge> edges;
  for (size_t t = 0; t < by_id.size(); ++t) {
    int a = by_id[t];
    index_of[a] = static_cast<int>(t);
    PlabicEdge e;
    e.id = edge_id[a];
    if (ends[a].size() == 2) {
      e.end[0] = {false, ends[a][0]};
      e.end[1] = {false, ends[a][1]};
    } else if (ends[a].size() == 1 && rim.count(a)) {
      e.end[0] = {false, ends[a][0]};
      e.end[1] = {true, rim[a]};
    } else {
      throw ConsistencyError("rectangles construction: arrow in wrong number of cycles");
    }
    edges.push_back(e);
  }
  for (auto& node : nodes)
    for (auto& r : node.rot) r = index_of[r];

  PlabicModel m(k, n, std::move(nodes), std::move(edges));

  // faces to quiver vertices: the head of an arrow is the face left of the
  // dart leaving the white end of its edge
  std::vector<int> vertex_of(m.faces().size(), -1);
  auto bind = [&](int f, int v) {
    if (vertex_of[f] != -1 && vertex_of[f] != v) throw ConsistencyError("rectangles construction: face/vertex clash");
    vertex_of[f] = v;
  };
  for (size_t a = 0; a < arrows.size(); ++a) {
    int e = index_of[a];
    int w = m.white_side(e);
    bind(m.face_of({e, w}), arrows[a].head);
    bind(m.face_of({e, 1 - w}), arrows[a].tail);
  }
  for (size_t f = 0; f < m.faces().size(); ++f) {
    int v = vertex_of[f];
    if (v < 0) throw ConsistencyError("rectangles construction: unbound face");
    int i = v == 0 ? 0 : (v - 1) / c + 1, j = v == 0 ? 0 : (v - 1) % c + 1;
    m.set_label(static_cast<int>(f), rectangle_label(k, n, i, j));
  }
  m.set_star(m.find_face(interval(n, 1, k)));
  return m;
}

}  // namespace grnet
