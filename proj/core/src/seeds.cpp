#include "grnet/seeds.hpp"

#include <algorithm>
#include <json.hpp>

#include "grnet/errors.hpp"

namespace grnet {

using nlohmann::json;

bool Seed::labelled() const {
  return !labels.empty() && std::all_of(labels.begin(), labels.end(), [](auto& l) { return l.has_value(); });
}

int Seed::vertex_of(const KSubset& label) const {
  for (size_t v = 0; v < labels.size(); ++v)
    if (labels[v] == label) return static_cast<int>(v);
  return -1;
}

Seed seed_of(const PlabicModel& m) {
  Seed s{m.k(), m.n(), m.dual_quiver(), {}};
  for (auto& f : m.faces()) s.labels.push_back(f.label);
  return s;
}

static void need_mutable(const Seed& s, int j) {
  if (j < 0 || j >= static_cast<int>(s.quiver.size())) throw ParameterError("vertex out of range");
  if (s.quiver.frozen(j)) throw NotMutable("vertex " + s.quiver.name(j) + " is frozen");
}

Seed mutate_labels(const Seed& s, int j) {
  need_mutable(s, j);
  if (!s.labelled()) throw NotPlabicMutable("seed carries no labels");
  const auto& q = s.quiver;
  auto outs = q.out_arrows(j), ins = q.in_arrows(j);
  auto simple = [](auto& v) { return v.size() == 2 && v[0].second == 1 && v[1].second == 1; };
  if (!simple(outs) || !simple(ins)) throw NotPlabicMutable("vertex " + q.name(j) + " is not four-valent");
  const KSubset& lab = *s.labels[j];
  std::vector<KSubset> out_l{*s.labels[outs[0].first], *s.labels[outs[1].first]};
  std::vector<KSubset> in_l{*s.labels[ins[0].first], *s.labels[ins[1].first]};

  const int n = s.n;
  std::vector<int> cnt(n + 1, 0);
  for (auto* side : {&out_l, &in_l})
    for (auto& l : *side)
      for (int x : l.elems()) ++cnt[x];
  std::vector<int> common, p;
  for (int x = 1; x <= n; ++x) {
    if (cnt[x] == 4) common.push_back(x);
    else if (cnt[x] == 2) p.push_back(x);
    else if (cnt[x] != 0) throw NotPlabicMutable("neighbour labels do not share a common core");
  }
  if (p.size() != 4) throw NotPlabicMutable("neighbour labels do not span four indices");
  auto with = [&](std::initializer_list<int> extra) {
    std::vector<int> e = common;
    e.insert(e.end(), extra);
    return KSubset(n, e);
  };
  KSubset ac = with({p[0], p[2]}), bd = with({p[1], p[3]});
  std::optional<KSubset> fresh;
  if (lab == ac) fresh = bd;
  else if (lab == bd) fresh = ac;
  else throw NotPlabicMutable("label of " + q.name(j) + " is not S+ac");
  auto same_pair = [](const std::vector<KSubset>& side, const KSubset& x, const KSubset& y) {
    return (side[0] == x && side[1] == y) || (side[0] == y && side[1] == x);
  };
  KSubset ab = with({p[0], p[1]}), cd = with({p[2], p[3]}), bc = with({p[1], p[2]}), ad = with({p[0], p[3]});
  bool ok = (same_pair(out_l, ab, cd) && same_pair(in_l, bc, ad)) || (same_pair(in_l, ab, cd) && same_pair(out_l, bc, ad));
  if (!ok) throw NotPlabicMutable("neighbours of " + q.name(j) + " do not form an exchange square");

  // FZ on every pair with a mutable end; between frozen vertices the plabic
  // quiver reverses the arrow of a 3-cycle through j instead of cancelling it
  Quiver f = fz_mutate(q, j);
  auto b = f.matrix();
  std::vector<bool> fr;
  for (size_t a = 0; a < q.size(); ++a) {
    fr.push_back(q.frozen(static_cast<int>(a)));
    for (size_t c = 0; c < q.size(); ++c)
      if (q.frozen(static_cast<int>(a)) && q.frozen(static_cast<int>(c))) b[a][c] = 2 * b[a][c] - q.b(static_cast<int>(a), static_cast<int>(c));
  }
  Seed r = s;
  r.quiver = Quiver(q.names(), fr, b, q.star()).renamed(j, fresh->str());
  r.labels[j] = fresh;
  for (size_t v = 0; v < r.labels.size(); ++v)
    if (!weakly_separated(*r.labels[v], *fresh))
      throw InvariantViolation("labels weakly separated", fresh->str() + " vs " + r.labels[v]->str());
  return r;
}

Seed mutate_unlabelled(const Seed& s, int j) {
  need_mutable(s, j);
  Seed r = s;
  std::string name = s.quiver.name(j) + "'";
  while (s.quiver.index(name) >= 0) name += "'";
  r.quiver = fz_mutate(s.quiver, j).renamed(j, name);
  for (auto& l : r.labels) l.reset();
  return r;
}

LatticeVector kappa_vector(const Seed& s, const KSubset& i) {
  if (!s.labelled()) throw ParameterError("kappa vector needs a labelled seed");
  Exponent v;
  for (auto& l : s.labels) v.push_back(max_diag(*l, i));
  return LatticeVector(s.quiver.lattice(), v);
}

LatticeMap beta_matrix(const Seed& s) {
  const auto& q = s.quiver;
  auto lat = q.lattice();
  LatticeMap beta(lat, lat);
  for (size_t iu = 0; iu < q.size(); ++iu) {
    const int i = static_cast<int>(iu);
    if (!q.frozen(i)) {
      for (auto [j, c] : q.in_arrows(i)) beta.at(j, i) += c;
      for (auto [j, c] : q.out_arrows(i)) beta.at(j, i) -= c;
    } else {
      beta.at(i, i) += 1;
      for (auto [j, c] : q.out_arrows(i)) beta.at(j, i) -= c;
      for (auto [l, c] : q.in_arrows(i))
        if (!q.frozen(l)) beta.at(l, i) += c;
    }
  }
  Exponent ones(q.size(), 1);
  Exponent img = beta.apply(ones);
  if (std::any_of(img.begin(), img.end(), [](long long x) { return x != 0; }))
    throw InvariantViolation("beta kills the all-ones vector", "seed is not reachable from rectangles");
  return beta;
}

WtMaps wt_maps(const Seed& s) {
  const auto& q = s.quiver;
  if (q.star() < 0) throw ParameterError("seed has no star vertex");
  auto lat = q.lattice();
  auto nstar = q.lattice_no_star();
  std::vector<std::string> hat_labels{"r"};
  for (auto& l : nstar->labels()) hat_labels.push_back(l);
  auto hat = make_lattice(hat_labels);
  LatticeMap rk(lat, make_lattice({"r"})), wt(lat, nstar), wt_hat(lat, hat);
  for (size_t j = 0; j < q.size(); ++j) {
    auto kap = kappa_vector(s, *s.labels[j]);
    rk.at(0, j) = 1;
    wt_hat.at(0, j) = 1;
    size_t row = 0;
    for (size_t v = 0; v < q.size(); ++v) {
      if (static_cast<int>(v) == q.star()) continue;
      wt.at(row, j) = kap.v[v];
      wt_hat.at(row + 1, j) = kap.v[v];
      ++row;
    }
  }
  return {rk, wt, wt_hat, inverse(wt_hat)};
}

Exponent trop_a_mutate(const Quiver& q, int j, const Exponent& v) {
  if (j < 0 || j >= static_cast<int>(q.size())) throw ParameterError("vertex out of range");
  if (q.frozen(j)) throw NotMutable("vertex " + q.name(j) + " is frozen");
  if (v.size() != q.size()) throw ParameterError("vector length does not match quiver");
  long long out = 0, in = 0;
  for (auto [i, c] : q.out_arrows(j)) out += c * v[i];
  for (auto [i, c] : q.in_arrows(j)) in += c * v[i];
  Exponent w = v;
  w[j] = std::min(out, in) - v[j];
  return w;
}

LatticeVector trop_a_mutate(const Quiver& q, int j, const LatticeVector& v) {
  return LatticeVector(v.lattice, trop_a_mutate(q, j, v.v));
}

std::string seed_to_json(const Seed& s) {
  json j;
  j["k"] = s.k;
  j["n"] = s.n;
  j["vertices"] = json::array();
  const auto& q = s.quiver;
  for (size_t v = 0; v < q.size(); ++v) {
    json x{{"name", q.name(static_cast<int>(v))}, {"frozen", q.frozen(static_cast<int>(v))}};
    if (s.labels.size() > v && s.labels[v]) x["label"] = s.labels[v]->str();
    if (static_cast<int>(v) == q.star()) x["star"] = true;
    j["vertices"].push_back(x);
  }
  j["b"] = json::array();
  for (size_t a = 0; a < q.size(); ++a)
    for (size_t b = 0; b < q.size(); ++b)
      if (q.b(static_cast<int>(a), static_cast<int>(b)) > 0)
        j["b"].push_back({q.name(static_cast<int>(a)), q.name(static_cast<int>(b)), q.b(static_cast<int>(a), static_cast<int>(b))});
  return j.dump();
}

Seed seed_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParameterError(std::string("bad seed json: ") + e.what());
  }
  Seed s;
  s.k = j.at("k");
  s.n = j.at("n");
  std::vector<std::string> names;
  std::vector<bool> frozen;
  int star = -1;
  for (auto& x : j.at("vertices")) {
    names.push_back(x.at("name"));
    frozen.push_back(x.at("frozen"));
    if (x.contains("label")) s.labels.push_back(KSubset::parse(x["label"].get<std::string>(), s.n));
    else s.labels.push_back(std::nullopt);
    if (x.value("star", false)) star = static_cast<int>(names.size()) - 1;
  }
  std::vector<std::vector<int>> b(names.size(), std::vector<int>(names.size(), 0));
  auto find = [&](const std::string& nm) {
    auto it = std::find(names.begin(), names.end(), nm);
    if (it == names.end()) throw ParameterError("unknown vertex '" + nm + "'");
    return static_cast<int>(it - names.begin());
  };
  for (auto& t : j.at("b")) {
    int a = find(t.at(0)), c = find(t.at(1));
    int m = t.at(2);
    b[a][c] += m;
    b[c][a] -= m;
  }
  s.quiver = Quiver(names, frozen, b, star);
  return s;
}

}  // namespace grnet
