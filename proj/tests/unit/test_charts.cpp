#include <gtest/gtest.h>

#include "grnet/charts.hpp"
#include "grnet/errors.hpp"
#include "grnet/plabic.hpp"
#include "grnet/seeds.hpp"

using namespace grnet;

namespace {

KSubset S(const char* s, int n) { return KSubset::parse(s, n); }

}  // namespace

TEST(Partition, Shark) {
  auto m = shark_model();
  auto p35 = partition_function(m, S("35", 5));
  ASSERT_TRUE(p35.is_monomial());
  EXPECT_EQ(pretty(p35, "x"), "xe2*xe3*xe5*xe7");
  EXPECT_TRUE(partition_function(m, S("45", 5)).is_zero());
  EXPECT_EQ(partition_function(m, S("25", 5)).size(), 2u);
}

TEST(Flow, Shark) {
  auto m = shark_model();
  auto f = flow_polynomial(m, S("25", 5));
  EXPECT_EQ(pretty(f, "y"), "y34*(1+y24)");
  EXPECT_EQ(flow_polynomial(m, S("35", 5)), LaurentPoly::constant(f.lattice(), 1));
  EXPECT_TRUE(flow_polynomial(m, S("45", 5)).is_zero());
  auto v = valuation(f);
  EXPECT_EQ(v.str(), "{34:1}");
}

TEST(Flow, ProjectivesAreMonomials) {
  for (auto [k, n] : {std::pair{2, 5}, {3, 6}}) {
    auto m = build_rectangles_model(k, n);
    for (int s = 0; s < n; ++s) EXPECT_TRUE(flow_polynomial(m, interval(n, s + 1, k)).is_monomial());
    EXPECT_FALSE(flow_polynomial(m, k == 2 ? S("24", n) : S("246", n)).is_monomial());
  }
}

TEST(Flow, ChartsAgree) {
  auto m = build_rectangles_model(3, 6);
  auto ch = network_charts(m);
  EXPECT_EQ(ch.flow.size(), 20u);
  EXPECT_EQ(ch.flow.at(S("246", 6)), flow_polynomial(m, S("246", 6)));
  EXPECT_EQ(ch.partition.at(S("135", 6)), partition_function(m, S("135", 6)));
}

TEST(Valuation, EqualsKappaOnRectangles) {
  auto m = build_rectangles_model(2, 5);
  auto s = seed_of(m);
  for (auto& [i, f] : network_charts(m).flow) {
    auto val = valuation(f);
    auto kap = kappa_vector(s, i);
    for (size_t c = 0; c < val.v.size(); ++c) EXPECT_EQ(val.v[c], kap.at(val.lattice->label(c))) << i.str();
  }
}

TEST(XMutation, Variables) {
  auto m = build_rectangles_model(2, 5);
  auto q = m.dual_quiver();
  int j = q.require("13");
  auto lat = q.lattice();
  auto xj = x_mutate_variable(q, j, j);
  EXPECT_EQ(xj, LaurentPoly::variable(xj.lattice(), "13", -1));
  for (size_t t = 0; t < q.size(); ++t) {
    if (q.b(static_cast<int>(t), j) != 0 || static_cast<int>(t) == j) continue;
    auto xt = x_mutate_variable(q, j, static_cast<int>(t));
    EXPECT_EQ(xt, LaurentPoly::variable(xt.lattice(), q.name(static_cast<int>(t)))) << q.name(static_cast<int>(t));
  }
  // arrows into 13 give s_t (1 + s_13)^c; arrows out of it are not Laurent
  auto x23 = x_mutate_variable(q, j, q.require("23"));
  auto l = x23.lattice();
  EXPECT_EQ(x23, LaurentPoly::variable(l, "23") * (LaurentPoly::constant(l, 1) + LaurentPoly::variable(l, "13")));
  EXPECT_THROW(x_mutate_variable(q, j, q.require("12")), NotLaurent);
}

TEST(XMutation, PullsChartsBack) {
  auto m = build_rectangles_model(2, 4);
  int f = m.find_face(S("13", 4));
  auto moved = square_move(m, f);
  auto before = network_charts(m).flow;
  auto after = network_charts(moved).flow;
  for (auto& [i, g] : after) EXPECT_EQ(x_mutate(m.dual_quiver(), f, g), before.at(i)) << i.str();
}

TEST(Plucker, Relations) {
  auto r = build_rectangles_model(2, 4);
  auto ch = network_charts(r);
  auto lat = r.edge_lattice();
  PluckerTriple t{KSubset(4, {}), 1, 2, 3, 4};
  EXPECT_TRUE(plucker_holds(ch.partition, lat, t));
  EXPECT_EQ(t.str().empty(), false);

  auto shark = shark_model();
  PluckerTriple u{KSubset(5, {}), 2, 3, 4, 5};
  auto sc = network_charts(shark);
  EXPECT_EQ(sc.partition.count(S("45", 5)), 0u);
  EXPECT_TRUE(plucker_holds(sc.partition, shark.edge_lattice(), u));
  EXPECT_TRUE(plucker_verify(shark, u).ok());

  EXPECT_EQ(plucker_triples(2, 4).size(), 1u);
  EXPECT_TRUE(plucker_verify(build_rectangles_model(2, 5)).ok());
  EXPECT_TRUE(plucker_verify(shark).ok());
}

TEST(Plucker, BrokenChartFails) {
  auto r = build_rectangles_model(2, 4);
  auto ch = network_charts(r);
  auto lat = r.edge_lattice();
  ch.partition.at(S("13", 4)) = ch.partition.at(S("13", 4)) + ch.partition.at(S("12", 4));
  EXPECT_FALSE(plucker_holds(ch.partition, lat, PluckerTriple{KSubset(4, {}), 1, 2, 3, 4}));
}
