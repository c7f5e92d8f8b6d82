#include <gtest/gtest.h>

#include "grnet/errors.hpp"
#include "grnet/laurent.hpp"

using namespace grnet;

namespace {

struct LaurentTest : ::testing::Test {
  LatticePtr lat = make_lattice({"a", "b", "c"});
  LaurentPoly x(const std::string& l, long long p = 1) { return LaurentPoly::variable(lat, l, p); }
  LaurentPoly one() { return LaurentPoly::constant(lat, 1); }
};

}  // namespace

TEST_F(LaurentTest, Arithmetic) {
  EXPECT_EQ(x("a") * x("a", 2), x("a", 3));
  auto s = one() + x("b");
  auto sq = s * s;
  EXPECT_EQ(sq.size(), 3u);
  EXPECT_EQ(sq.coeff({0, 1, 0}), 2);
  EXPECT_EQ(sq, lp_pow(s, 2));
  EXPECT_TRUE((s * LaurentPoly(lat)).is_zero());
  EXPECT_TRUE((s - s).is_zero());
}

TEST_F(LaurentTest, NegativePowers) {
  auto f = x("a", -2) * x("b");
  EXPECT_EQ(f.coeff({-2, 1, 0}), 1);
  EXPECT_EQ(lp_pow(x("c"), -3), x("c", -3));
  EXPECT_THROW(lp_pow(one() + x("c"), -1), NotInvertible);
}

TEST_F(LaurentTest, ExactDivision) {
  auto num = x("a", 2) - x("b", 2);
  EXPECT_EQ(lp_exact_div(num, x("a") - x("b")), x("a") + x("b"));
  auto f = x("a") + x("b", 3);
  EXPECT_EQ(lp_exact_div(f, x("c", 2)), x("a") * x("c", -2) + x("b", 3) * x("c", -2));
  auto g = one() + x("a") + x("a", 2);
  EXPECT_THROW(lp_exact_div(g, one() + x("a")), NotLaurent);
}

TEST_F(LaurentTest, Substitute) {
  auto f = x("a") * x("b", -1);
  std::map<std::string, LaurentPoly> img{{"a", x("c", 2)}, {"b", x("a")}, {"c", x("b")}};
  EXPECT_EQ(lp_substitute(f, lat, img), x("c", 2) * x("a", -1));
  std::map<std::string, LaurentPoly> bad{{"a", x("a")}, {"b", one() + x("a")}, {"c", x("c")}};
  EXPECT_THROW(lp_substitute(f, lat, bad), NotInvertible);
}

TEST_F(LaurentTest, SubstituteWithFactor) {
  // b -> b^-1 (1 + c) / ... : b (1+c)^-1 times (1+c) is b again
  auto f = x("a") * (one() + x("c"));
  auto g = one() + x("c");
  std::vector<Exponent> monos{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  auto r = substitute_with_factor(f, lat, monos, {-1, 0, 0}, g);
  EXPECT_EQ(r, x("a"));
  auto h = x("a", -1);
  EXPECT_THROW(substitute_with_factor(h, lat, monos, {1, 0, 0}, g), NotLaurent);
}

TEST_F(LaurentTest, MinExponent) {
  auto m = lp_min_exponent(x("a", 3) * x("b"));
  EXPECT_TRUE(m.unique);
  EXPECT_EQ(m.exp, (Exponent{3, 1, 0}));

  auto y = make_lattice({"24", "34"});
  auto f = LaurentPoly::variable(y, "34") * (LaurentPoly::constant(y, 1) + LaurentPoly::variable(y, "24"));
  auto v = lp_min_exponent(f);
  EXPECT_TRUE(v.unique);
  EXPECT_EQ(v.exp, (Exponent{0, 1}));
  EXPECT_EQ(lp_max_exponent(f).exp, (Exponent{1, 1}));

  auto inc = x("a") + x("b");
  auto lex = lp_min_exponent(inc);
  EXPECT_FALSE(lex.unique);
  EXPECT_EQ(lex.exp, (Exponent{0, 1, 0}));
  EXPECT_EQ(lp_min_exponent(inc, {"b", "a"}).exp, (Exponent{1, 0, 0}));

  EXPECT_THROW(lp_min_exponent(LaurentPoly(lat)), ParameterError);
}

TEST_F(LaurentTest, Tropicalize) {
  EXPECT_EQ(tropicalize(x("a")), (std::vector<Exponent>{{1, 0, 0}}));
  auto t = tropicalize(one() + x("b"));
  EXPECT_EQ(t.size(), 2u);
  auto p = make_lattice({"0", "11"});
  auto w = LaurentPoly::variable(p, "11") * LaurentPoly::variable(p, "0", -1);
  auto proj = project(w, make_lattice({"11"}));
  EXPECT_EQ(tropicalize(proj), (std::vector<Exponent>{{1}}));
}

TEST_F(LaurentTest, MapsAndInverse) {
  LatticeMap m(lat, lat, {{1, 0, 0}, {1, 1, 0}, {0, 2, 1}});
  auto inv = inverse(m);
  EXPECT_EQ(m.compose(inv), identity_map(lat));
  EXPECT_EQ(pushforward(pushforward(x("c"), m), inv), x("c"));
  LatticeMap sing(lat, lat, {{1, 0, 0}, {2, 0, 0}, {0, 0, 1}});
  EXPECT_THROW(inverse(sing), ParameterError);
}

TEST_F(LaurentTest, JsonAndPretty) {
  auto f = x("a", -1) * (one() + x("b")) * LaurentPoly::constant(lat, 3);
  EXPECT_EQ(laurent_from_json(to_json(f)), f);
  auto y = make_lattice({"24", "34"});
  auto g = LaurentPoly::variable(y, "34") + LaurentPoly::variable(y, "34") * LaurentPoly::variable(y, "24");
  EXPECT_EQ(pretty(g, "y"), "y34*(1+y24)");
}
