#include <gtest/gtest.h>

#include "grnet/errors.hpp"
#include "grnet/plabic.hpp"
#include "grnet/superpotential.hpp"

using namespace grnet;

namespace {

KSubset S(const char* s, int n) { return KSubset::parse(s, n); }

LaurentPoly mono(const LatticePtr& lat, std::initializer_list<std::pair<const char*, long long>> fs) {
  Exponent e(lat->size(), 0);
  for (auto& [l, p] : fs) e[lat->require(l)] += p;
  return LaurentPoly::monomial(lat, e);
}

}  // namespace

TEST(Superpotential, Rectangles24) {
  auto w = w_rectangles(2, 4);
  auto lat = w.lattice();
  auto want = mono(lat, {{"11", 1}, {"0", -1}}) + mono(lat, {{"12", 1}, {"11", -1}}) +
              mono(lat, {{"22", 1}, {"0", 1}, {"11", -1}, {"21", -1}}) + mono(lat, {{"q", 1}, {"11", 1}, {"22", -1}}) +
              mono(lat, {{"21", 1}, {"11", -1}}) + mono(lat, {{"22", 1}, {"0", 1}, {"11", -1}, {"12", -1}});
  EXPECT_EQ(w, want);
  EXPECT_EQ(w_rectangles(3, 7).size(), 19u);
  EXPECT_THROW(w_rectangles(3, 3), ParameterError);
}

TEST(Superpotential, QuotientPolynomial) {
  auto lat = simples_lattice(2, 4);
  EXPECT_EQ(quotient_f_polynomial(Uniserial{}, lat), LaurentPoly::constant(lat, 1));
  EXPECT_EQ(quotient_f_polynomial(Uniserial{{"11"}}, lat), LaurentPoly::constant(lat, 1) + mono(lat, {{"11", 1}}));
  // socle 11, top 21: quotients 1, S21, S21+S11
  auto f = quotient_f_polynomial(Uniserial{{"11", "21"}}, lat);
  EXPECT_EQ(f, LaurentPoly::constant(lat, 1) + mono(lat, {{"21", 1}}) + mono(lat, {{"21", 1}, {"11", 1}}));
}

TEST(Superpotential, ExtModules) {
  EXPECT_EQ(ext_module(3, 7, 1).factors, (std::vector<std::string>{"11", "21"}));
  EXPECT_EQ(ext_module(3, 7, 5).factors, (std::vector<std::string>{"21", "22", "23"}));
  EXPECT_TRUE(ext_module(3, 7, 4).factors.empty());
  EXPECT_TRUE(ext_module(3, 7, 7).factors.empty());
  EXPECT_EQ(projective_position(3, 7, 7), (std::pair{0, 0}));
  EXPECT_EQ(projective_position(3, 7, 2), (std::pair{3, 2}));
  EXPECT_EQ(projective_position(3, 7, 6), (std::pair{1, 4}));
}

TEST(Superpotential, WX24) {
  auto wx = w_x_rectangles(2, 4);
  auto lat = wx.lattice();
  auto want = mono(lat, {{"0", 1}}) + mono(lat, {{"12", 1}}) + mono(lat, {{"21", 1}}) + mono(lat, {{"22", 1}}) +
              mono(lat, {{"11", 1}, {"12", 1}}) + mono(lat, {{"11", 1}, {"21", 1}});
  EXPECT_EQ(wx, want);
}

TEST(Superpotential, Formula) {
  for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {3, 6}, {3, 7}}) {
    auto rep = verify_wformula(k, n);
    EXPECT_TRUE(rep.ok) << k << "," << n << (rep.diffs.empty() ? "" : " " + rep.diffs.front());
  }
}

TEST(Superpotential, FormulaNeedsInteriorVertex) {
  EXPECT_THROW(verify_wformula(1, 2), ParameterError);
  EXPECT_THROW(verify_wformula(2, 3), ParameterError);
}

TEST(Superpotential, Mutation) {
  auto s = seed_of(build_rectangles_model(2, 4));
  auto w = w_on_seed(s, 2, 4);
  int v = s.vertex_of(S("13", 4));
  auto mw = a_mutate_w(s, w, v);
  EXPECT_EQ(*mw.seed.labels[v], S("24", 4));
  EXPECT_EQ(mw.w.lattice()->index("24") >= 0, true);
  auto back = a_mutate_w(mw.seed, mw.w, v);
  EXPECT_EQ(relabel(back.w, w.lattice()), w);
  EXPECT_THROW(a_mutate_w(s, w, s.star()), NotMutable);
}

TEST(Superpotential, GVectorCone) {
  for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {3, 6}}) {
    auto s = seed_of(build_rectangles_model(k, n));
    auto pulled = pull_cone(gvector_cone_ineqs(k, n), wt_maps(s).beta_hat);
    std::vector<std::pair<std::string, std::string>> ren;
    for (int i = 1; i <= k; ++i)
      for (int j = 1; j <= n - k; ++j) ren.push_back({rectangle_label(k, n, i, j).str(), grid_label(k, n, i, j)});
    EXPECT_TRUE(cone_equal(cone_on(pulled, gt_ambient(k, n), ren), gt_inequalities(k, n))) << k << "," << n;
  }
}
