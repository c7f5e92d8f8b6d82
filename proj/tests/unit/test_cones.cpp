#include <gtest/gtest.h>

#include <set>

#include "grnet/cones.hpp"
#include "grnet/errors.hpp"
#include "grnet/plabic.hpp"
#include "grnet/superpotential.hpp"

using namespace grnet;

namespace {

KSubset S(const char* s, int n) { return KSubset::parse(s, n); }

Seed rect(int k, int n) { return seed_of(build_rectangles_model(k, n)); }

std::set<Exponent> coords(const std::vector<LatticeVector>& pts) {
  std::set<Exponent> out;
  for (auto& p : pts) out.insert(p.v);
  return out;
}

std::set<std::string> as_set(const std::vector<LatticeVector>& pts) {
  std::set<std::string> out;
  for (auto& p : pts) out.insert(p.str());
  return out;
}

}  // namespace

TEST(GT, Inequalities24) {
  auto g = gt_inequalities(2, 4);
  // ambient r, 11, 12, 21, 22
  ASSERT_EQ(g.ambient->labels(), (std::vector<std::string>{"r", "11", "12", "21", "22"}));
  Cone want{g.ambient,
            {{0, 1, 0, 0, 0},
             {0, -1, 0, 1, 0},
             {0, -1, 1, 0, 0},
             {0, -1, 0, -1, 1},
             {0, -1, -1, 0, 1},
             {1, 1, 0, 0, -1}}};
  EXPECT_TRUE(cone_equal(g, want));
  EXPECT_EQ(g.canonical().ineqs.size(), 6u);
}

TEST(GT, Labels) {
  EXPECT_EQ(grid_label(2, 4, 1, 2), "12");
  EXPECT_EQ(grid_label(2, 13, 1, 11), "1_11");
  EXPECT_EQ(grid_labels(2, 4), (std::vector<std::string>{"11", "12", "21", "22"}));
}

TEST(GT, FromTropical) {
  auto lat = w_lattice(2, 4);
  Exponent e(lat->size(), 0);
  e[lat->require("q")] = 1;
  e[lat->require("11")] = 1;
  e[lat->require("22")] = -1;
  auto c = cone_from_tropical(LaurentPoly::monomial(lat, e), "q", "0");
  ASSERT_EQ(c.ineqs.size(), 1u);
  EXPECT_EQ(c.ineqs[0], (Exponent{1, 1, 0, 0, -1}));
  for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {3, 6}, {3, 7}})
    EXPECT_TRUE(cone_equal(gt_inequalities(k, n), cone_from_tropical(w_rectangles(k, n), "q", "0")));
}

TEST(Cone, Canonicalize) {
  auto lat = make_lattice({"r", "a"});
  Cone c{lat, {{2, 4}, {1, 2}, {0, 0}, {0, 3}}};
  c.canonicalize();
  EXPECT_EQ(c.ineqs, (std::vector<Exponent>{{0, 1}, {1, 2}}));
  EXPECT_TRUE(c.contains({1, 0}));
  EXPECT_FALSE(c.contains({0, -1}));
  EXPECT_TRUE(cone_equal(cone_from_json(cone_to_json(c)), c));
}

TEST(LatticePoints, Counts) {
  auto g = gt_inequalities(2, 4);
  EXPECT_EQ(lattice_points(g, 0), (std::vector<Exponent>{{0, 0, 0, 0}}));
  EXPECT_EQ(lattice_points(g, 1).size(), 6u);
  EXPECT_EQ(lattice_points(g, 2).size(), 20u);
  EXPECT_EQ(lattice_points(g, 3).size(), 50u);
  EXPECT_EQ(lattice_points(gt_inequalities(2, 5), 2).size(), 50u);
  EXPECT_EQ(lattice_points(gt_inequalities(3, 6), 1).size(), 20u);
  auto lat = make_lattice({"r", "a"});
  EXPECT_THROW(lattice_points(Cone{lat, {{0, 1}}}, 1), Unbounded);
}

TEST(Weyl, HookContent) {
  EXPECT_EQ(weyl_dim(2, 4, 1), 6);
  EXPECT_EQ(weyl_dim(2, 4, 2), 20);
  EXPECT_EQ(weyl_dim(2, 4, 3), 50);
  EXPECT_EQ(weyl_dim(2, 5, 2), 50);
  EXPECT_EQ(weyl_dim(3, 6, 1), 20);
  EXPECT_EQ(weyl_dim(3, 7, 0), 1);
  EXPECT_EQ(weyl_dim(3, 7, 1), 35);
}

TEST(Decompose, Peel) {
  // the zero pattern belongs to [n-k+1, n]
  Exponent zero(4, 0);
  EXPECT_EQ(gt_decompose(2, 4, 2, zero), (std::vector<KSubset>{S("34", 4), S("34", 4)}));
  for (auto& i : all_subsets(2, 4)) EXPECT_EQ(gt_decompose(2, 4, 1, gt_pattern(2, 4, i)), std::vector<KSubset>{i});

  Exponent v{0, 1, 1, 2};
  auto parts = gt_decompose(2, 4, 2, v);
  ASSERT_EQ(parts.size(), 2u);
  Exponent sum(4, 0);
  for (auto& p : parts) {
    auto pat = gt_pattern(2, 4, p);
    for (size_t t = 0; t < 4; ++t) sum[t] += pat[t];
  }
  EXPECT_EQ(sum, v);
  // 13 + 24 and 14 + 23 both work; the peel takes 13 first
  EXPECT_EQ(parts, (std::vector<KSubset>{S("13", 4), S("24", 4)}));
  EXPECT_THROW(gt_decompose(2, 4, 1, Exponent{0, 0, 0, 3}), ParameterError);
}

TEST(Decompose, Patterns) {
  EXPECT_EQ(gt_pattern(2, 4, S("34", 4)), (Exponent{0, 0, 0, 0}));
  EXPECT_EQ(gt_pattern(2, 4, S("24", 4)), (Exponent{0, 0, 0, 1}));
  EXPECT_EQ(gt_pattern(2, 4, S("13", 4)), (Exponent{0, 1, 1, 1}));
  EXPECT_EQ(gt_pattern(2, 4, S("14", 4)), (Exponent{0, 0, 1, 1}));
  EXPECT_EQ(gt_pattern(2, 4, S("23", 4)), (Exponent{0, 1, 0, 1}));
  EXPECT_EQ(gt_pattern(2, 4, S("12", 4)), (Exponent{1, 1, 1, 2}));
}

TEST(NOBody, Level1) {
  auto s = rect(2, 4);
  auto pts = no_body_level1(s);
  EXPECT_EQ(pts.size(), 6u);
  EXPECT_EQ(as_set(pts).size(), 6u);
  auto s25 = rect(2, 5);
  EXPECT_EQ(as_set(no_body_level1(s25)).size(), 10u);

  auto c = cone_from_tropical(w_on_seed(s, 2, 4), "q", s.quiver.name(s.star()));
  EXPECT_TRUE(body_membership_check(pts, c).empty());
  auto hull = hull_matches_slice(pts, c);
  EXPECT_TRUE(hull.ok());
}

TEST(NOBody, Mutation) {
  auto s = rect(2, 4);
  int v = s.vertex_of(S("13", 4));
  auto pts = no_body_level1(s);
  auto moved = trop_mutate_points(s.quiver, v, pts);
  auto t = mutate_labels(s, v);
  // same vertex order; the mutated vertex is renamed 13 -> 24
  EXPECT_EQ(coords(moved), coords(no_body_level1(t)));
  auto back = trop_mutate_points(t.quiver, v, no_body_level1(t));
  EXPECT_EQ(coords(back), coords(pts));
}

TEST(NOBody, Serialization) {
  auto pts = no_body_level1(rect(2, 4));
  auto csv = points_to_csv(pts);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 7);
  EXPECT_NE(points_to_json(pts).find('['), std::string::npos);
}
