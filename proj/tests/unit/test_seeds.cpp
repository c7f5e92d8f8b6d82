#include <gtest/gtest.h>

#include "grnet/errors.hpp"
#include "grnet/plabic.hpp"
#include "grnet/seeds.hpp"

using namespace grnet;

namespace {

KSubset S(const char* s, int n) { return KSubset::parse(s, n); }

Seed rect(int k, int n) { return seed_of(build_rectangles_model(k, n)); }

}  // namespace

TEST(QuiverMutation, Involution) {
  auto s = rect(3, 6);
  for (int j : s.quiver.mutable_vertices()) {
    auto back = fz_mutate(fz_mutate(s.quiver, j), j);
    EXPECT_TRUE(mutable_part_equal(back, s.quiver)) << s.quiver.name(j);
  }
  EXPECT_THROW(fz_mutate(s.quiver, s.star()), NotMutable);
}

TEST(QuiverMutation, Rectangles24) {
  auto s = rect(2, 4);
  const auto& q = s.quiver;
  int v13 = q.require("13");
  auto mq = fz_mutate(q, v13);
  for (size_t i = 0; i < q.size(); ++i) EXPECT_EQ(mq.b(v13, static_cast<int>(i)), -q.b(v13, static_cast<int>(i)));
  // 13 has arrows in from two frozen vertices and out to the other two
  EXPECT_EQ(q.in_arrows(v13).size(), 2u);
  EXPECT_EQ(q.out_arrows(v13).size(), 2u);
  for (auto [a, ma] : q.in_arrows(v13))
    for (auto [c, mc] : q.out_arrows(v13)) EXPECT_EQ(mq.b(a, c) - q.b(a, c), ma * mc) << q.name(c) << "->" << q.name(a);
}

TEST(LabelMutation, Exchange) {
  auto s = rect(2, 4);
  int v = s.vertex_of(S("13", 4));
  auto t = mutate_labels(s, v);
  EXPECT_EQ(*t.labels[v], S("24", 4));
  auto back = mutate_labels(t, v);
  EXPECT_EQ(back.labels, s.labels);
  EXPECT_TRUE(mutable_part_equal(back.quiver, s.quiver));
  EXPECT_THROW(mutate_labels(s, s.vertex_of(S("12", 4))), NotMutable);

  auto s25 = rect(2, 5);
  int v13 = s25.vertex_of(S("13", 5));
  auto t25 = mutate_labels(s25, v13);
  EXPECT_EQ(*t25.labels[v13], S("24", 5));
  for (size_t a = 0; a < t25.labels.size(); ++a)
    for (size_t b = 0; b < t25.labels.size(); ++b) EXPECT_TRUE(weakly_separated(*t25.labels[a], *t25.labels[b]));
}

TEST(LabelMutation, MatchesSquareMove) {
  for (auto [k, n] : {std::pair{2, 5}, {3, 6}}) {
    auto m = build_rectangles_model(k, n);
    auto s = seed_of(m);
    for (int j : s.quiver.mutable_vertices()) {
      SquareMove sm;
      try {
        sm = square_move_full(m, j);
      } catch (const NotMutable&) {
        continue;
      }
      auto t = mutate_labels(s, j);
      auto p = seed_of(sm.model).quiver;
      // frozen pairs included
      for (size_t a = 0; a < p.size(); ++a)
        for (size_t b = 0; b < p.size(); ++b)
          EXPECT_EQ(t.quiver.b(static_cast<int>(a), static_cast<int>(b)), p.b(sm.face_map[a], sm.face_map[b]))
              << s.quiver.name(j) << ": " << t.quiver.name(static_cast<int>(a)) << "," << t.quiver.name(static_cast<int>(b));
      EXPECT_NO_THROW(beta_matrix(t));
    }
  }
}

TEST(LabelMutation, HexagonLeavesPlabicWorld) {
  auto s = rect(3, 6);
  int v = s.vertex_of(S("145", 6));
  ASSERT_GE(v, 0);
  EXPECT_THROW(mutate_labels(s, v), NotPlabicMutable);
  auto u = mutate_unlabelled(s, v);
  EXPECT_FALSE(u.labelled());
}

TEST(Kappa, Values) {
  auto s = rect(2, 4);
  EXPECT_TRUE(kappa_vector(s, S("34", 4)).is_zero());
  auto k12 = kappa_vector(s, S("12", 4));
  EXPECT_EQ(k12.at("34"), 2);
  EXPECT_EQ(k12.at("13"), 1);
  EXPECT_EQ(k12.at("12"), 0);

  auto shark = seed_of(shark_model());
  EXPECT_EQ(kappa_vector(shark, S("25", 5)).str(), "{34:1}");

  auto r49 = rect(4, 9);
  auto kv = kappa_vector(r49, S("1457", 9));
  EXPECT_EQ(kv.v[r49.star()], 0);
  EXPECT_EQ(kv.at(rectangle_label(4, 9, 1, 1).str()), 0);
  EXPECT_EQ(kv.at(rectangle_label(4, 9, 4, 5).str()), 3);
  long long mx = 0;
  for (auto x : kv.v) mx = std::max(mx, x);
  EXPECT_EQ(mx, 3);
}

TEST(Kappa, Unlabelled) {
  auto s = rect(3, 6);
  auto u = mutate_unlabelled(s, s.vertex_of(S("145", 6)));
  EXPECT_THROW(kappa_vector(u, S("123", 6)), ParameterError);
}

TEST(ExactSequence, Rectangles) {
  for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {3, 6}}) {
    auto s = rect(k, n);
    auto beta = beta_matrix(s);
    Exponent ones(s.quiver.size(), 1);
    for (auto x : beta.apply(ones)) EXPECT_EQ(x, 0);
    auto w = wt_maps(s);
    EXPECT_EQ(w.wt_hat.compose(w.beta_hat), identity_map(w.wt_hat.codomain()));
    // the projective at [n-k+1, n] has rank 1 and weight 0
    auto col = w.wt_hat.column(s.vertex_of(interval(n, n - k + 1, k)));
    EXPECT_EQ(col[0], 1);
    for (size_t i = 1; i < col.size(); ++i) EXPECT_EQ(col[i], 0);
  }
}

TEST(ExactSequence, SharkIsNotFromRectangles) {
  EXPECT_THROW(beta_matrix(seed_of(shark_model())), InvariantViolation);
}

TEST(TropicalMutation, Basics) {
  auto s = rect(2, 4);
  int v = s.vertex_of(S("13", 4));
  Exponent zero(s.quiver.size(), 0);
  EXPECT_EQ(trop_a_mutate(s.quiver, v, zero), zero);
  auto t = mutate_labels(s, v);
  for (auto& i : all_subsets(2, 4))
    EXPECT_EQ(trop_a_mutate(s.quiver, v, kappa_vector(s, i)).v, kappa_vector(t, i).v) << i.str();
}

TEST(SeedJson, RoundTrip) {
  auto s = seed_of(shark_model());
  auto t = seed_from_json(seed_to_json(s));
  EXPECT_EQ(t.k, 2);
  EXPECT_EQ(t.n, 5);
  EXPECT_EQ(t.labels, s.labels);
  EXPECT_EQ(t.quiver.matrix(), s.quiver.matrix());
  EXPECT_EQ(t.star(), s.star());
  EXPECT_THROW(seed_from_json("{"), Error);
}
