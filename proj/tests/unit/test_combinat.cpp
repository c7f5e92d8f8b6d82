#include <gtest/gtest.h>

#include "grnet/combinat.hpp"
#include "grnet/errors.hpp"

using namespace grnet;

namespace {

KSubset S(const char* s, int n) { return KSubset::parse(s, n); }

std::vector<KSubset> seq(std::initializer_list<const char*> xs, int n) {
  std::vector<KSubset> out;
  for (auto x : xs) out.push_back(S(x, n));
  return out;
}

}  // namespace

TEST(KSubsetTest, ParseAndPrint) {
  EXPECT_EQ(S("1457", 9).str(), "1457");
  EXPECT_EQ(S("7,5,4,1", 9).elems(), (std::vector<int>{1, 4, 5, 7}));
  EXPECT_EQ(S("1,10", 11).str(), "1,10");
  EXPECT_EQ(S("-", 4).k(), 0);
  EXPECT_THROW(S("15", 4), Error);
  EXPECT_THROW(S("11", 4), Error);
}

TEST(KSubsetTest, IntervalsWrap) {
  EXPECT_EQ(interval(5, 4, 3), S("145", 5));
  EXPECT_EQ(interval(5, 1, 2), S("12", 5));
  EXPECT_EQ(all_subsets(2, 5).size(), 10u);
  EXPECT_EQ(all_subsets(4, 9).size(), 126u);
}

TEST(WeakSeparation, Examples) {
  EXPECT_FALSE(weakly_separated(S("13", 4), S("24", 4)));
  EXPECT_TRUE(weakly_separated(S("12", 4), S("34", 4)));
  for (auto& i : all_subsets(2, 5)) EXPECT_TRUE(weakly_separated(i, i));
  EXPECT_THROW(weakly_separated(S("12", 4), S("12", 5)), ParameterError);
  EXPECT_THROW(weakly_separated(S("12", 5), S("123", 5)), ParameterError);
}

TEST(WeakSeparation, Symmetric) {
  auto all = all_subsets(3, 6);
  for (auto& a : all)
    for (auto& b : all) EXPECT_EQ(weakly_separated(a, b), weakly_separated(b, a));
}

TEST(Necklace, Check) {
  auto shark = necklace_check(seq({"12", "23", "34", "14", "15"}, 5));
  EXPECT_TRUE(shark.value);
  EXPECT_TRUE(shark.step_rule && shark.interval_rule && shark.order_rule);

  auto bad = necklace_check(seq({"13", "24", "34", "45", "15"}, 5));
  EXPECT_FALSE(bad.value);

  EXPECT_TRUE(necklace_check(seq({"12", "23", "34", "45", "15"}, 5)).value);
}

TEST(Necklace, OfPositroid) {
  std::set<KSubset> p;
  for (auto& i : all_subsets(2, 5))
    if (i != S("45", 5)) p.insert(i);
  EXPECT_EQ(necklace_of_positroid(p), seq({"12", "23", "34", "14", "15"}, 5));

  auto all = all_subsets(3, 7);
  auto nk = necklace_of_positroid({all.begin(), all.end()});
  for (int i = 1; i <= 7; ++i) EXPECT_EQ(nk[i - 1], interval(7, i, 3));

  auto one = necklace_of_positroid({S("24", 5)});
  for (auto& x : one) EXPECT_EQ(x, S("24", 5));

  EXPECT_THROW(necklace_of_positroid({}), ParameterError);
}

TEST(Young, Diagrams) {
  EXPECT_EQ(young_of(S("1457", 9)).parts, (std::vector<int>{3, 2, 2, 0}));
  EXPECT_EQ(young_of(S("123", 7)).parts, (std::vector<int>{0, 0, 0}));
  EXPECT_EQ(young_of(S("567", 7)).parts, (std::vector<int>{4, 4, 4}));
  for (auto& i : all_subsets(3, 7)) EXPECT_EQ(subset_of(young_of(i)), i);
}

TEST(Young, MaxDiag) {
  EXPECT_EQ(max_diag(S("567", 7), S("123", 7)), 3);
  EXPECT_EQ(max_diag(S("123", 7), S("567", 7)), 0);
  EXPECT_EQ(max_diag(S("34", 4), S("12", 4)), 2);
  EXPECT_EQ(max_diag(S("24", 4), S("13", 4)), 1);
  for (auto& i : all_subsets(2, 5)) EXPECT_EQ(max_diag(i, i), 0);
}

TEST(Gale, Order) {
  EXPECT_TRUE(gale_leq(S("12", 5), S("35", 5), 1));
  EXPECT_FALSE(gale_leq(S("35", 5), S("12", 5), 1));
  // in the order 3<4<5<1<2, {3,5} comes before {1,2}
  EXPECT_TRUE(gale_leq(S("35", 5), S("12", 5), 3));
  EXPECT_EQ(cyclic_pos(1, 3, 5), 3);
}
