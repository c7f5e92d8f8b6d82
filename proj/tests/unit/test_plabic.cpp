#include <gtest/gtest.h>

#include <fstream>
#include <map>
#include <sstream>

#include "grnet/errors.hpp"
#include "grnet/plabic.hpp"

using namespace grnet;

namespace {

KSubset S(const char* s, int n) { return KSubset::parse(s, n); }

std::set<std::string> face_labels(const PlabicModel& m) {
  std::set<std::string> out;
  for (auto& f : m.faces())
    if (f.label) out.insert(f.label->str());
  return out;
}

PlabicModel fixture(const std::string& name) {
  std::ifstream in(std::string(GRNET_FIXTURES) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_model(ss.str());
}

int internal_nodes(const PlabicModel& m) { return static_cast<int>(m.nodes().size()); }

}  // namespace

TEST(PlabicLoad, Shark) {
  auto m = shark_model();
  EXPECT_EQ(m.k(), 2);
  EXPECT_EQ(m.n(), 5);
  EXPECT_EQ(internal_nodes(m), 5);
  EXPECT_EQ(m.faces().size(), 6u);
  int rim = 0;
  for (auto& e : m.edges()) rim += e.end[0].boundary || e.end[1].boundary;
  EXPECT_EQ(rim, 5);
  EXPECT_EQ(face_labels(m), (std::set<std::string>{"12", "14", "15", "23", "24", "34"}));
  EXPECT_EQ(m.face_name(m.star()), "12");
}

TEST(PlabicLoad, Fixtures) {
  auto shark = fixture("shark.plabic");
  EXPECT_EQ(internal_nodes(shark), 5);
  EXPECT_EQ(shark.faces().size(), 6u);
  EXPECT_EQ(face_labels(shark), (std::set<std::string>{"12", "14", "15", "23", "24", "34"}));
  auto r = fixture("rect_2_4.plabic");
  EXPECT_EQ(r.faces().size(), 5u);
  EXPECT_EQ(positroid(r).size(), 6u);
}

TEST(PlabicLoad, RoundTrip) {
  auto m = shark_model();
  auto again = load_model(save_model(m));
  EXPECT_EQ(face_labels(again), face_labels(m));
  EXPECT_EQ(positroid(again), positroid(m));
}

TEST(PlabicLoad, Rejects) {
  std::string text = shark_model_text();
  auto dup = text;
  dup.replace(dup.find("b:1"), 3, "b:2");
  EXPECT_THROW(load_model(dup), Error);
  auto rot = text;
  rot.replace(rot.find("rot B1 7 6 8"), 12, "rot B1 7 6");
  EXPECT_THROW(load_model(rot), Error);
  EXPECT_THROW(load_model("plabic v1\nkn 2\n"), ParseError);
}

TEST(Rectangles, Labels) {
  auto m = build_rectangles_model(2, 4);
  EXPECT_EQ(m.faces().size(), 5u);
  EXPECT_EQ(face_labels(m), (std::set<std::string>{"12", "13", "14", "23", "34"}));
  auto q = m.dual_quiver();
  ASSERT_EQ(q.mutable_vertices().size(), 1u);
  EXPECT_EQ(q.name(q.mutable_vertices()[0]), "13");

  EXPECT_EQ(rectangle_label(3, 7, 2, 3), S("156", 7));
  for (auto [k, n] : {std::pair{2, 5}, {3, 6}, {3, 7}, {4, 9}}) {
    EXPECT_EQ(rectangle_label(k, n, k, n - k), interval(n, n - k + 1, k));
    auto r = build_rectangles_model(k, n);
    EXPECT_EQ(static_cast<int>(r.faces().size()), k * (n - k) + 1);
  }
  EXPECT_EQ(rectangle_position(3, 7, S("156", 7)), (std::pair{2, 3}));
  EXPECT_FALSE(rectangle_position(3, 7, S("246", 7)));
}

TEST(Matchings, Shark) {
  auto m = shark_model();
  EXPECT_EQ(enumerate_matchings(m, S("25", 5)).size(), 2u);
  EXPECT_EQ(enumerate_matchings(m, S("45", 5)).size(), 0u);
  EXPECT_EQ(enumerate_matchings(m, S("35", 5)).size(), 1u);
  // 24 and 25 each have two matchings
  EXPECT_EQ(enumerate_matchings(m).size(), 11u);

  std::set<KSubset> want;
  for (auto& i : all_subsets(2, 5))
    if (i != S("45", 5)) want.insert(i);
  EXPECT_EQ(positroid(m), want);
  EXPECT_EQ(necklace_of_positroid(positroid(m)),
            (std::vector<KSubset>{S("12", 5), S("23", 5), S("34", 5), S("14", 5), S("15", 5)}));
}

TEST(Matchings, BoundaryValues) {
  auto m = shark_model();
  for (auto& mt : enumerate_matchings(m)) {
    std::set<int> ids;
    for (int e : mt.edges) ids.insert(m.edges()[e].id);
    // the 35 matching uses edges 2 3 5 7, the 12 matching 1 6 10
    if (ids == std::set<int>{2, 3, 5, 7}) EXPECT_EQ(boundary_value(m, mt), S("35", 5));
    if (ids == std::set<int>{1, 6, 10}) EXPECT_EQ(boundary_value(m, mt), S("12", 5));
  }
  auto r = build_rectangles_model(2, 4);
  EXPECT_EQ(positroid(r).size(), 6u);
  EXPECT_EQ(positroid(build_rectangles_model(3, 6)).size(), 20u);
}

TEST(Matchings, Base) {
  auto m = shark_model();
  EXPECT_EQ(boundary_value(m, base_matching(m)), S("35", 5));
  for (auto [k, n] : {std::pair{2, 4}, {3, 6}}) {
    auto r = build_rectangles_model(k, n);
    EXPECT_EQ(boundary_value(r, base_matching(r)), interval(n, n - k + 1, k));
  }
}

TEST(Matchings, Weights) {
  auto m = shark_model();
  EXPECT_TRUE(weight_of_matching(m, base_matching(m)).is_zero());
  std::set<std::string> w25;
  for (auto& mt : enumerate_matchings(m, S("25", 5))) w25.insert(weight_of_matching(m, mt).str());
  EXPECT_EQ(w25, (std::set<std::string>{"{34:1}", "{34:1,24:1}"}));
  auto m12 = enumerate_matchings(m, S("12", 5));
  ASSERT_EQ(m12.size(), 1u);
  auto w = weight_of_matching(m, m12[0]);
  EXPECT_EQ(w.at("23"), 1);
  EXPECT_EQ(w.at("24"), 1);
  EXPECT_EQ(w.at("15"), 1);
  EXPECT_EQ(w.at("34"), 2);
  EXPECT_EQ(w.at("14"), 1);
  EXPECT_EQ(w.at("12"), 0);
}

TEST(Flows, Shark) {
  auto m = shark_model();
  auto star = flows(m, S("35", 5));
  ASSERT_EQ(star.size(), 1u);
  EXPECT_TRUE(star[0].edges.empty());
  EXPECT_TRUE(flow_weight(m, star[0]).is_zero());
  EXPECT_EQ(flows(m, S("25", 5)).size(), 2u);
  auto f12 = flows(m, S("12", 5));
  ASSERT_EQ(f12.size(), 1u);
  EXPECT_EQ(flow_weight(m, f12[0]).str(), weight_of_matching(m, enumerate_matchings(m, S("12", 5))[0]).str());
  for (auto& mt : enumerate_matchings(m))
    EXPECT_EQ(flow_weight(m, flow_of_matching(m, mt)), weight_of_matching(m, mt));
}

TEST(SquareMove, Rectangles24) {
  auto m = build_rectangles_model(2, 4);
  int f = m.find_face(S("13", 4));
  auto moved = square_move(m, f);
  EXPECT_EQ(face_labels(moved), (std::set<std::string>{"12", "14", "23", "24", "34"}));
  EXPECT_EQ(positroid(moved), positroid(m));

  auto back = square_move(moved, moved.find_face(S("24", 4)));
  EXPECT_EQ(face_labels(back), face_labels(m));
  EXPECT_EQ(positroid(back), positroid(m));
  auto qa = m.dual_quiver(), qb = back.dual_quiver();
  std::map<std::string, int> pos;
  for (size_t i = 0; i < qb.size(); ++i) pos[qb.name(static_cast<int>(i))] = static_cast<int>(i);
  for (size_t i = 0; i < qa.size(); ++i)
    for (size_t j = 0; j < qa.size(); ++j)
      EXPECT_EQ(qa.b(static_cast<int>(i), static_cast<int>(j)), qb.b(pos[qa.name(static_cast<int>(i))], pos[qa.name(static_cast<int>(j))]));
}

TEST(SquareMove, Refusals) {
  auto m = build_rectangles_model(2, 4);
  EXPECT_THROW(square_move(m, m.find_face(S("12", 4))), NotMutable);
  auto shark = shark_model();
  EXPECT_THROW(square_move(shark, shark.find_face(S("15", 5))), NotMutable);
}

TEST(SquareMove, KeepsPositroidEverywhere) {
  for (auto [k, n] : {std::pair{2, 5}, {2, 6}, {3, 6}}) {
    auto m = build_rectangles_model(k, n);
    int moved = 0;
    for (size_t f = 0; f < m.faces().size(); ++f) {
      if (m.faces()[f].boundary || m.faces()[f].darts.size() != 4) continue;
      auto r = square_move(m, static_cast<int>(f));
      EXPECT_EQ(positroid(r).size(), all_subsets(k, n).size());
      ++moved;
    }
    EXPECT_GT(moved, 0);
  }
}
