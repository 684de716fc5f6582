#include <set>

#include "doctest.h"
#include "rootsys/rootsys.hpp"

using namespace rootsys;

namespace {
const std::vector<std::string> kAllTypes = {
    "A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "B2", "B3", "B4", "B5",
    "B6", "B7", "B8", "C3", "C4", "C5", "C6", "C7", "C8", "D4", "D5", "D6",
    "D7", "D8", "E6", "E7", "E8", "F4", "G2"};
}

TEST_CASE("build_root_system cardinalities and sign split") {
  CHECK(RootSystem::build("A1").roots().size() == 2);
  CHECK(RootSystem::build("G2").roots().size() == 12);
  CHECK(RootSystem::build("G2").positive().size() == 6);
  CHECK(RootSystem::build("A2").roots().size() == 6);
  for (const auto& t : kAllTypes) {
    RootSystem rs = RootSystem::build(t);
    CHECK(rs.roots().size() == 2 * rs.positive().size());
    for (int idx : rs.positive()) {
      for (int c : rs.roots()[idx]) CHECK(c >= 0);
      CHECK(rs.height(idx) >= 1);
    }
  }
  CHECK_THROWS(RootSystem::build("B1"));
  CHECK_THROWS(RootSystem::build("C2"));
  CHECK_THROWS(RootSystem::build("D3"));
  CHECK_THROWS(RootSystem::build("E9"));
  CHECK_THROWS(RootSystem::build("H4"));
  CHECK_THROWS(RootSystem::build("A9"));
}

TEST_CASE("reflections permute the root set") {
  for (const std::string& t : {"A3", "B3", "C3", "D4", "F4", "G2", "B2xA1"}) {
    RootSystem rs = RootSystem::build(t);
    for (int i = 0; i < rs.rank(); ++i) {
      std::set<Coords> image;
      for (const Coords& r : rs.roots()) {
        Coords v = rs.reflect_root(i, r);
        REQUIRE(rs.is_root(v));
        image.insert(v);
      }
      CHECK(image.size() == rs.roots().size());
    }
  }
}

TEST_CASE("highest root per type") {
  RootSystem a3 = RootSystem::build("A3");
  CHECK(a3.roots()[a3.highest_root(0)] == Coords{1, 1, 1});
  RootSystem g2 = RootSystem::build("G2");
  CHECK(g2.roots()[g2.highest_root(0)] == Coords{3, 2});
  RootSystem e8 = RootSystem::build("E8");
  CHECK(e8.roots()[e8.highest_root(0)] == Coords{2, 3, 4, 6, 5, 4, 3, 2});
  // maximality: h + alpha is not a root, and h dominates coordinatewise
  for (const auto& t : kAllTypes) {
    RootSystem rs = RootSystem::build(t);
    int h = rs.highest_root(0);
    for (int idx : rs.positive()) {
      Coords sum = rs.roots()[h];
      for (int i = 0; i < rs.rank(); ++i) sum[i] += rs.roots()[idx][i];
      CHECK(!rs.is_root(sum));
      for (int i = 0; i < rs.rank(); ++i)
        CHECK(rs.roots()[h][i] >= rs.roots()[idx][i]);
    }
  }
}

TEST_CASE("root strings") {
  RootSystem a2 = RootSystem::build("A2");
  int a = a2.index({1, 0}), b = a2.index({0, 1});
  CHECK(root_string(a2, a, b) == std::pair<int, int>{0, 1});
  RootSystem g2 = RootSystem::build("G2");
  int g1 = g2.index({1, 0}), gb = g2.index({0, 1});
  CHECK(root_string(g2, g1, gb) == std::pair<int, int>{0, 3});
  CHECK_THROWS(root_string(a2, a, a));
  CHECK_THROWS(root_string(a2, a, a2.negate(a)));
}

TEST_CASE("weyl_orbit") {
  RootSystem a2 = RootSystem::build("A2");
  QVec alpha1_pt(2);  // alpha_1 in coweight coordinates = Cartan column
  alpha1_pt[0] = 2;
  alpha1_pt[1] = -1;
  auto orbit = weyl_orbit(a2, {0, 1}, alpha1_pt);
  CHECK(orbit.size() == 6);  // all six roots
  CHECK(weyl_orbit(a2, {}, alpha1_pt).size() == 1);
  RootSystem b2 = RootSystem::build("B2");
  QVec w2{mpq_class(0), mpq_class(1)};
  CHECK(weyl_orbit(b2, {0}, w2).size() == 1);  // <w_2, alpha_1> = 0
}

TEST_CASE("coweight basis duality") {
  for (const std::string& t : {"A2", "B3", "G2", "F4"}) {
    RootSystem rs = RootSystem::build(t);
    // <w_i, alpha_j> = delta_ij: coweights stored as inverse Cartan
    const auto& cw = rs.coweight_basis();
    for (int i = 0; i < rs.rank(); ++i)
      for (int j = 0; j < rs.rank(); ++j) {
        mpq_class s = 0;
        for (int k = 0; k < rs.rank(); ++k) s += mpq_class(rs.cartan()[j][k]) * cw[k][i];
        CHECK(s == (i == j ? 1 : 0));
      }
  }
}

TEST_CASE("weyl word matrices preserve roots; length counting at small length") {
  for (const std::string& t : {"A2", "B2", "G2", "A3"}) {
    RootSystem rs = RootSystem::build(t);
    // w(Phi+) cap Phi+ has size |Phi+| - length(w) for short reduced words
    std::vector<std::vector<int>> words = {{0}, {1}, {0, 1}, {1, 0}, {0, 1, 0}};
    for (auto& word : words) {
      if (*std::max_element(word.begin(), word.end()) >= rs.rank()) continue;
      // act on root coordinates
      std::set<int> image_pos;
      for (int idx : rs.positive()) {
        Coords v = rs.roots()[idx];
        for (int i : word) v = rs.reflect_root(i, v);
        int j = rs.index(v);
        REQUIRE(j >= 0);
        if (rs.is_positive(j)) image_pos.insert(j);
      }
      size_t expected = rs.positive().size() - word.size();
      CHECK(image_pos.size() == expected);
    }
  }
}

TEST_CASE("weyl_group_matrices sizes") {
  CHECK(weyl_group_matrices(RootSystem::build("A2"), 100).size() == 6);
  CHECK(weyl_group_matrices(RootSystem::build("B2"), 100).size() == 8);
  CHECK(weyl_group_matrices(RootSystem::build("G2"), 100).size() == 12);
  CHECK(weyl_group_matrices(RootSystem::build("A1xA1"), 100).size() == 4);
  CHECK_THROWS(weyl_group_matrices(RootSystem::build("A3"), 10));
}

TEST_CASE("reducible systems concatenate") {
  RootSystem rs = RootSystem::build("B2xA1");
  CHECK(rs.rank() == 3);
  CHECK(rs.num_components() == 2);
  CHECK(rs.roots().size() == 8 + 2);
  CHECK(rs.cartan()[2][0] == 0);
  CHECK(rs.cartan()[0][2] == 0);
  CHECK(rs.component_of_root(rs.index({0, 0, 1})) == 1);
}
