#include <algorithm>
#include <set>

#include "doctest.h"
#include "subsets/subsets.hpp"

using namespace subsets;
using rootsys::Coords;
using rootsys::RootSystem;

namespace {
const std::vector<std::string> kAllTypes = {
    "A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "B2", "B3", "B4", "B5",
    "B6", "B7", "B8", "C3", "C4", "C5", "C6", "C7", "C8", "D4", "D5", "D6",
    "D7", "D8", "E6", "E7", "E8", "F4", "G2"};

std::vector<std::vector<int>> proper_subsets(int rank) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << rank) - 1; ++mask) {
    std::vector<int> th;
    for (int i = 0; i < rank; ++i)
      if (mask & (1 << i)) th.push_back(i);
    out.push_back(th);
  }
  return out;
}
}  // namespace

TEST_CASE("check_conditions basics and counter-examples") {
  RootSystem a2 = RootSystem::build("A2");
  auto empty = make_subset(a2, {});
  auto rep = check_conditions(empty);
  CHECK(rep.c0);
  CHECK(rep.c1);
  CHECK(rep.c2);
  CHECK(rep.c1p);
  CHECK(rep.c2p);
  CHECK(rep.c1pp);

  // B2 with alpha short: {alpha, alpha+beta} fails C2 (sum 2a+b is a root)
  RootSystem b2 = RootSystem::build("B2");
  int a_short = b2.index({0, 1});
  int ab = b2.index({1, 1});
  REQUIRE(a_short >= 0);
  REQUIRE(ab >= 0);
  REQUIRE(b2.is_root({1, 2}));
  auto bad = make_subset(b2, {a_short, ab});
  CHECK(!check_conditions(bad).c2);

  // G2: {2a+b, 3a+2b} satisfies C2 but not C1
  RootSystem g2 = RootSystem::build("G2");
  auto g = make_subset(g2, {g2.index({2, 1}), g2.index({3, 2})});
  auto grep = check_conditions(g);
  CHECK(grep.c2);
  CHECK(!grep.c1);
}

TEST_CASE("condition equivalences exhaustive at rank 2") {
  for (const std::string& t : {"A2", "B2", "G2"}) {
    RootSystem rs = RootSystem::build(t);
    int np = (int)rs.positive().size();
    for (int mask = 0; mask < (1 << np); ++mask) {
      std::vector<int> elems;
      for (int i = 0; i < np; ++i)
        if (mask & (1 << i)) elems.push_back(rs.positive()[i]);
      auto rep = check_conditions(make_subset(rs, elems));
      CHECK(rep.c1 == rep.c1p);
      CHECK(rep.c2 == rep.c2p);
      // under C2 the conditions C1 and C1'' coincide; C1'' always follows
      // from C1 and C2 together
      if (rep.c1 && rep.c2) CHECK(rep.c1pp);
      if (rep.c2) CHECK(rep.c1 == rep.c1pp);
    }
  }
}

TEST_CASE("psi_theta examples") {
  RootSystem a2 = RootSystem::build("A2");
  auto just_h = psi_theta(a2, {});
  CHECK(just_h.elements == std::vector<int>{a2.index({1, 1})});

  auto p = psi_theta(a2, {0});
  std::set<int> got(p.elements.begin(), p.elements.end());
  CHECK(got == std::set<int>{a2.index({1, 1}), a2.index({0, 1})});

  RootSystem g2 = RootSystem::build("G2");
  auto pg = psi_theta(g2, {1});
  std::set<int> gotg(pg.elements.begin(), pg.elements.end());
  CHECK(gotg == std::set<int>{g2.index({3, 2}), g2.index({3, 1})});

  CHECK_THROWS(psi_theta(a2, {0, 1}));
}

TEST_CASE("psi_theta exhaustive properties at rank <= 6") {
  for (const std::string& t : {"A1", "A2", "A3", "A4", "A5", "A6", "B2", "B3", "B4",
                               "B5", "B6", "C3", "C4", "C5", "C6", "D4", "D5", "D6",
                               "E6", "F4", "G2"}) {
    RootSystem rs = RootSystem::build(t);
    for (const auto& th : proper_subsets(rs.rank())) {
      RootSubset psi = psi_theta(rs, th);
      CHECK(!psi.elements.empty());
      auto rep = check_conditions(psi);
      CHECK(rep.c1);
      CHECK(rep.c2);
      CHECK(weyl_stable(psi, th));
      // strict enlargement for some alpha not in Theta
      bool enlarges = false;
      for (int a = 0; a < rs.rank() && !enlarges; ++a) {
        if (std::count(th.begin(), th.end(), a)) continue;
        std::vector<int> th2 = th;
        th2.push_back(a);
        if ((int)th2.size() == rs.rank()) continue;
        if (psi_theta(rs, th2).elements.size() > psi.elements.size()) enlarges = true;
      }
      if ((int)th.size() + 1 < rs.rank()) CHECK(enlarges);
    }
  }
}

TEST_CASE("psi_flag shapes and properties") {
  RootSystem a1 = RootSystem::build("A1");
  auto f1 = psi_flag(a1, {});
  REQUIRE(f1.size() == 1);
  CHECK(f1[0].elements == std::vector<int>{a1.index({1})});

  RootSystem a2 = RootSystem::build("A2");
  auto f2 = psi_flag(a2, {});
  REQUIRE(f2.size() == 2);
  CHECK(f2[0].elements == std::vector<int>{a2.index({1, 1})});
  CHECK(f2[1].elements.size() > 1);

  RootSystem mix = RootSystem::build("B2xA1");
  auto fm = psi_flag(mix, {});
  CHECK(fm.size() == 3);  // concatenated over components

  for (const std::string& t : {"A3", "B3", "C3", "G2", "F4"}) {
    RootSystem rs = RootSystem::build(t);
    for (const auto& th : proper_subsets(rs.rank())) {
      auto flag = psi_flag(rs, th);
      CHECK((int)flag.size() == rs.rank() - (int)th.size());
      size_t prev = 0;
      int prev_rank = 0;
      for (auto& stage : flag) {
        CHECK(stage.elements.size() > prev);
        prev = stage.elements.size();
        auto rep = check_conditions(stage);
        CHECK(rep.c1);
        CHECK(rep.c2);
        CHECK(weyl_stable(stage, th));
        int r = subset_rank(stage);
        CHECK(r > prev_rank);  // strictly increasing chain of spans
        prev_rank = r;
      }
    }
  }
}

TEST_CASE("psi_flag constant-sign property (exact, quantifier-free)") {
  // roots added at stage i restrict to pairwise positively-proportional
  // linear forms on (Theta cup Psi_{i-1})-perp
  for (const std::string& t : {"A2", "A3", "B3", "G2", "F4", "D4"}) {
    RootSystem rs = RootSystem::build(t);
    int n = rs.rank();
    for (const auto& th : proper_subsets(n)) {
      auto flag = psi_flag(rs, th);
      std::vector<int> prev_elems;
      for (auto& stage : flag) {
        // rows: theta simple roots and previous-stage roots; kernel = perp
        std::vector<std::vector<mpq_class>> m;
        for (int i : th) {
          std::vector<mpq_class> row(n, 0);
          row[i] = 1;  // alpha_i acts on coweight coords as coordinate i
          m.push_back(row);
        }
        for (int idx : prev_elems) {
          std::vector<mpq_class> row(n);
          for (int j = 0; j < n; ++j) row[j] = rs.roots()[idx][j];
          m.push_back(row);
        }
        std::vector<int> pivot_col;
        size_t r = 0;
        for (int c = 0; c < n && r < m.size(); ++c) {
          size_t p = r;
          while (p < m.size() && m[p][c] == 0) ++p;
          if (p == m.size()) continue;
          std::swap(m[p], m[r]);
          for (size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            mpq_class f = m[i][c] / m[r][c];
            for (int j = 0; j < n; ++j) m[i][j] -= f * m[r][j];
          }
          pivot_col.push_back(c);
          ++r;
        }
        std::vector<std::vector<mpq_class>> kernel;
        for (int c = 0; c < n; ++c) {
          if (std::count(pivot_col.begin(), pivot_col.end(), c)) continue;
          std::vector<mpq_class> z(n, 0);
          z[c] = 1;
          for (size_t i = 0; i < pivot_col.size(); ++i)
            z[pivot_col[i]] = -m[i][c] / m[i][pivot_col[i]];
          kernel.push_back(z);
        }
        std::vector<int> fresh;
        for (int idx : stage.elements)
          if (!std::count(prev_elems.begin(), prev_elems.end(), idx)) fresh.push_back(idx);
        for (size_t i = 0; i + 1 < fresh.size(); ++i) {
          std::vector<mpq_class> vi, vj;
          for (auto& z : kernel) vi.push_back(rs.eval(fresh[i], z));
          for (auto& z : kernel) vj.push_back(rs.eval(fresh[i + 1], z));
          mpq_class num = 0, den = 0;
          for (size_t k = 0; k < vi.size(); ++k)
            if (vi[k] != 0) {
              num = vj[k];
              den = vi[k];
              break;
            }
          if (den == 0) {
            for (auto& x : vj) CHECK(x == 0);
          } else {
            mpq_class c = num / den;
            CHECK(c >= 0);
            for (size_t k = 0; k < vi.size(); ++k) CHECK(vj[k] == c * vi[k]);
          }
        }
        prev_elems = stage.elements;
      }
    }
  }
}

TEST_CASE("psi_basis explicit lists") {
  RootSystem g2 = RootSystem::build("G2");
  auto bg = psi_basis(g2);
  std::set<Coords> got;
  for (int idx : bg.elements) got.insert(g2.roots()[idx]);
  CHECK(got == std::set<Coords>{{3, 1}, {3, 2}});

  RootSystem f4 = RootSystem::build("F4");
  auto bf = psi_basis(f4);
  std::set<Coords> gotf;
  for (int idx : bf.elements) gotf.insert(f4.roots()[idx]);
  CHECK(gotf == std::set<Coords>{{1, 2, 3, 2}, {1, 2, 4, 2}, {1, 3, 4, 2}, {2, 3, 4, 2}});

  RootSystem e6 = RootSystem::build("E6");
  auto be = psi_basis(e6);
  std::set<Coords> gote;
  for (int idx : be.elements) gote.insert(e6.roots()[idx]);
  CHECK(gote == std::set<Coords>{{0, 1, 1, 2, 2, 1},
                                 {1, 1, 2, 2, 1, 1},
                                 {1, 1, 1, 2, 2, 1},
                                 {1, 1, 2, 2, 2, 1},
                                 {1, 1, 2, 3, 2, 1},
                                 {1, 2, 2, 3, 2, 1}});
}

TEST_CASE("psi_basis properties for every implemented type") {
  for (const auto& t : kAllTypes) {
    RootSystem rs = RootSystem::build(t);
    auto b = psi_basis(rs);
    CHECK((int)b.elements.size() == rs.rank());
    auto rep = check_conditions(b);
    CHECK(rep.c1);
    CHECK(rep.c2);
    CHECK(subset_det(b) != 0);
  }
  RootSystem mix = RootSystem::build("G2xA2");
  auto bm = psi_basis(mix);
  CHECK((int)bm.elements.size() == 4);
  CHECK(check_conditions(bm).c1);
  CHECK(check_conditions(bm).c2);
  CHECK(subset_det(bm) != 0);
}

TEST_CASE("c3_numbering") {
  RootSystem a2 = RootSystem::build("A2");
  auto single = c3_numbering(make_subset(a2, {a2.index({1, 1})}));
  CHECK(single.elements == std::vector<int>{a2.index({1, 1})});
  CHECK(single.numbering_ok);

  auto two = c3_numbering(make_subset(a2, {a2.index({0, 1}), a2.index({1, 1})}));
  CHECK(two.elements == std::vector<int>{a2.index({1, 1}), a2.index({0, 1})});
  CHECK(two.numbering_ok);

  // E8 psi basis: highest root must come first
  RootSystem e8 = RootSystem::build("E8");
  auto b8 = c3_numbering(psi_basis(e8));
  CHECK(e8.roots()[b8.elements[0]] == Coords{2, 3, 4, 6, 5, 4, 3, 2});
  CHECK(b8.numbering_ok);

  // prefix property: every prefix of a C1+C2 subset keeps C1+C2
  for (const std::string& t : {"A3", "B3", "G2", "F4"}) {
    RootSystem rs = RootSystem::build(t);
    auto ordered = c3_numbering(psi_basis(rs));
    for (size_t len = 1; len <= ordered.elements.size(); ++len) {
      auto prefix = make_subset(
          rs, std::vector<int>(ordered.elements.begin(), ordered.elements.begin() + len));
      auto rep = check_conditions(prefix);
      CHECK(rep.c1);
      CHECK(rep.c2);
    }
  }
}
