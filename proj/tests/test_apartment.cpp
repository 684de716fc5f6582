#include <random>
#include <set>

#include "doctest.h"
#include "apartment/apartment.hpp"

using namespace apartment;
using rootsys::QVec;
using rootsys::RootSystem;

namespace {
QVec qv(std::initializer_list<mpq_class> xs) { return QVec(xs); }
}  // namespace

TEST_CASE("local_roots and special vertices") {
  RootSystem a2 = RootSystem::build("A2");
  QVec origin = qv({0, 0});
  CHECK(is_special(a2, origin));
  CHECK(local_roots(a2, origin).size() == a2.roots().size());

  QVec half = qv({mpq_class(1, 2), 0});
  auto lr = local_roots(a2, half);
  // exactly +-alpha_2 vanish integrally at w_1/2
  CHECK(lr.size() == 2);
  for (int idx : lr) CHECK(a2.roots()[idx][0] == 0);

  RootSystem a1 = RootSystem::build("A1");
  CHECK(local_roots(a1, qv({mpq_class(1, 3)})).empty());
}

TEST_CASE("enclosure thresholds and closure-operator laws") {
  RootSystem a2 = RootSystem::build("A2");
  // single special vertex: r_alpha = alpha(x) for every root
  QVec x = qv({1, 2});
  auto reg = enclosure(a2, {x});
  for (auto& [idx, r] : reg.thresholds) CHECK(mpq_class(r) == a2.eval(idx, x));
  CHECK(reg.contains(x));
  // and the region degenerates to the point
  CHECK(!reg.contains(qv({1, mpq_class(5, 2)})));
  CHECK(!reg.contains(qv({mpq_class(3, 2), 2})));

  // the worked pair {v0, w1/2}
  auto reg2 = enclosure(a2, {qv({0, 0}), qv({mpq_class(1, 2), 0})});
  CHECK(reg2.thresholds.at(a2.index({1, 0})) == 0);
  CHECK(reg2.thresholds.at(a2.index({1, 1})) == 0);
  CHECK(reg2.thresholds.at(a2.index({-1, 0})) == -1);

  CHECK_THROWS(enclosure(a2, {}));

  // extensive, monotone, idempotent on random point sets
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<QVec> pts;
    int np = 1 + (int)(rng() % 4);
    for (int i = 0; i < np; ++i)
      pts.push_back(qv({mpq_class((long)(rng() % 9) - 4, 1 + (long)(rng() % 3)),
                        mpq_class((long)(rng() % 9) - 4, 1 + (long)(rng() % 3))}));
    auto r1 = enclosure(a2, pts);
    for (auto& p : pts) CHECK(r1.contains(p));  // extensive
    auto more = pts;
    more.push_back(qv({mpq_class((long)(rng() % 5), 2), mpq_class((long)(rng() % 5), 2)}));
    auto r2 = enclosure(a2, more);
    for (auto& [idx, r] : r2.thresholds) CHECK(r <= r1.thresholds.at(idx));  // monotone
    // idempotent: adding a member of the region never changes thresholds
    QVec inside = pts[0];
    auto r3 = enclosure(a2, {pts.begin(), pts.end()});
    std::vector<QVec> again = pts;
    again.push_back(inside);
    CHECK(enclosure(a2, again).thresholds == r3.thresholds);
  }
}

TEST_CASE("subsector_tip construction") {
  RootSystem a2 = RootSystem::build("A2");
  std::map<int, mpq_class> n;
  n[a2.index({1, 0})] = 5;
  n[a2.index({0, 1})] = 0;
  n[a2.index({1, 1})] = 0;
  QVec w0 = qv({0, 0});
  QVec w1 = subsector_tip(a2, w0, {}, n);
  CHECK(a2.eval(a2.index({1, 0}), w1) >= 6);
  for (auto& [idx, bound] : n) CHECK(a2.eval(idx, w1) > bound);
  // every point of Q(w1) satisfies the bounds too: the cone only adds
  // positive amounts on Phi_Theta^+; check a ray sample
  QVec probe = w1;
  probe[0] += mpq_class(1, 3);
  probe[1] += mpq_class(1, 7);
  for (auto& [idx, bound] : n) CHECK(a2.eval(idx, probe) > bound);

  // thresholds below alpha(w0) still force a strictly positive move
  std::map<int, mpq_class> low;
  low[a2.index({1, 0})] = -10;
  QVec w1b = subsector_tip(a2, w0, {}, low);
  for (int i = 0; i < 2; ++i) CHECK(w1b[i] > w0[i]);

  // a root inside the span of Theta is rejected
  std::map<int, mpq_class> bad;
  bad[a2.index({1, 0})] = 1;
  CHECK_THROWS(subsector_tip(a2, w0, {0}, bad));
}

TEST_CASE("subsector_special: special vertex with enclosed subsector") {
  for (const std::string& t : {"A2", "B2", "G2"}) {
    RootSystem rs = RootSystem::build(t);
    for (const std::vector<int>& theta :
         std::vector<std::vector<int>>{{}, {0}}) {
      QVec w0(rs.rank(), 0);  // origin is special
      std::map<int, mpq_class> n;
      std::set<int> th(theta.begin(), theta.end());
      for (int idx : rs.positive()) {
        bool span = true;
        for (int i = 0; i < rs.rank(); ++i)
          if (!th.count(i) && rs.roots()[idx][i] != 0) span = false;
        if (!span) n[idx] = mpq_class(3, 2);
      }
      QVec w1 = subsector_tip(rs, w0, theta, n);
      QVec w2 = subsector_special(rs, w0, theta, w1);
      CHECK(is_special(rs, w2));
      // alpha(w2) > alpha(w1) on Phi_Theta^+ (the key chain inequality)
      for (auto& [idx, bound] : n) {
        (void)bound;
        CHECK(rs.eval(idx, w2) > rs.eval(idx, w1));
      }
      // sample the enclosure of Q(w2) near its tip: members must lie in
      // the closed sector at w1 with strict free coordinates
      auto reg = enclosure_of_sector(rs, SectorFace{w2, theta});
      std::mt19937_64 rng(17);
      for (int s = 0; s < 40; ++s) {
        QVec z = w2;
        for (int i = 0; i < rs.rank(); ++i) {
          if (th.count(i)) continue;
          z[i] += mpq_class((long)(rng() % 7), 3);
        }
        if (!reg.contains(z)) continue;
        for (int i = 0; i < rs.rank(); ++i) {
          if (th.count(i))
            CHECK(z[i] == w1[i]);
          else
            CHECK(z[i] > w1[i]);
        }
      }
    }
  }
}

TEST_CASE("corner_set") {
  RootSystem a2 = RootSystem::build("A2");
  // special tip, Theta empty: the tip is the unique corner
  auto c0 = corner_set(a2, qv({1, 1}), {});
  REQUIRE(c0.size() == 1);
  CHECK(c0[0] == qv({1, 1}));

  // x = (1/2, 1/2): corners inside {0,1}^2
  auto c1 = corner_set(a2, qv({mpq_class(1, 2), mpq_class(1, 2)}), {});
  CHECK(!c1.empty());
  for (auto& w : c1) {
    CHECK((w[0] == 0 || w[0] == 1));
    CHECK((w[1] == 0 || w[1] == 1));
  }

  // Theta = Delta: corners = special vertices of cl({x})
  auto c2 = corner_set(a2, qv({mpq_class(1, 2), mpq_class(1, 2)}), {0, 1});
  for (auto& w : c2) {
    CHECK(is_special(a2, w));
    for (size_t idx = 0; idx < a2.roots().size(); ++idx)
      CHECK(a2.eval((int)idx, w) >=
            floor_q(a2.eval((int)idx, qv({mpq_class(1, 2), mpq_class(1, 2)}))));
  }
  CHECK(!c2.empty());

  // covering: random special vertices of the enclosure are dominated
  std::mt19937_64 rng(29);
  for (const std::string& t : {"A2", "B2"}) {
    RootSystem rs = RootSystem::build(t);
    for (const std::vector<int>& theta : std::vector<std::vector<int>>{{}, {1}}) {
      QVec x = qv({mpq_class(1, 2), mpq_class(-1, 3)});
      auto corners = corner_set(rs, x, theta);
      CHECK(!corners.empty());
      auto region = enclosure_of_sector(rs, SectorFace{x, theta});
      std::set<int> th(theta.begin(), theta.end());
      int found = 0;
      int target = 200;
      for (int trial = 0; trial < 20000 && found < target; ++trial) {
        QVec w(rs.rank());
        for (int i = 0; i < rs.rank(); ++i) {
          if (th.count(i))
            w[i] = floor_q(x[i]) + (long)(rng() % 2);
          else
            w[i] = floor_q(x[i]) + (long)(rng() % 6);
        }
        if (!region.contains(w)) continue;
        ++found;
        bool covered = false;
        for (auto& om : corners) {
          bool dom = true;
          for (int i = 0; i < rs.rank(); ++i) {
            mpq_class d = w[i] - om[i];
            if (th.count(i) ? d != 0 : d < 0) dom = false;
          }
          if (dom) covered = true;
        }
        CHECK(covered);
      }
      CHECK(found > 50);
    }
  }
}

TEST_CASE("polytope denominator and vertices") {
  // identity system: d = 1, unique vertex b
  ZMatrix I3{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK(polytope_denominator(I3) == 1);
  auto v = polytope_vertices(I3, {mpz_class(4), mpz_class(-1), mpz_class(7)});
  REQUIRE(v.size() == 1);
  CHECK(v[0] == QVector{4, -1, 7});

  ZMatrix M{{2, 0}, {0, 3}, {-1, -1}};
  CHECK(polytope_denominator(M) == 6);
  auto v2 = polytope_vertices(M, {mpz_class(1), mpz_class(1), mpz_class(0)});
  CHECK(v2.size() == 3);
  for (auto& vert : v2)
    for (auto& c : vert) CHECK(mpz_class(6) % c.get_den() == 0);

  // rank deficient: d = 1 and no vertices
  ZMatrix R{{1, 1}, {2, 2}};
  CHECK(polytope_denominator(R) == 1);
  CHECK(polytope_vertices(R, {mpz_class(1), mpz_class(2)}).empty());

  // random systems: all vertex denominators divide d_A
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 2 + (int)(rng() % 2);
    int m = n + 1 + (int)(rng() % 3);
    ZMatrix A(m, std::vector<mpz_class>(n));
    std::vector<mpz_class> b(m);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) A[i][j] = (long)(rng() % 11) - 5;
      b[i] = (long)(rng() % 11) - 5;
    }
    mpz_class d = polytope_denominator(A);
    for (auto& vert : polytope_vertices(A, b))
      for (auto& c : vert) CHECK(d % c.get_den() == 0);
  }
}

TEST_CASE("normalize_fixed_point") {
  RootSystem a2 = RootSystem::build("A2");
  auto id = rootsys::WeylWord::identity(a2);
  // identity, v = 0, x special: z = 0
  auto res = normalize_fixed_point(a2, id.matrix, {0, 0}, qv({2, -1}));
  CHECK(res.z == qv({0, 0}));
  CHECK(res.y == qv({2, -1}));

  // reflection wall: x with alpha_1(x) = 0 is fixed by r_1
  auto r1 = rootsys::WeylWord::reflection(a2, 0);
  QVec wallpt = qv({0, mpq_class(1, 2)});
  auto res2 = normalize_fixed_point(a2, r1.matrix, {0, 0}, wallpt);
  CHECK(a2.eval(a2.index({1, 0}), res2.y) == 0);  // still on the wall
  for (auto& c : res2.y) {
    mpq_class scaled = c * res2.e;
    CHECK(scaled.get_den() == 1);
  }

  // rank 1: both Weyl elements, postconditions certified inside
  RootSystem a1 = RootSystem::build("A1");
  mpz_class e1 = fixed_point_denominator(a1);
  CHECK(e1 >= 1);
  auto s = rootsys::WeylWord::reflection(a1, 0);
  auto res3 = normalize_fixed_point(a1, s.matrix, {0}, qv({0}), e1);
  CHECK(res3.z == qv({0}));
  // translated reflection: s(x) + v = x at x = v/2
  auto res4 = normalize_fixed_point(a1, s.matrix, {3}, qv({mpq_class(3, 2)}), e1);
  mpq_class ye = res4.y[0] * e1;
  CHECK(ye.get_den() == 1);

  // precondition violation
  CHECK_THROWS(normalize_fixed_point(a2, r1.matrix, {0, 0}, qv({1, 1})));

  // random instances over small Weyl groups: construct fixed points as
  // x = x0 + k with v = x0 - w(x0)
  std::mt19937_64 rng(37);
  for (const std::string& t : {"A2", "B2", "A1xA1"}) {
    RootSystem rs = RootSystem::build(t);
    mpz_class e = fixed_point_denominator(rs);
    auto group = rootsys::weyl_group_matrices(rs, 100);
    for (int trial = 0; trial < 30; ++trial) {
      const auto& w = group[rng() % group.size()];
      int n = rs.rank();
      std::vector<long> x0(n);
      for (auto& c : x0) c = (long)(rng() % 7) - 3;
      std::vector<long> v(n);
      for (int i = 0; i < n; ++i) {
        long wx = 0;
        for (int j = 0; j < n; ++j) wx += w[i][j] * x0[j];
        v[i] = x0[i] - wx;
      }
      // random rational fixed vector of w: average the orbit of a vector
      QVec k(n, 0);
      {
        QVec seed(n);
        for (auto& c : seed) c = mpq_class((long)(rng() % 5) - 2, 1 + (long)(rng() % 3));
        QVec cur = seed;
        int order = 0;
        do {
          for (int i = 0; i < n; ++i) k[i] += cur[i];
          QVec nxt(n, 0);
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) nxt[i] += mpq_class(w[i][j]) * cur[j];
          cur = nxt;
          ++order;
        } while (cur != seed && order < 100);
        for (auto& c : k) c /= order;
      }
      QVec x(n);
      for (int i = 0; i < n; ++i) x[i] = x0[i] + k[i];
      // postconditions are certified inside normalize_fixed_point
      CHECK_NOTHROW(normalize_fixed_point(rs, w, v, x, e));
    }
  }
}
