#include "chevalley/lie.hpp"

#include <algorithm>
#include <stdexcept>

namespace chevalley {

using rootsys::Coords;

namespace {
Coords add_coords(const Coords& a, const Coords& b, int sa = 1, int sb = 1) {
  Coords v(a.size());
  for (size_t i = 0; i < a.size(); ++i) v[i] = sa * a[i] + sb * b[i];
  return v;
}
}  // namespace

LieAlgebra::LieAlgebra(const RootSystem& rs) : rs_(&rs) {
  pos_sorted_ = rs.positive();
  std::sort(pos_sorted_.begin(), pos_sorted_.end(), [&](int a, int b) {
    int ha = rs.height(a), hb = rs.height(b);
    if (ha != hb) return ha < hb;
    return rs.roots()[a] < rs.roots()[b];
  });
  order_rank_.assign(rs.roots().size(), -1);
  for (size_t i = 0; i < pos_sorted_.size(); ++i) order_rank_[pos_sorted_[i]] = (int)i;
  build_constants();
}

void LieAlgebra::build_constants() {
  const RootSystem& rs = *rs_;
  auto string_p = [&](int a, int b) {  // max k with b - k a in Phi
    int p = 0;
    Coords v = rs.roots()[b];
    while (true) {
      v = add_coords(v, rs.roots()[a], 1, -1);
      if (!rs.is_root(v)) break;
      ++p;
    }
    return p;
  };
  for (int gamma : pos_sorted_) {
    if (rs.height(gamma) < 2) continue;
    // extraspecial pair: least xi in the order with gamma - xi in Phi^+
    int xi = -1, eta = -1;
    for (int cand : pos_sorted_) {
      int d = rs.index(add_coords(rs.roots()[gamma], rs.roots()[cand], 1, -1));
      if (d >= 0 && rs.is_positive(d)) {
        xi = cand;
        eta = d;
        break;
      }
    }
    if (xi < 0) throw std::logic_error("no decomposition of a non-simple root");
    special_[{xi, eta}] = string_p(xi, eta) + 1;
    // remaining special pairs (alpha, beta), alpha before beta in the order;
    // sign pinned by the Jacobi identity on (e_xi, e_eta, e_{-alpha})
    for (int alpha : pos_sorted_) {
      if (alpha == xi) continue;
      int beta = rs.index(add_coords(rs.roots()[gamma], rs.roots()[alpha], 1, -1));
      if (beta < 0 || !rs.is_positive(beta)) continue;
      if (order_rank_[alpha] > order_rank_[beta]) continue;
      int nalpha = rs.negate(alpha);
      mpq_class term1 = 0, term2 = 0;
      Coords ea = add_coords(rs.roots()[eta], rs.roots()[alpha], 1, -1);
      if (rs.is_root(ea)) term1 = nval(eta, nalpha) * nval(xi, rs.index(ea));
      Coords xa = add_coords(rs.roots()[xi], rs.roots()[alpha], 1, -1);
      if (rs.is_root(xa)) term2 = nval(nalpha, xi) * nval(eta, rs.index(xa));
      mpq_class val = -(term1 + term2) * rs.norm2(gamma) /
                      (mpq_class(rs.norm2(beta)) * special_.at({xi, eta}));
      val.canonicalize();
      if (val.get_den() != 1) throw std::logic_error("non-integer structure constant");
      if (abs(val.get_num()) != string_p(alpha, beta) + 1)
        throw std::logic_error("structure constant magnitude is not p+1");
      special_[{alpha, beta}] = val;
    }
  }
}

mpq_class LieAlgebra::nval(int a, int b) const {
  const RootSystem& rs = *rs_;
  Coords sum = add_coords(rs.roots()[a], rs.roots()[b]);
  if (!rs.is_root(sum)) return 0;
  bool pa = rs.is_positive(a), pb = rs.is_positive(b);
  if (pa && pb) {
    if (order_rank_[a] < order_rank_[b]) return special_.at({a, b});
    return -nval(b, a);
  }
  if (!pa && !pb) return -nval(rs.negate(a), rs.negate(b));
  if (!pa) return -nval(b, a);  // arrange positive first
  int s = rs.index(sum);
  if (rs.is_positive(s)) {
    // triple (a, b, -s): N_{a,b} = (s,s)/(a,a) N_{b,-s}, and
    // N_{b,-s} = -N_{-b,s} with -b, s positive summing to a
    return mpq_class(rs.norm2(s)) / rs.norm2(a) * (-nval(rs.negate(b), s));
  }
  return nval(rs.negate(b), rs.negate(a));  // negative sum
}

long long LieAlgebra::nconst(int a, int b) const {
  mpq_class v = nval(a, b);
  v.canonicalize();
  if (v.get_den() != 1) throw std::logic_error("non-integer N");
  return v.get_num().get_si();
}

std::vector<long long> LieAlgebra::coroot(int ridx) const {
  const RootSystem& rs = *rs_;
  std::vector<long long> c(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) {
    long long num = (long long)rs.roots()[ridx][i] * rs.simple_norm2(i);
    if (num % rs.norm2(ridx) != 0) throw std::logic_error("non-integral coroot");
    c[i] = num / rs.norm2(ridx);
  }
  return c;
}

int LieAlgebra::cartan_pairing(int ridx, int i) const {
  return rs_->pairing(rs_->roots()[ridx], i);
}

std::vector<std::pair<int, mpq_class>> LieAlgebra::bracket_basis(int bi, int bj) const {
  const RootSystem& rs = *rs_;
  int r = rs.rank();
  std::vector<std::pair<int, mpq_class>> out;
  if (bi < r && bj < r) return out;  // [h,h] = 0
  if (bi < r) {  // [h_i, e_g] = <g, a_i^vee> e_g
    int c = cartan_pairing(bj - r, bi);
    if (c) out.emplace_back(bj, c);
    return out;
  }
  if (bj < r) {
    int c = cartan_pairing(bi - r, bj);
    if (c) out.emplace_back(bi, -c);
    return out;
  }
  int a = bi - r, b = bj - r;
  if (rs.negate(a) == b) {  // [e_g, e_{-g}] = h_g
    auto cr = coroot(a);
    for (int i = 0; i < r; ++i)
      if (cr[i]) out.emplace_back(i, mpq_class((long)cr[i]));
    return out;
  }
  int s = rs.index(add_coords(rs.roots()[a], rs.roots()[b]));
  if (s >= 0) {
    long long n = nconst(a, b);
    if (n) out.emplace_back(r + s, mpq_class((long)n));
  }
  return out;
}

void LieAlgebra::check_jacobi(size_t sample) const {
  int d = dim();
  auto bracket_vec = [&](const std::vector<mpq_class>& v, int basis) {
    std::vector<mpq_class> out(d, 0);
    for (int i = 0; i < d; ++i) {
      if (v[i] == 0) continue;
      for (auto& [k, c] : bracket_basis(i, basis)) out[k] += v[i] * c;
    }
    return out;
  };
  auto check_triple = [&](int x, int y, int z) {
    std::vector<mpq_class> acc(d, 0);
    const int tri[3][3] = {{x, y, z}, {y, z, x}, {z, x, y}};
    for (auto& t : tri) {
      std::vector<mpq_class> inner(d, 0);
      for (auto& [k, c] : bracket_basis(t[0], t[1])) inner[k] += c;
      auto outer = bracket_vec(inner, t[2]);
      for (int i = 0; i < d; ++i) acc[i] += outer[i];
    }
    for (int i = 0; i < d; ++i)
      if (acc[i] != 0) throw std::logic_error("Jacobi identity fails");
  };
  if (sample == 0) {
    for (int x = 0; x < d; ++x)
      for (int y = x + 1; y < d; ++y)
        for (int z = y + 1; z < d; ++z) check_triple(x, y, z);
  } else {
    uint64_t state = 0x9e3779b97f4a7c15ull;
    auto next = [&]() {
      state = state * 6364136223846793005ull + 1442695040888963407ull;
      return (int)((state >> 33) % d);
    };
    for (size_t k = 0; k < sample; ++k) {
      int x = next(), y = next(), z = next();
      check_triple(x, y, z);
    }
  }
}

}  // namespace chevalley
