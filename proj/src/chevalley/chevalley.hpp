// chevalley.hpp -- commutator structure constants c^{r,s}, normal-form
// collection of unipotent words, and the triangular conjugation-polynomial
// table for subsets satisfying (C1) and (C2).
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "chevalley/lie.hpp"
#include "ffield/gf.hpp"
#include "subsets/subsets.hpp"

namespace chevalley {

// sparse multivariate polynomial with integer coefficients; every exponent
// vector has the same length (number of variables)
class MPolyZ {
public:
  MPolyZ() : nvars_(0) {}
  explicit MPolyZ(int nvars) : nvars_(nvars) {}
  static MPolyZ constant(int nvars, const mpz_class& c);
  static MPolyZ monomial(int nvars, int var, int power, const mpz_class& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  const std::map<std::vector<int>, mpz_class>& terms() const { return terms_; }

  MPolyZ operator+(const MPolyZ& o) const;
  MPolyZ operator-(const MPolyZ& o) const;
  MPolyZ operator*(const MPolyZ& o) const;
  bool operator==(const MPolyZ& o) const { return terms_ == o.terms_; }

  uint8_t eval_fq(const ffield::GF& gf, const std::vector<uint8_t>& x) const;
  std::string str() const;  // variables printed as X1..Xn

private:
  void cleanup();
  int nvars_;
  std::map<std::vector<int>, mpz_class> terms_;
};

// one factor theta_root(coeff) of a product of root-group elements
struct CommTerm {
  int root;  // root index of r*alpha + s*beta
  int r, s;
  long long c;
};

// Chevalley commutator data for a root system; the Lie-algebra signs fix
// every c^{r,s} through exact adjoint exponentials over Q[x,y].
// Convention: [a,b] = a b a^{-1} b^{-1} and
//   [theta_a(x), theta_b(y)] = prod theta_{ra+sb}( c^{r,s} x^r y^s )
// with factors ordered by ascending height of ra+sb.
class StructureConstants {
public:
  explicit StructureConstants(const RootSystem& rs);

  const RootSystem& rs() const { return *rs_; }
  const LieAlgebra& lie() const { return lie_; }
  long long nconst(int a, int b) const { return lie_.nconst(a, b); }

  // interior-ordered commutator expansion for a pair of roots, memoized
  const std::vector<CommTerm>& commutator_terms(int alpha, int beta) const;

private:
  const RootSystem* rs_;
  LieAlgebra lie_;
  mutable std::map<std::pair<int, int>, std::vector<CommTerm>> cache_;
};

// ---- ring contexts for word coefficients ----

struct FqCtx {
  const ffield::GF* gf;
  using V = uint8_t;
  V zero() const { return 0; }
  V one() const { return 1; }
  V from_int(long long n) const { return gf->from_int(n); }
  V add(V a, V b) const { return gf->add(a, b); }
  V mul(V a, V b) const { return gf->mul(a, b); }
  V neg(V a) const { return gf->neg(a); }
  bool is_zero(V a) const { return a == 0; }
  V pow(V a, int k) const {
    V r = 1;
    for (int i = 0; i < k; ++i) r = gf->mul(r, a);
    return r;
  }
};

struct MPolyCtx {
  int nvars;
  using V = MPolyZ;
  V zero() const { return MPolyZ(nvars); }
  V one() const { return MPolyZ::constant(nvars, 1); }
  V from_int(long long n) const { return MPolyZ::constant(nvars, mpz_class((long)n)); }
  V add(const V& a, const V& b) const { return a + b; }
  V mul(const V& a, const V& b) const { return a * b; }
  V neg(const V& a) const { return zero() - a; }
  bool is_zero(const V& a) const { return a.is_zero(); }
  V pow(const V& a, int k) const {
    V r = one();
    for (int i = 0; i < k; ++i) r = r * a;
    return r;
  }
};

template <class Ctx>
struct WLetter {
  int root;
  typename Ctx::V coeff;
};
template <class Ctx>
using WordT = std::vector<WLetter<Ctx>>;

// [theta_alpha(x), theta_beta(y)] as a word in the interior order
template <class Ctx>
WordT<Ctx> commutator_word(const StructureConstants& sc, const Ctx& R, int alpha,
                           const typename Ctx::V& x, int beta, const typename Ctx::V& y) {
  WordT<Ctx> out;
  for (const CommTerm& t : sc.commutator_terms(alpha, beta)) {
    typename Ctx::V v = R.mul(R.from_int(t.c), R.mul(R.pow(x, t.r), R.pow(y, t.s)));
    if (!R.is_zero(v)) out.push_back({t.root, v});
  }
  return out;
}

template <class Ctx>
WordT<Ctx> word_inverse(const Ctx& R, const WordT<Ctx>& w) {
  WordT<Ctx> out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->root, R.neg(it->coeff)});
  return out;
}

// rewrite to prod over Phi^+ in the given target order (order_rank maps a
// root index to its position); positive-root letters only
template <class Ctx>
WordT<Ctx> collect(const StructureConstants& sc, const Ctx& R, WordT<Ctx> w,
                   const std::vector<int>& order_rank) {
  for (auto& l : w)
    if (!sc.rs().is_positive(l.root))
      throw std::invalid_argument("collect: non-positive root letter");
  size_t guard = 0;
  while (true) {
    if (++guard > 2000000) throw std::runtime_error("collect: no convergence");
    // drop zero letters
    size_t kept = 0;
    for (size_t i = 0; i < w.size(); ++i)
      if (!R.is_zero(w[i].coeff)) w[kept++] = w[i];
    w.resize(kept);
    // leftmost adjacent inversion
    size_t inv = w.size();
    for (size_t i = 0; i + 1 < w.size(); ++i)
      if (order_rank[w[i].root] > order_rank[w[i + 1].root]) {
        inv = i;
        break;
      }
    if (inv < w.size()) {
      WLetter<Ctx> a = w[inv], b = w[inv + 1];
      WordT<Ctx> corr = commutator_word(sc, R, a.root, a.coeff, b.root, b.coeff);
      WordT<Ctx> next(w.begin(), w.begin() + inv);
      next.insert(next.end(), corr.begin(), corr.end());
      next.push_back(b);
      next.push_back(a);
      next.insert(next.end(), w.begin() + inv + 2, w.end());
      w = std::move(next);
      continue;
    }
    // sorted: merge adjacent equal roots
    bool merged = false;
    for (size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i].root == w[i + 1].root) {
        w[i].coeff = R.add(w[i].coeff, w[i + 1].coeff);
        w.erase(w.begin() + i + 1);
        merged = true;
        break;
      }
    if (!merged) break;
  }
  return w;
}

// order_rank for the height-ascending normal order of sc.lie()
std::vector<int> normal_order_rank(const StructureConstants& sc);

// ---- conjugation polynomial table (triangular) ----

struct ConjPolyTable {
  std::vector<int> full_order;          // alpha_1..alpha_M (root indices)
  int m = 0;                            // prefix length = |Psi|
  std::vector<std::vector<MPolyZ>> P;   // P[i][j], 0-based, m x m
};

// psi must carry a (C3) numbering and satisfy (C1) and (C2); the numbering
// is extended to all of Phi^+ by height-descending order on the complement
ConjPolyTable conjugation_polynomials(const StructureConstants& sc,
                                      const subsets::RootSubset& psi);

}  // namespace chevalley
