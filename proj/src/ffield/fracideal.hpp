// fracideal.hpp -- principal fractional ideals of A = F_q[t], truncations
// J[m] at the place at infinity, and Riemann-Roch dimension counts.
#pragma once

#include <vector>

#include "ffield/poly.hpp"

namespace ffield {

// nonzero fractional ideal of the PID F_q[t], stored by its reduced
// generator normalized with monic numerator and denominator
class FracIdeal {
public:
  explicit FracIdeal(const RatFunc& gen);
  static FracIdeal unit_ideal(const GF& gf) { return FracIdeal(RatFunc::one(gf)); }

  const RatFunc& gen() const { return gen_; }
  const GF& gf() const { return gen_.gf(); }

  bool operator==(const FracIdeal& o) const { return gen_ == o.gen_; }
  bool operator!=(const FracIdeal& o) const { return !(*this == o); }

  FracIdeal operator+(const FracIdeal& o) const;  // gcd
  FracIdeal operator*(const FracIdeal& o) const;
  FracIdeal intersect(const FracIdeal& o) const;  // lcm
  FracIdeal inverse() const;
  FracIdeal pow(int k) const;

  bool contains(const RatFunc& x) const;  // x in J
  bool contained_in(const FracIdeal& o) const;
  bool is_integral() const { return gen_.is_polynomial(); }

  // degree of the associated divisor; deg((f)) = deg_t f for f in F_q[t]
  int degree() const;

  // basis of J[m] = { x in J : val_inf(x) >= -m } over F_q
  std::vector<RatFunc> truncated_basis(int m) const;

private:
  RatFunc gen_;
};

// dim_F J[m] = -deg J + m*d + 1 - g, valid when m*d >= deg J + 2g - 1
long long rr_dim(long long degJ, long long m, long long g, long long d);

// smallest ideal q with z*x^n in J  =>  x in q  (Dedekind monomial bound)
FracIdeal monomial_bound(const FracIdeal& J, const RatFunc& z, int n);

}  // namespace ffield
