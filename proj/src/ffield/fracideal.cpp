#include "ffield/fracideal.hpp"

#include <stdexcept>

namespace ffield {

namespace {
RatFunc normalize(const RatFunc& g) {
  if (g.is_zero()) throw std::invalid_argument("FracIdeal: zero generator");
  uint8_t c = g.num().lead();
  if (c == 1) return g;
  return g * RatFunc(Poly::constant(g.gf(), g.gf().inv(c)));
}
}  // namespace

FracIdeal::FracIdeal(const RatFunc& gen) : gen_(normalize(gen)) {}

FracIdeal FracIdeal::operator+(const FracIdeal& o) const {
  // (a/b) + (c/d) = ( gcd(ad, cb) / bd )
  Poly ad = gen_.num() * o.gen_.den();
  Poly cb = o.gen_.num() * gen_.den();
  return FracIdeal(RatFunc(Poly::gcd(ad, cb), gen_.den() * o.gen_.den()));
}

FracIdeal FracIdeal::intersect(const FracIdeal& o) const {
  Poly ad = gen_.num() * o.gen_.den();
  Poly cb = o.gen_.num() * gen_.den();
  return FracIdeal(RatFunc(Poly::lcm(ad, cb), gen_.den() * o.gen_.den()));
}

FracIdeal FracIdeal::operator*(const FracIdeal& o) const {
  return FracIdeal(gen_ * o.gen_);
}

FracIdeal FracIdeal::inverse() const { return FracIdeal(gen_.inverse()); }

FracIdeal FracIdeal::pow(int k) const {
  FracIdeal r = unit_ideal(gf());
  FracIdeal base = k >= 0 ? *this : inverse();
  for (int i = 0; i < (k >= 0 ? k : -k); ++i) r = r * base;
  return r;
}

bool FracIdeal::contains(const RatFunc& x) const {
  if (x.is_zero()) return true;
  return (x / gen_).is_polynomial();
}

bool FracIdeal::contained_in(const FracIdeal& o) const {
  return o.contains(RatFunc(gen_.num(), gen_.den()));
}

int FracIdeal::degree() const {
  return gen_.num().degree() - gen_.den().degree();
}

std::vector<RatFunc> FracIdeal::truncated_basis(int m) const {
  // J = gA, val_inf(g t^i) = val_inf(g) - i >= -m  <=>  i <= m - deg J
  std::vector<RatFunc> basis;
  int top = m - degree();
  for (int i = 0; i <= top; ++i)
    basis.push_back(gen_ * RatFunc(Poly::t_power(gf(), i)));
  return basis;
}

long long rr_dim(long long degJ, long long m, long long g, long long d) {
  if (d <= 0 || g < 0) throw std::invalid_argument("rr_dim: need d >= 1, g >= 0");
  if (m * d < degJ + 2 * g - 1)
    throw std::domain_error("rr_dim: outside the Riemann-Roch regime");
  return -degJ + m * d + 1 - g;
}

FracIdeal monomial_bound(const FracIdeal& J, const RatFunc& z, int n) {
  if (z.is_zero() || n <= 0) throw std::invalid_argument("monomial_bound: bad input");
  // factor the generator of J (z)^{-1} and take ceil(a_i/n) exponents
  RatFunc w = J.gen() / z;
  Factorization fn = factor(w.num());
  Factorization fd = factor(w.den());
  RatFunc q = RatFunc::one(J.gf());
  auto apply = [&](const Poly& p, int a) {
    int b = a >= 0 ? (a + n - 1) / n : -((-a) / n);  // ceil(a/n)
    RatFunc pr(p);
    for (int i = 0; i < (b >= 0 ? b : -b); ++i) q = b >= 0 ? q * pr : q / pr;
  };
  for (auto& [p, mult] : fn.factors) apply(p, mult);
  for (auto& [p, mult] : fd.factors) apply(p, -mult);
  return FracIdeal(q);
}

}  // namespace ffield
