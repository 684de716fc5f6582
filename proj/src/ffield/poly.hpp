// poly.hpp -- exact univariate polynomials and rational functions over GF(q).
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ffield/gf.hpp"

namespace ffield {

class Poly {
public:
  Poly() : gf_(nullptr) {}
  explicit Poly(const GF& gf) : gf_(&gf) {}
  Poly(const GF& gf, std::vector<uint8_t> coeffs);
  static Poly zero(const GF& gf) { return Poly(gf); }
  static Poly one(const GF& gf) { return constant(gf, 1); }
  static Poly constant(const GF& gf, uint8_t c);
  static Poly t_power(const GF& gf, int k);  // t^k, k >= 0

  const GF& gf() const { return *gf_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return (int)coeffs_.size() - 1; }  // -1 for zero
  uint8_t coeff(int i) const {
    return (i >= 0 && i < (int)coeffs_.size()) ? coeffs_[i] : 0;
  }
  uint8_t lead() const { return is_zero() ? 0 : coeffs_.back(); }
  const std::vector<uint8_t>& coeffs() const { return coeffs_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly scaled(uint8_t c) const;
  Poly monic() const;  // divide by leading coefficient
  // division with remainder; divisor nonzero
  static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
  static Poly gcd(const Poly& a, const Poly& b);  // monic gcd, gcd(0,0)=0
  static Poly lcm(const Poly& a, const Poly& b);
  bool divides(const Poly& other) const;  // *this | other

  uint8_t eval(uint8_t x) const;
  std::string str() const;  // human form in variable t

private:
  void trim();
  const GF* gf_;
  std::vector<uint8_t> coeffs_;  // coeffs_[i] multiplies t^i; no trailing zeros
};

// irreducible factorization by trial division, ascending degree;
// returns monic factors with multiplicity, and the leading unit
struct Factorization {
  uint8_t unit;
  std::vector<std::pair<Poly, int>> factors;
};
Factorization factor(const Poly& f);
bool is_irreducible(const Poly& f);
std::vector<Poly> monic_polys_of_degree(const GF& gf, int d);

// reduced fraction num/den, den monic; zero is 0/1
class RatFunc {
public:
  RatFunc() = default;
  explicit RatFunc(const Poly& num);
  RatFunc(const Poly& num, const Poly& den);
  static RatFunc zero(const GF& gf) { return RatFunc(Poly::zero(gf)); }
  static RatFunc one(const GF& gf) { return RatFunc(Poly::one(gf)); }
  static RatFunc t_power(const GF& gf, int k);  // t^k, any integer k

  const GF& gf() const { return num_.gf(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc operator-() const;
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  RatFunc inverse() const;
  bool is_polynomial() const { return den_.degree() == 0; }
  Poly as_polynomial() const;  // requires is_polynomial()

  // valuation at infinity: deg den - deg num; nullopt encodes +infinity (zero)
  std::optional<int> val_inf() const;

  std::string str() const;

private:
  void reduce();
  Poly num_, den_;
};

}  // namespace ffield
