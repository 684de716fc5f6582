// gf.hpp -- arithmetic context for the finite field GF(p^e), q <= 32.
#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

namespace ffield {

// Field elements are indices 0..q-1 encoding the coefficient vector of the
// polynomial basis F_p[x]/(f), digit i of the base-p expansion = coefficient
// of x^i.  f is the monic irreducible of degree e over F_p whose encoded
// coefficient value is least; this pins the field construction across runs.
class GF {
public:
  GF(int p, int e);
  static const GF& get(int q);  // cached context per q

  int p() const { return p_; }
  int e() const { return e_; }
  int q() const { return q_; }

  uint8_t add(uint8_t a, uint8_t b) const { return add_[a * q_ + b]; }
  uint8_t sub(uint8_t a, uint8_t b) const { return add_[a * q_ + neg_[b]]; }
  uint8_t mul(uint8_t a, uint8_t b) const { return mul_[a * q_ + b]; }
  uint8_t neg(uint8_t a) const { return neg_[a]; }
  uint8_t inv(uint8_t a) const {
    if (a == 0) throw std::domain_error("GF: inverse of zero");
    return inv_[a];
  }
  uint8_t div(uint8_t a, uint8_t b) const { return mul(a, inv(b)); }
  // image of an integer under Z -> GF(q) (prime-field embedding)
  uint8_t from_int(long long n) const;

  const std::vector<int>& modulus() const { return modulus_; }

private:
  int p_, e_, q_;
  std::vector<int> modulus_;  // coefficients of f, degree e, monic
  std::vector<uint8_t> add_, mul_, neg_, inv_;
};

bool is_prime(int n);

}  // namespace ffield
