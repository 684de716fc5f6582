#include "ffield/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace ffield {

Poly::Poly(const GF& gf, std::vector<uint8_t> coeffs) : gf_(&gf), coeffs_(std::move(coeffs)) {
  trim();
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::constant(const GF& gf, uint8_t c) {
  Poly p(gf);
  if (c) p.coeffs_ = {c};
  return p;
}

Poly Poly::t_power(const GF& gf, int k) {
  if (k < 0) throw std::invalid_argument("Poly::t_power: negative exponent");
  Poly p(gf);
  p.coeffs_.assign(k + 1, 0);
  p.coeffs_[k] = 1;
  return p;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r(*gf_);
  r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (size_t i = 0; i < r.coeffs_.size(); ++i)
    r.coeffs_[i] = gf_->add(coeff((int)i), o.coeff((int)i));
  r.trim();
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  Poly r(*gf_);
  r.coeffs_ = coeffs_;
  for (auto& c : r.coeffs_) c = gf_->neg(c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r(*gf_);
  if (is_zero() || o.is_zero()) return r;
  r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i]) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j)
      r.coeffs_[i + j] = gf_->add(r.coeffs_[i + j], gf_->mul(coeffs_[i], o.coeffs_[j]));
  }
  r.trim();
  return r;
}

Poly Poly::scaled(uint8_t c) const {
  Poly r(*gf_);
  if (!c) return r;
  r.coeffs_ = coeffs_;
  for (auto& x : r.coeffs_) x = gf_->mul(x, c);
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(gf_->inv(lead()));
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.is_zero()) throw std::domain_error("Poly::divmod: division by zero");
  const GF& gf = a.gf();
  q = Poly(gf);
  r = a;
  int db = b.degree();
  uint8_t linv = gf.inv(b.lead());
  if (r.degree() >= db) q.coeffs_.assign(r.degree() - db + 1, 0);
  while (r.degree() >= db) {
    int k = r.degree() - db;
    uint8_t c = gf.mul(r.lead(), linv);
    q.coeffs_[k] = c;
    for (int j = 0; j <= db; ++j)
      r.coeffs_[k + j] = gf.sub(r.coeffs_[k + j], gf.mul(c, b.coeffs_[j]));
    r.trim();
  }
  q.trim();
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b, q, r;
  while (!y.is_zero()) {
    divmod(x, y, q, r);
    x = y;
    y = r;
  }
  return x.monic();
}

Poly Poly::lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.gf());
  Poly g = gcd(a, b), q, r;
  divmod(a * b, g, q, r);
  return q.monic();
}

bool Poly::divides(const Poly& other) const {
  if (is_zero()) return other.is_zero();
  Poly q, r;
  divmod(other, *this, q, r);
  return r.is_zero();
}

uint8_t Poly::eval(uint8_t x) const {
  const GF& gf = *gf_;
  uint8_t acc = 0;
  for (int i = degree(); i >= 0; --i) acc = gf.add(gf.mul(acc, x), coeffs_[i]);
  return acc;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    if (!coeffs_[i]) continue;
    if (!s.empty()) s += "+";
    if (i == 0 || coeffs_[i] != 1) s += std::to_string((int)coeffs_[i]);
    if (i > 0) {
      if (coeffs_[i] != 1) s += "*";
      s += "t";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

std::vector<Poly> monic_polys_of_degree(const GF& gf, int d) {
  std::vector<Poly> out;
  long long count = 1;
  for (int i = 0; i < d; ++i) count *= gf.q();
  for (long long c = 0; c < count; ++c) {
    std::vector<uint8_t> v(d + 1, 0);
    long long m = c;
    for (int i = 0; i < d; ++i) {
      v[i] = (uint8_t)(m % gf.q());
      m /= gf.q();
    }
    v[d] = 1;
    out.emplace_back(gf, v);
  }
  return out;
}

bool is_irreducible(const Poly& f) {
  int d = f.degree();
  if (d < 1) return false;
  for (int e = 1; 2 * e <= d; ++e)
    for (const Poly& g : monic_polys_of_degree(f.gf(), e))
      if (g.divides(f)) return false;
  return true;
}

Factorization factor(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("factor: zero polynomial");
  Factorization out;
  out.unit = f.lead();
  Poly rem = f.monic();
  for (int d = 1; rem.degree() > 0; ++d) {
    if (2 * d > rem.degree()) {
      // no factor of degree < d survives, so rem itself is irreducible
      out.factors.emplace_back(rem, 1);
      break;
    }
    for (const Poly& g : monic_polys_of_degree(f.gf(), d)) {
      int mult = 0;
      Poly q, r;
      while (g.divides(rem)) {
        Poly::divmod(rem, g, q, r);
        rem = q;
        ++mult;
      }
      if (mult) out.factors.emplace_back(g, mult);
      if (rem.degree() < 2 * d) break;
    }
  }
  return out;
}

RatFunc::RatFunc(const Poly& num) : num_(num), den_(Poly::one(num.gf())) {}

RatFunc::RatFunc(const Poly& num, const Poly& den) : num_(num), den_(den) {
  if (den.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  reduce();
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = Poly::one(num_.gf());
    return;
  }
  Poly g = Poly::gcd(num_, den_), q, r;
  if (g.degree() > 0) {
    Poly::divmod(num_, g, q, r);
    num_ = q;
    Poly::divmod(den_, g, q, r);
    den_ = q;
  }
  uint8_t c = den_.lead();
  if (c != 1) {
    uint8_t ci = num_.gf().inv(c);
    num_ = num_.scaled(ci);
    den_ = den_.scaled(ci);
  }
}

RatFunc RatFunc::t_power(const GF& gf, int k) {
  if (k >= 0) return RatFunc(Poly::t_power(gf, k));
  return RatFunc(Poly::one(gf), Poly::t_power(gf, -k));
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }
RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}
RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}
RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
  return RatFunc(den_, num_);
}

Poly RatFunc::as_polynomial() const {
  if (!is_polynomial()) throw std::domain_error("RatFunc: not a polynomial");
  return num_.scaled(num_.gf().inv(den_.coeff(0)));
}

std::optional<int> RatFunc::val_inf() const {
  if (is_zero()) return std::nullopt;
  return den_.degree() - num_.degree();
}

std::string RatFunc::str() const {
  if (is_polynomial()) return as_polynomial().str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace ffield
