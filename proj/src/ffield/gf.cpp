#include "ffield/gf.hpp"

#include <map>
#include <mutex>

namespace ffield {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// dense coefficient vectors over F_p, used only to build the tables
using Vec = std::vector<int>;

Vec vec_of(int code, int p, int len) {
  Vec v(len, 0);
  for (int i = 0; i < len; ++i) {
    v[i] = code % p;
    code /= p;
  }
  return v;
}

int code_of(const Vec& v, int p) {
  int c = 0;
  for (int i = (int)v.size() - 1; i >= 0; --i) c = c * p + v[i];
  return c;
}

int deg(const Vec& v) {
  for (int i = (int)v.size() - 1; i >= 0; --i)
    if (v[i]) return i;
  return -1;
}

// a mod m, both coefficient vectors over F_p, m monic
Vec poly_mod(Vec a, const Vec& m, int p) {
  int dm = deg(m);
  for (int i = deg(a); i >= dm; --i) {
    int c = a[i];
    if (!c) continue;
    for (int j = 0; j <= dm; ++j) {
      int k = i - dm + j;
      a[k] = ((a[k] - c * m[j]) % p + p * p) % p;
    }
  }
  a.resize(dm);
  return a;
}

Vec poly_mul(const Vec& a, const Vec& b, int p) {
  Vec r(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return r;
}

bool divides(const Vec& d, const Vec& a, int p) {
  Vec r = a;
  int dd = deg(d), da = deg(r);
  if (dd < 0) return false;
  int lead_inv = 1;
  for (int t = 1; t < p; ++t)
    if (t * d[dd] % p == 1) lead_inv = t;
  for (int i = da; i >= dd; --i) {
    int c = r[i] * lead_inv % p;
    if (!c) continue;
    for (int j = 0; j <= dd; ++j) {
      int k = i - dd + j;
      r[k] = ((r[k] - c * d[j]) % p + p * p) % p;
    }
  }
  return deg(r) < 0;
}

bool irreducible(const Vec& f, int p) {
  int df = deg(f);
  if (df < 1) return false;
  // trial division by all monic polynomials of degree 1..df/2
  for (int d = 1; 2 * d <= df; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int c = 0; c < count; ++c) {
      Vec g = vec_of(c, p, d + 1);
      g[d] = 1;
      if (divides(g, f, p)) return false;
    }
  }
  return true;
}

}  // namespace

GF::GF(int p, int e) : p_(p), e_(e) {
  if (!is_prime(p) || e < 1) throw std::invalid_argument("GF: q must be a prime power");
  q_ = 1;
  for (int i = 0; i < e; ++i) {
    q_ *= p;
    if (q_ > 32) throw std::invalid_argument("GF: q > 32 beyond desk scale");
  }
  // pick the least monic irreducible of degree e
  modulus_ = Vec(e + 1, 0);
  modulus_[e] = 1;
  if (e > 1) {
    int count = 1;
    for (int i = 0; i < e; ++i) count *= p;
    bool found = false;
    for (int c = 0; c < count && !found; ++c) {
      Vec f = vec_of(c, p, e + 1);
      f[e] = 1;
      if (irreducible(f, p)) {
        modulus_ = f;
        found = true;
      }
    }
    if (!found) throw std::logic_error("GF: no irreducible found");
  }
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.resize(q_, 0);
  for (int a = 0; a < q_; ++a) {
    Vec va = vec_of(a, p, e);
    Vec na(e);
    for (int i = 0; i < e; ++i) na[i] = (p - va[i]) % p;
    neg_[a] = (uint8_t)code_of(na, p);
    for (int b = 0; b < q_; ++b) {
      Vec vb = vec_of(b, p, e);
      Vec s(e);
      for (int i = 0; i < e; ++i) s[i] = (va[i] + vb[i]) % p;
      add_[a * q_ + b] = (uint8_t)code_of(s, p);
      Vec m = poly_mod(poly_mul(va, vb, p), modulus_, p);
      m.resize(e);
      mul_[a * q_ + b] = (uint8_t)code_of(m, p);
    }
  }
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) inv_[a] = (uint8_t)b;
}

uint8_t GF::from_int(long long n) const {
  long long r = n % p_;
  if (r < 0) r += p_;
  return (uint8_t)r;  // prime subfield: codes 0..p-1 are the constants
}

const GF& GF::get(int q) {
  static std::map<int, std::unique_ptr<GF>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it == cache.end()) {
    int p = 2;
    while (p <= q && q % p != 0) ++p;
    int e = 0, m = q;
    while (m > 1) {
      if (m % p != 0) throw std::invalid_argument("GF: q not a prime power");
      m /= p;
      ++e;
    }
    it = cache.emplace(q, std::make_unique<GF>(p, e)).first;
  }
  return *it->second;
}

}  // namespace ffield
