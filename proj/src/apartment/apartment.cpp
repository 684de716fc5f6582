#include "apartment/apartment.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace apartment {

mpz_class floor_q(const mpq_class& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

mpz_class ceil_q(const mpq_class& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

bool is_special(const RootSystem& rs, const QVec& x) {
  for (const auto& c : x)
    if (c.get_den() != 1) return false;
  return (int)x.size() == rs.rank();
}

std::vector<int> local_roots(const RootSystem& rs, const QVec& x) {
  std::vector<int> out;
  for (size_t idx = 0; idx < rs.roots().size(); ++idx) {
    mpq_class v = rs.eval((int)idx, x);
    if (v.get_den() == 1) out.push_back((int)idx);
  }
  return out;
}

bool SectorFace::contains(const RootSystem& rs, const QVec& z, bool closure) const {
  std::set<int> th(theta.begin(), theta.end());
  for (int i = 0; i < rs.rank(); ++i) {
    mpq_class d = z[i] - tip[i];
    if (th.count(i)) {
      if (d != 0) return false;
    } else if (closure ? d < 0 : d <= 0) {
      return false;
    }
  }
  return true;
}

bool EnclosedRegion::contains(const QVec& z) const {
  for (auto& [idx, r] : thresholds)
    if (rs->eval(idx, z) < r) return false;
  return true;
}

EnclosedRegion enclosure(const RootSystem& rs, const std::vector<QVec>& points) {
  if (points.empty()) throw std::invalid_argument("enclosure: empty point set");
  EnclosedRegion reg;
  reg.rs = &rs;
  for (size_t idx = 0; idx < rs.roots().size(); ++idx) {
    mpq_class mn = rs.eval((int)idx, points[0]);
    for (const QVec& p : points) mn = std::min(mn, rs.eval((int)idx, p));
    reg.thresholds[(int)idx] = floor_q(mn);
  }
  return reg;
}

EnclosedRegion enclosure_of_sector(const RootSystem& rs, const SectorFace& q) {
  EnclosedRegion reg;
  reg.rs = &rs;
  std::set<int> th(q.theta.begin(), q.theta.end());
  for (size_t idx = 0; idx < rs.roots().size(); ++idx) {
    bool bounded = true;  // inf over the cone is alpha(tip) iff all free
                          // coefficients are nonnegative
    for (int i = 0; i < rs.rank() && bounded; ++i)
      if (!th.count(i) && rs.roots()[idx][i] < 0) bounded = false;
    if (bounded) reg.thresholds[(int)idx] = floor_q(rs.eval((int)idx, q.tip));
  }
  return reg;
}

QVec subsector_tip(const RootSystem& rs, const QVec& w0, const std::vector<int>& theta,
                   const std::map<int, mpq_class>& thresholds) {
  std::set<int> th(theta.begin(), theta.end());
  for (auto& [idx, n] : thresholds) {
    (void)n;
    if (!rs.is_positive(idx))
      throw std::invalid_argument("subsector_tip: threshold on a non-positive root");
    bool in_theta_span = true;
    for (int i = 0; i < rs.rank(); ++i)
      if (!th.count(i) && rs.roots()[idx][i] != 0) in_theta_span = false;
    if (in_theta_span)
      throw std::invalid_argument("subsector_tip: root lies in the span of Theta");
  }
  QVec w1 = w0;
  for (int b = 0; b < rs.rank(); ++b) {
    if (th.count(b)) continue;
    // m_beta = max (n_alpha - alpha(w0)) / c_alpha over alpha with b_{ab} > 0
    mpq_class m = 0;
    for (auto& [idx, n] : thresholds) {
      if (rs.roots()[idx][b] <= 0) continue;
      long c_alpha = 0;
      for (int i = 0; i < rs.rank(); ++i)
        if (!th.count(i) && rs.roots()[idx][i] > 0) c_alpha += rs.roots()[idx][i];
      mpq_class cand = (n - rs.eval(idx, w0)) / c_alpha;
      m = std::max(m, cand);
    }
    mpz_class nstar = floor_q(m) + 1;  // least positive integer > max(m, 0)
    w1[b] += nstar;
  }
  return w1;
}

QVec subsector_special(const RootSystem& rs, const QVec& w0, const std::vector<int>& theta,
                       const QVec& w1) {
  if (!is_special(rs, w0))
    throw std::invalid_argument("subsector_special: w0 must be special");
  std::set<int> th(theta.begin(), theta.end());
  std::map<int, mpq_class> bounds;
  for (int idx : rs.positive()) {
    bool in_theta_span = true;
    for (int i = 0; i < rs.rank(); ++i)
      if (!th.count(i) && rs.roots()[idx][i] != 0) in_theta_span = false;
    if (!in_theta_span) bounds[idx] = rs.eval(idx, w1);
  }
  QVec w2 = subsector_tip(rs, w0, theta, bounds);
  if (!is_special(rs, w2)) throw std::logic_error("subsector_special: w2 not special");
  return w2;
}

std::vector<QVec> corner_set(const RootSystem& rs, const QVec& x,
                             const std::vector<int>& theta) {
  int n = rs.rank();
  std::set<int> th(theta.begin(), theta.end());
  // constraint roots: alpha with nonnegative coefficients on the free coords
  struct Con {
    int idx;
    mpz_class r;
  };
  std::vector<Con> cons;
  for (size_t idx = 0; idx < rs.roots().size(); ++idx) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      if (!th.count(i) && rs.roots()[idx][i] < 0) ok = false;
    if (ok) cons.push_back({(int)idx, floor_q(rs.eval((int)idx, x))});
  }
  // per-coordinate search boxes
  std::vector<mpz_class> lo(n), hi(n);
  for (int b = 0; b < n; ++b) {
    if (th.count(b)) {
      lo[b] = floor_q(x[b]);
      hi[b] = ceil_q(x[b]);
      continue;
    }
    lo[b] = floor_q(x[b]);
    // beyond hi, any member is dominated by (member - coweight_b)
    mpz_class best = lo[b];
    for (auto& con : cons) {
      int bb = rs.roots()[con.idx][b];
      if (bb <= 0) continue;
      mpz_class L = 0;  // lower bound for the other terms of alpha
      for (int g = 0; g < n; ++g) {
        if (g == b) continue;
        int c = rs.roots()[con.idx][g];
        if (c == 0) continue;
        mpz_class glo = floor_q(x[g]);
        mpz_class ghi = th.count(g) ? ceil_q(x[g]) : mpz_class(0);
        // free coords have c >= 0, so the minimum is at the lower end
        L += th.count(g) ? std::min(c * glo, c * ghi) : c * glo;
      }
      // need bb*z_b >= r + bb - L  =>  z_b >= ceil((r + bb - L)/bb)
      mpz_class num = con.r + bb - L;
      mpz_class bound;
      mpz_cdiv_q(bound.get_mpz_t(), num.get_mpz_t(), mpz_class(bb).get_mpz_t());
      best = std::max(best, bound);
    }
    hi[b] = best;
  }
  // enumerate integer points of the box meeting every constraint
  std::vector<QVec> members;
  std::vector<mpz_class> cur(n);
  std::function<void(int)> rec = [&](int b) {
    if (b == n) {
      QVec z(n);
      for (int i = 0; i < n; ++i) z[i] = cur[i];
      for (auto& con : cons)
        if (rs.eval(con.idx, z) < con.r) return;
      members.push_back(z);
      return;
    }
    for (mpz_class v = lo[b]; v <= hi[b]; ++v) {
      cur[b] = v;
      rec(b + 1);
    }
  };
  rec(0);
  // minimality: drop members dominated by another member
  auto dominated_by = [&](const QVec& w, const QVec& wp) {  // w in closure(Q(wp))
    for (int i = 0; i < n; ++i) {
      mpq_class d = w[i] - wp[i];
      if (th.count(i)) {
        if (d != 0) return false;
      } else if (d < 0) {
        return false;
      }
    }
    return true;
  };
  std::vector<QVec> corners;
  for (const QVec& w : members) {
    bool minimal = true;
    for (const QVec& wp : members) {
      if (wp == w) continue;
      if (dominated_by(w, wp)) {
        minimal = false;
        break;
      }
    }
    if (minimal) corners.push_back(w);
  }
  std::sort(corners.begin(), corners.end());
  return corners;
}

namespace {

using QMat = std::vector<std::vector<mpq_class>>;

// integer basis of ker(M) over Q, columns scaled primitive, fixed pivoting
std::vector<std::vector<mpz_class>> integer_kernel(const QMat& M) {
  if (M.empty()) return {};
  size_t rows = M.size(), cols = M[0].size();
  QMat a = M;
  std::vector<int> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      mpq_class f = a[i][c] / a[r][c];
      for (size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back((int)c);
    ++r;
  }
  std::vector<std::vector<mpz_class>> basis;
  for (size_t c = 0; c < cols; ++c) {
    if (std::count(pivot_col.begin(), pivot_col.end(), (int)c)) continue;
    std::vector<mpq_class> z(cols, 0);
    z[c] = 1;
    for (size_t i = 0; i < pivot_col.size(); ++i) z[pivot_col[i]] = -a[i][c] / a[i][pivot_col[i]];
    mpz_class l = 1;
    for (auto& q : z) {
      mpz_class d = q.get_den();
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
      l = l / g * d;
    }
    std::vector<mpz_class> zi(cols);
    mpz_class g = 0;
    for (size_t i = 0; i < cols; ++i) {
      mpq_class v = z[i] * l;
      v.canonicalize();
      zi[i] = v.get_num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), zi[i].get_mpz_t());
    }
    if (g > 1)
      for (auto& v : zi) v /= g;
    basis.push_back(zi);
  }
  return basis;
}

// solve M s = rhs exactly; empty optional when inconsistent
std::optional<std::vector<mpq_class>> solve_linear(const QMat& M,
                                                   const std::vector<mpq_class>& rhs) {
  size_t rows = M.size(), cols = M[0].size();
  QMat a(rows, std::vector<mpq_class>(cols + 1));
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) a[i][j] = M[i][j];
    a[i][cols] = rhs[i];
  }
  std::vector<int> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      mpq_class f = a[i][c] / a[r][c];
      for (size_t j = c; j <= cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back((int)c);
    ++r;
  }
  for (size_t i = r; i < rows; ++i)
    if (a[i][cols] != 0) return std::nullopt;
  std::vector<mpq_class> s(cols, 0);
  for (size_t i = 0; i < pivot_col.size(); ++i) s[pivot_col[i]] = a[i][cols] / a[i][pivot_col[i]];
  return s;
}

struct Decomp {
  std::vector<std::vector<mpz_class>> kernel;  // columns, integer
  QMat image_basis;                            // columns of A spanning im(A)
  std::vector<int> image_cols;
};

Decomp decompose(const QMat& A) {
  Decomp d;
  size_t n = A.size();
  d.kernel = integer_kernel(A);
  // column space basis: greedy independent columns
  QMat chosen;
  for (size_t c = 0; c < n; ++c) {
    std::vector<mpq_class> col(n);
    for (size_t i = 0; i < n; ++i) col[i] = A[i][c];
    QMat trial = chosen;
    trial.push_back(col);
    // rank via elimination on rows = vectors
    QMat m = trial;
    size_t rank = 0;
    for (size_t cc = 0; cc < n && rank < m.size(); ++cc) {
      size_t p = rank;
      while (p < m.size() && m[p][cc] == 0) ++p;
      if (p == m.size()) continue;
      std::swap(m[p], m[rank]);
      for (size_t i = 0; i < m.size(); ++i) {
        if (i == rank || m[i][cc] == 0) continue;
        mpq_class f = m[i][cc] / m[rank][cc];
        for (size_t j = 0; j < n; ++j) m[i][j] -= f * m[rank][j];
      }
      ++rank;
    }
    if (rank == trial.size()) {
      chosen = trial;
      d.image_cols.push_back((int)c);
    }
  }
  d.image_basis = chosen;  // stored as rows = basis vectors
  return d;
}

}  // namespace

mpz_class fixed_point_denominator(const RootSystem& rs, size_t weyl_guard) {
  auto group = rootsys::weyl_group_matrices(rs, weyl_guard);
  int n = rs.rank();
  mpz_class e = 1;
  for (const auto& w : group) {
    QMat A(n, std::vector<mpq_class>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) A[i][j] = mpq_class(w[i][j]) - (i == j ? 1 : 0);
    Decomp dec = decompose(A);
    // pseudo-inverse denominators: for each basis vector e_j, split into
    // kernel + image and solve A s = image-part
    mpz_class Nw = 1;
    {
      // build the combined basis [kernel | image] and solve for coefficients
      size_t k = dec.kernel.size(), m = dec.image_basis.size();
      if (m > 0) {
        QMat B(n, std::vector<mpq_class>(k + m));
        for (size_t c = 0; c < k; ++c)
          for (int i = 0; i < n; ++i) B[i][c] = mpq_class(dec.kernel[c][i]);
        for (size_t c = 0; c < m; ++c)
          for (int i = 0; i < n; ++i) B[i][k + c] = dec.image_basis[c][i];
        for (int j = 0; j < n; ++j) {
          std::vector<mpq_class> rhs(n, 0);
          rhs[j] = 1;
          auto coeff = solve_linear(B, rhs);
          if (!coeff) throw std::logic_error("kernel+image does not span");
          std::vector<mpq_class> img(n, 0);
          for (size_t c = 0; c < m; ++c)
            for (int i = 0; i < n; ++i) img[i] += (*coeff)[k + c] * dec.image_basis[c][i];
          auto s = solve_linear(A, img);
          if (!s) throw std::logic_error("image vector not solvable");
          for (auto& q : *s) {
            mpz_class dq = q.get_den();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), Nw.get_mpz_t(), dq.get_mpz_t());
            Nw = Nw / g * dq;
          }
        }
      }
    }
    // polytope denominator of the constraint matrix (alpha o B_kernel)
    mpz_class dA = 1;
    if (!dec.kernel.empty()) {
      ZMatrix rowsM;
      for (size_t idx = 0; idx < rs.roots().size(); ++idx) {
        std::vector<mpz_class> row(dec.kernel.size());
        for (size_t c = 0; c < dec.kernel.size(); ++c) {
          mpz_class s = 0;
          for (int i = 0; i < n; ++i) s += rs.roots()[idx][i] * dec.kernel[c][i];
          row[c] = s;
        }
        rowsM.push_back(row);
      }
      dA = polytope_denominator(rowsM);
    }
    mpz_class contrib = Nw * dA;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), e.get_mpz_t(), contrib.get_mpz_t());
    e = e / g * contrib;
  }
  return e;
}

FixedPointResult normalize_fixed_point(const RootSystem& rs,
                                       const std::vector<std::vector<int>>& wmat,
                                       const std::vector<long>& v, const QVec& x,
                                       mpz_class e_hint) {
  int n = rs.rank();
  // precondition: w(x) + v = x
  QVec wx(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) wx[i] += mpq_class(wmat[i][j]) * x[j];
  for (int i = 0; i < n; ++i)
    if (wx[i] + v[i] != x[i])
      throw std::invalid_argument("normalize_fixed_point: x is not fixed by (w, v)");
  QMat A(n, std::vector<mpq_class>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A[i][j] = mpq_class(wmat[i][j]) - (i == j ? 1 : 0);
  Decomp dec = decompose(A);
  size_t k = dec.kernel.size(), m = dec.image_basis.size();
  // x = x1 + x' with x1 in ker, x' in im
  QVec xprime(n, 0);
  if (m > 0) {
    QMat B(n, std::vector<mpq_class>(k + m));
    for (size_t c = 0; c < k; ++c)
      for (int i = 0; i < n; ++i) B[i][c] = mpq_class(dec.kernel[c][i]);
    for (size_t c = 0; c < m; ++c)
      for (int i = 0; i < n; ++i) B[i][k + c] = dec.image_basis[c][i];
    auto coeff = solve_linear(B, x);
    if (!coeff) throw std::logic_error("normalize_fixed_point: decomposition failed");
    for (size_t c = 0; c < m; ++c)
      for (int i = 0; i < n; ++i) xprime[i] += (*coeff)[k + c] * dec.image_basis[c][i];
  }
  // polytope (x' + ker) cap cl({x}) parametrized by u in ker coordinates
  // constraints: alpha(x' + B u) >= floor(alpha(x))
  FixedPointResult out;
  if (k == 0) {
    out.z = QVec(n, 0);
    out.y = x;
  } else {
    ZMatrix M;
    QVector b;
    for (size_t idx = 0; idx < rs.roots().size(); ++idx) {
      std::vector<mpz_class> row(k);
      for (size_t c = 0; c < k; ++c) {
        mpz_class s = 0;
        for (int i = 0; i < n; ++i) s += rs.roots()[idx][i] * dec.kernel[c][i];
        row[c] = -s;  // -(alpha o B) u <= alpha(x') - floor(alpha(x))
      }
      M.push_back(row);
      b.push_back(rs.eval((int)idx, xprime) - mpq_class(floor_q(rs.eval((int)idx, x))));
    }
    auto verts = polytope_vertices_q(M, b);
    if (verts.empty()) throw std::logic_error("normalize_fixed_point: no vertex found");
    std::sort(verts.begin(), verts.end());
    const QVector& u = verts.front();
    out.y = xprime;
    for (size_t c = 0; c < k; ++c)
      for (int i = 0; i < n; ++i) out.y[i] += u[c] * dec.kernel[c][i];
    out.z = QVec(n);
    for (int i = 0; i < n; ++i) out.z[i] = out.y[i] - x[i];
  }
  out.e = e_hint != 0 ? e_hint : fixed_point_denominator(rs);
  // certification of the three postconditions
  for (int i = 0; i < n; ++i) {
    mpq_class az = 0;
    for (int j = 0; j < n; ++j) az += mpq_class(wmat[i][j]) * out.z[j];
    if (az != out.z[i]) throw std::logic_error("z is not w-fixed");
  }
  for (size_t idx = 0; idx < rs.roots().size(); ++idx)
    if (rs.eval((int)idx, out.y) < floor_q(rs.eval((int)idx, x)))
      throw std::logic_error("x+z leaves the enclosure of x");
  for (int i = 0; i < n; ++i) {
    mpq_class scaled = out.y[i] * out.e;
    if (scaled.get_den() != 1) throw std::logic_error("denominator bound violated");
  }
  return out;
}

}  // namespace apartment
