#include "apartment/polytope.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace apartment {

mpz_class det(const ZMatrix& M) {
  size_t n = M.size();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a[i][j] = M[i][j];
  mpq_class d = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      d = -d;
    }
    d *= a[col][col];
    for (size_t i = col + 1; i < n; ++i) {
      if (a[i][col] == 0) continue;
      mpq_class f = a[i][col] / a[col][col];
      for (size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  d.canonicalize();
  if (d.get_den() != 1) throw std::logic_error("integer determinant expected");
  return d.get_num();
}

int rank_of(const ZMatrix& M) {
  if (M.empty()) return 0;
  size_t rows = M.size(), cols = M[0].size();
  std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(cols));
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) a[i][j] = M[i][j];
  int r = 0;
  for (size_t col = 0; col < cols && (size_t)r < rows; ++col) {
    size_t piv = r;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (size_t i = 0; i < rows; ++i) {
      if ((int)i == r || a[i][col] == 0) continue;
      mpq_class f = a[i][col] / a[r][col];
      for (size_t j = col; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

namespace {
// iterate over k-subsets of [0, m)
bool next_subset(std::vector<int>& idx, int m) {
  int k = (int)idx.size();
  int i = k - 1;
  while (i >= 0 && idx[i] == m - k + i) --i;
  if (i < 0) return false;
  ++idx[i];
  for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}
}  // namespace

mpz_class polytope_denominator(const ZMatrix& M) {
  if (M.empty()) return 1;
  int m = (int)M.size(), n = (int)M[0].size();
  if (rank_of(M) < n) return 1;
  mpz_class d = 1;
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  do {
    ZMatrix sub(n, std::vector<mpz_class>(n));
    for (int i = 0; i < n; ++i) sub[i] = M[idx[i]];
    mpz_class sd = det(sub);
    if (sd != 0) {
      mpz_class a = abs(sd);
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), a.get_mpz_t());
      d = d / g * a;
    }
  } while (next_subset(idx, m));
  return d;
}

std::vector<QVector> polytope_vertices_q(const ZMatrix& M, const QVector& b) {
  std::vector<QVector> out;
  if (M.empty()) return out;
  int m = (int)M.size(), n = (int)M[0].size();
  if (m < n) return out;
  std::set<QVector> seen;
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  do {
    // solve the n x n subsystem exactly
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n + 1));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) a[i][j] = M[idx[i]][j];
      a[i][n] = b[idx[i]];
    }
    bool singular = false;
    for (int col = 0; col < n && !singular; ++col) {
      int piv = col;
      while (piv < n && a[piv][col] == 0) ++piv;
      if (piv == n) {
        singular = true;
        break;
      }
      std::swap(a[piv], a[col]);
      for (int i = 0; i < n; ++i) {
        if (i == col || a[i][col] == 0) continue;
        mpq_class f = a[i][col] / a[col][col];
        for (int j = col; j <= n; ++j) a[i][j] -= f * a[col][j];
      }
    }
    if (singular) continue;
    QVector z(n);
    for (int i = 0; i < n; ++i) z[i] = a[i][n] / a[i][i];
    bool feasible = true;
    for (int i = 0; i < m && feasible; ++i) {
      mpq_class lhs = 0;
      for (int j = 0; j < n; ++j) lhs += mpq_class(M[i][j]) * z[j];
      if (lhs > b[i]) feasible = false;
    }
    if (feasible && seen.insert(z).second) out.push_back(z);
  } while (next_subset(idx, m));
  return out;
}

std::vector<QVector> polytope_vertices(const ZMatrix& M, const std::vector<mpz_class>& b) {
  QVector bq(b.size());
  for (size_t i = 0; i < b.size(); ++i) bq[i] = b[i];
  return polytope_vertices_q(M, bq);
}

}  // namespace apartment
