#include "chevalley/chevalley.hpp"

#include <algorithm>
#include <stdexcept>

namespace chevalley {

using rootsys::Coords;

// ---- MPolyZ ----

void MPolyZ::cleanup() {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = it->second == 0 ? terms_.erase(it) : std::next(it);
}

MPolyZ MPolyZ::constant(int nvars, const mpz_class& c) {
  MPolyZ p(nvars);
  if (c != 0) p.terms_[std::vector<int>(nvars, 0)] = c;
  return p;
}

MPolyZ MPolyZ::monomial(int nvars, int var, int power, const mpz_class& c) {
  MPolyZ p(nvars);
  if (c != 0) {
    std::vector<int> e(nvars, 0);
    e[var] = power;
    p.terms_[e] = c;
  }
  return p;
}

bool MPolyZ::is_one() const {
  return terms_.size() == 1 && terms_.begin()->second == 1 &&
         terms_.begin()->first == std::vector<int>(nvars_, 0);
}

MPolyZ MPolyZ::operator+(const MPolyZ& o) const {
  MPolyZ r = *this;
  for (auto& [e, c] : o.terms_) r.terms_[e] += c;
  r.cleanup();
  return r;
}

MPolyZ MPolyZ::operator-(const MPolyZ& o) const {
  MPolyZ r = *this;
  for (auto& [e, c] : o.terms_) r.terms_[e] -= c;
  r.cleanup();
  return r;
}

MPolyZ MPolyZ::operator*(const MPolyZ& o) const {
  MPolyZ r(nvars_);
  for (auto& [e1, c1] : terms_)
    for (auto& [e2, c2] : o.terms_) {
      std::vector<int> e(nvars_);
      for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
      r.terms_[e] += c1 * c2;
    }
  r.cleanup();
  return r;
}

uint8_t MPolyZ::eval_fq(const ffield::GF& gf, const std::vector<uint8_t>& x) const {
  uint8_t acc = 0;
  for (auto& [e, c] : terms_) {
    long long cm = mpz_class(c % gf.p()).get_si();
    uint8_t v = gf.from_int(cm);
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) v = gf.mul(v, x[i]);
    acc = gf.add(acc, v);
  }
  return acc;
}

std::string MPolyZ::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto& [e, c] : terms_) {
    if (!s.empty()) s += " + ";
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += "X" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty())
      s += c.get_str();
    else if (c == 1)
      s += mono;
    else if (c == -1)
      s += "-" + mono;
    else
      s += c.get_str() + "*" + mono;
  }
  return s;
}

// ---- bivariate rational polynomials and sparse matrices over them ----

namespace {

using Mono = std::pair<int, int>;
using QP2 = std::map<Mono, mpq_class>;        // polynomial in x, y
using RRow = std::map<int, mpq_class>;
using RMat = std::vector<RRow>;               // rational sparse matrix
using PRow = std::map<int, QP2>;
using PMat = std::vector<PRow>;               // polynomial sparse matrix

void qp2_clean(QP2& a) {
  for (auto it = a.begin(); it != a.end();)
    it = it->second == 0 ? a.erase(it) : std::next(it);
}

QP2 qp2_mul(const QP2& a, const QP2& b) {
  QP2 r;
  for (auto& [ea, ca] : a)
    for (auto& [eb, cb] : b) r[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
  qp2_clean(r);
  return r;
}

QP2 qp2_scale(const QP2& a, const mpq_class& c) {
  QP2 r;
  if (c == 0) return r;
  for (auto& [e, v] : a) r[e] = v * c;
  return r;
}

QP2 qp2_pow(const QP2& a, int k) {
  QP2 r{{{0, 0}, 1}};
  for (int i = 0; i < k; ++i) r = qp2_mul(r, a);
  return r;
}

PMat pmat_identity(int d) {
  PMat m(d);
  for (int i = 0; i < d; ++i) m[i][i] = QP2{{{0, 0}, 1}};
  return m;
}

bool pmat_is_zero(const PMat& m) {
  for (auto& row : m)
    if (!row.empty()) return false;
  return true;
}

PMat pmat_mul(const PMat& a, const PMat& b) {
  int d = (int)a.size();
  PMat r(d);
  for (int i = 0; i < d; ++i)
    for (auto& [j, aij] : a[i]) {
      auto bit = b[j].begin();
      for (; bit != b[j].end(); ++bit) {
        QP2 prod = qp2_mul(aij, bit->second);
        if (prod.empty()) continue;
        QP2& cell = r[i][bit->first];
        for (auto& [e, c] : prod) cell[e] += c;
      }
    }
  for (auto& row : r) {
    for (auto it = row.begin(); it != row.end();) {
      qp2_clean(it->second);
      it = it->second.empty() ? row.erase(it) : std::next(it);
    }
  }
  return r;
}

void pmat_add_scaled(PMat& acc, const RMat& m, const QP2& z) {
  for (size_t i = 0; i < m.size(); ++i)
    for (auto& [j, c] : m[i]) {
      QP2& cell = acc[i][j];
      for (auto& [e, v] : z) cell[e] += v * c;
      qp2_clean(cell);
      if (cell.empty()) acc[i].erase(j);
    }
}

RMat rmat_mul(const RMat& a, const RMat& b) {
  int d = (int)a.size();
  RMat r(d);
  for (int i = 0; i < d; ++i)
    for (auto& [j, aij] : a[i])
      for (auto& [k, bjk] : b[j]) {
        mpq_class& cell = r[i][k];
        cell += aij * bjk;
      }
  for (auto& row : r)
    for (auto it = row.begin(); it != row.end();)
      it = it->second == 0 ? row.erase(it) : std::next(it);
  return r;
}

bool rmat_is_zero(const RMat& m) {
  for (auto& row : m)
    if (!row.empty()) return false;
  return true;
}

// exp(z * A) for nilpotent rational A and polynomial scalar z
PMat pmat_exp(const RMat& A, const QP2& z, int dim) {
  PMat acc = pmat_identity(dim);
  RMat cur(dim);
  for (int i = 0; i < dim; ++i) cur[i][i] = 1;
  QP2 zp{{{0, 0}, 1}};
  for (int m = 1; m <= 2 * dim + 4; ++m) {
    cur = rmat_mul(cur, A);
    for (auto& row : cur)
      for (auto& [j, c] : row) c /= m;
    zp = qp2_mul(zp, z);
    if (rmat_is_zero(cur)) return acc;
    if (zp.empty()) return acc;
    pmat_add_scaled(acc, cur, zp);
  }
  throw std::logic_error("pmat_exp: matrix not nilpotent");
}

// log of a unipotent polynomial matrix
PMat pmat_log(const PMat& P) {
  int d = (int)P.size();
  PMat B = P;
  for (int i = 0; i < d; ++i) {
    QP2& cell = B[i][i];
    cell[{0, 0}] -= 1;
    qp2_clean(cell);
    if (cell.empty()) B[i].erase(i);
  }
  PMat acc(d), Bm = B;
  int sign = 1;
  for (int m = 1; m <= 2 * d + 4; ++m) {
    if (pmat_is_zero(Bm)) return acc;
    for (size_t i = 0; i < Bm.size(); ++i)
      for (auto& [j, cell] : Bm[i]) {
        QP2& a = acc[i][j];
        for (auto& [e, c] : cell) a[e] += c * mpq_class(sign, m);
        qp2_clean(a);
        if (a.empty()) acc[i].erase(j);
      }
    Bm = pmat_mul(Bm, B);
    sign = -sign;
  }
  throw std::logic_error("pmat_log: matrix not unipotent");
}

}  // namespace

// ---- StructureConstants ----

StructureConstants::StructureConstants(const RootSystem& rs) : rs_(&rs), lie_(rs) {
  if (rs.rank() > 8) throw std::invalid_argument("StructureConstants: rank > 8");
}

const std::vector<CommTerm>& StructureConstants::commutator_terms(int alpha, int beta) const {
  auto key = std::make_pair(alpha, beta);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  const RootSystem& rs = *rs_;
  if (alpha == beta || rs.negate(alpha) == beta)
    throw std::invalid_argument("commutator_terms: alpha = +-beta");
  int d = lie_.dim();
  // interior roots r*alpha + s*beta, ordered by ascending height then (r,s)
  struct Entry {
    int r, s, root;
  };
  std::vector<Entry> interior;
  for (int r = 1; r <= 4; ++r)  // root strings never exceed length 4
    for (int s = 1; s <= 4; ++s) {
      Coords v(rs.rank());
      for (int i = 0; i < rs.rank(); ++i)
        v[i] = r * rs.roots()[alpha][i] + s * rs.roots()[beta][i];
      int idx = rs.index(v);
      if (idx >= 0) interior.push_back({r, s, idx});
    }
  std::sort(interior.begin(), interior.end(), [&](const Entry& a, const Entry& b) {
    int qa = std::abs(rs.height(a.root)), qb = std::abs(rs.height(b.root));
    if (qa != qb) return qa < qb;
    return std::make_pair(a.r, a.s) < std::make_pair(b.r, b.s);
  });
  // adjoint matrices
  auto ad_of = [&](int ridx) {
    RMat A(d);
    int e = lie_.e_index(ridx);
    for (int j = 0; j < d; ++j)
      for (auto& [row, c] : lie_.bracket_basis(e, j)) A[row][j] = c;
    return A;
  };
  RMat Aa = ad_of(alpha), Ab = ad_of(beta);
  QP2 x{{{1, 0}, 1}}, y{{{0, 1}, 1}};
  QP2 nx = qp2_scale(x, -1), ny = qp2_scale(y, -1);
  PMat P = pmat_mul(pmat_mul(pmat_exp(Aa, x, d), pmat_exp(Ab, y, d)),
                    pmat_mul(pmat_exp(Aa, nx, d), pmat_exp(Ab, ny, d)));
  std::vector<CommTerm> terms;
  for (const Entry& en : interior) {
    // read the e_root coefficient of log(P) against a Cartan column
    int j = -1;
    for (int i = 0; i < rs.rank(); ++i)
      if (lie_.cartan_pairing(en.root, i) != 0) {
        j = i;
        break;
      }
    PMat L = pmat_log(P);
    QP2 u;
    int row = lie_.e_index(en.root);
    auto rit = L[row].find(j);
    if (rit != L[row].end())
      u = qp2_scale(rit->second, mpq_class(-1) / lie_.cartan_pairing(en.root, j));
    if (!u.empty()) {
      if (u.size() != 1 || u.begin()->first != Mono{en.r, en.s})
        throw std::logic_error("commutator coefficient is not the expected monomial");
      mpq_class c = u.begin()->second;
      c.canonicalize();
      if (c.get_den() != 1) throw std::logic_error("non-integer commutator constant");
      terms.push_back({en.root, en.r, en.s, c.get_num().get_si()});
    }
    // strip this factor
    RMat Ag = ad_of(en.root);
    P = pmat_mul(pmat_exp(Ag, qp2_scale(u, -1), d), P);
  }
  // certify: nothing may remain
  PMat I = pmat_identity(d);
  for (int i = 0; i < d; ++i) {
    for (auto& [jj, cell] : P[i]) {
      QP2 expect = I[i].count(jj) ? I[i][jj] : QP2{};
      if (cell != expect) throw std::logic_error("commutator stripping left a remainder");
    }
    if (P[i].size() != I[i].size()) throw std::logic_error("commutator stripping left a remainder");
  }
  // c^{1,1} must equal N
  for (auto& t : terms)
    if (t.r == 1 && t.s == 1 && t.c != lie_.nconst(alpha, beta))
      throw std::logic_error("c^{1,1} differs from the Lie constant");
  return cache_.emplace(key, std::move(terms)).first->second;
}

std::vector<int> normal_order_rank(const StructureConstants& sc) {
  std::vector<int> rank(sc.rs().roots().size(), -1);
  const auto& order = sc.lie().positive_sorted();
  for (size_t i = 0; i < order.size(); ++i) rank[order[i]] = (int)i;
  return rank;
}

// ---- conjugation polynomials ----

ConjPolyTable conjugation_polynomials(const StructureConstants& sc,
                                      const subsets::RootSubset& psi) {
  const RootSystem& rs = sc.rs();
  auto rep = subsets::check_conditions(psi);
  if (!rep.c1 || !rep.c2)
    throw std::invalid_argument("conjugation_polynomials: Psi must satisfy C1 and C2");
  if (!psi.numbering_ok)
    throw std::invalid_argument("conjugation_polynomials: numbering violates C3");
  ConjPolyTable tab;
  tab.full_order = psi.elements;
  tab.m = (int)psi.elements.size();
  std::vector<int> rest;
  for (int idx : rs.positive())
    if (!std::count(psi.elements.begin(), psi.elements.end(), idx)) rest.push_back(idx);
  std::sort(rest.begin(), rest.end(), [&](int a, int b) {
    int ha = rs.height(a), hb = rs.height(b);
    if (ha != hb) return ha > hb;
    return rs.roots()[a] > rs.roots()[b];
  });
  tab.full_order.insert(tab.full_order.end(), rest.begin(), rest.end());
  int M = (int)tab.full_order.size();
  int m = tab.m;
  std::vector<int> psi_pos(rs.roots().size(), -1);
  for (int i = 0; i < m; ++i) psi_pos[tab.full_order[i]] = i;
  // base case N = 0: identity table
  tab.P.assign(m, std::vector<MPolyZ>(m, MPolyZ(M)));
  for (int i = 0; i < m; ++i) tab.P[i][i] = MPolyZ::constant(M, 1);
  // induction over the letters of u, N = 1..M
  for (int N = 1; N <= M; ++N) {
    int aN = tab.full_order[N - 1];
    auto next = tab.P;
    for (int j = 0; j < m; ++j) {
      int aj = tab.full_order[j];
      // contributions from a_l in Psi with a_j = r a_N + a_l
      for (int r = 1; r <= 4; ++r) {
        Coords v(rs.rank());
        for (int i = 0; i < rs.rank(); ++i)
          v[i] = rs.roots()[aj][i] - r * rs.roots()[aN][i];
        int al = rs.index(v);
        if (al < 0 || psi_pos[al] < 0) continue;
        int l = psi_pos[al];
        // c^{r,1}_{a_N, a_l}
        long long c = 0;
        for (const CommTerm& t : sc.commutator_terms(aN, al)) {
          if (t.s != 1) throw std::logic_error("s > 1 term against C1''");
          if (t.r == r) c = t.c;
        }
        if (c == 0) continue;
        MPolyZ xr = MPolyZ::monomial(M, N - 1, r, mpz_class((long)c));
        for (int i = 0; i < m; ++i) next[i][j] = next[i][j] + tab.P[i][l] * xr;
      }
    }
    tab.P = std::move(next);
  }
  // triangularity certification
  for (int i = 0; i < m; ++i) {
    if (!tab.P[i][i].is_one()) throw std::logic_error("diagonal entry is not 1");
    for (int j = i + 1; j < m; ++j)
      if (!tab.P[i][j].is_zero()) throw std::logic_error("upper entry is not 0");
  }
  return tab;
}

}  // namespace chevalley
