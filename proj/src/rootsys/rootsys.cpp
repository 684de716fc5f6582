#include "rootsys/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace rootsys {

namespace {

struct IrredData {
  IMat cartan;
  std::vector<int> norm2;
};

void check_pair(char family, int rank) {
  bool ok = false;
  switch (family) {
    case 'A': ok = rank >= 1; break;
    case 'B': ok = rank >= 2; break;
    case 'C': ok = rank >= 3; break;
    case 'D': ok = rank >= 4; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: ok = false;
  }
  if (!ok || rank > 8)
    throw std::invalid_argument(std::string("invalid root system type ") + family +
                                std::to_string(rank));
}

IrredData irreducible_cartan(char family, int rank) {
  check_pair(family, rank);
  int l = rank;
  IMat C(l, std::vector<int>(l, 0));
  std::vector<int> norm(l, 2);
  for (int i = 0; i < l; ++i) C[i][i] = 2;
  auto edge = [&](int i, int j) { C[i][j] = C[j][i] = -1; };
  switch (family) {
    case 'A':
      for (int i = 0; i + 1 < l; ++i) edge(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 2 < l; ++i) edge(i, i + 1);
      C[l - 2][l - 1] = -1;
      C[l - 1][l - 2] = -2;
      for (int i = 0; i + 1 < l; ++i) norm[i] = 4;  // alpha_l is the short root
      break;
    case 'C':
      for (int i = 0; i + 2 < l; ++i) edge(i, i + 1);
      C[l - 2][l - 1] = -2;
      C[l - 1][l - 2] = -1;
      norm[l - 1] = 4;  // alpha_l is the long root
      break;
    case 'D':
      for (int i = 0; i + 2 < l - 1; ++i) edge(i, i + 1);
      edge(l - 3, l - 2);
      edge(l - 3, l - 1);
      break;
    case 'E':
      edge(0, 2);
      edge(2, 3);
      edge(1, 3);
      for (int i = 3; i + 1 < l; ++i) edge(i, i + 1);
      break;
    case 'F':
      edge(0, 1);
      edge(2, 3);
      C[1][2] = -1;
      C[2][1] = -2;
      norm[0] = norm[1] = 4;
      break;
    case 'G':
      C[0][1] = -3;
      C[1][0] = -1;
      norm[1] = 6;
      break;
  }
  return {C, norm};
}

size_t expected_root_count(char family, int rank) {
  switch (family) {
    case 'A': return (size_t)rank * (rank + 1);
    case 'B':
    case 'C': return (size_t)2 * rank * rank;
    case 'D': return (size_t)2 * rank * (rank - 1);
    case 'E': return rank == 6 ? 72 : rank == 7 ? 126 : 240;
    case 'F': return 48;
    case 'G': return 12;
  }
  return 0;
}

}  // namespace

RootSystem RootSystem::build(char family, int rank) {
  return build(std::string(1, family) + std::to_string(rank));
}

RootSystem RootSystem::build(const std::string& type) {
  RootSystem rs;
  size_t pos = 0;
  while (pos < type.size()) {
    if (type[pos] == 'x' || type[pos] == 'X') ++pos;
    if (pos >= type.size()) break;
    char fam = (char)std::toupper(type[pos++]);
    size_t start = pos;
    while (pos < type.size() && std::isdigit(type[pos])) ++pos;
    if (start == pos) throw std::invalid_argument("cannot parse root system type: " + type);
    int rank = std::stoi(type.substr(start, pos - start));
    rs.types_.emplace_back(fam, rank);
  }
  if (rs.types_.empty()) throw std::invalid_argument("empty root system type");
  int offset = 0;
  for (auto [fam, rank] : rs.types_) {
    IrredData data = irreducible_cartan(fam, rank);
    rs.comp_range_.emplace_back(offset, offset + rank);
    for (int i = 0; i < rank; ++i) {
      rs.comp_of_.push_back((int)rs.comp_range_.size() - 1);
      rs.simple_norm2_.push_back(data.norm2[i]);
    }
    offset += rank;
    rs.rank_ += rank;
  }
  rs.cartan_.assign(rs.rank_, std::vector<int>(rs.rank_, 0));
  for (size_t c = 0; c < rs.types_.size(); ++c) {
    auto [b, e] = rs.comp_range_[c];
    IrredData data = irreducible_cartan(rs.types_[c].first, rs.types_[c].second);
    for (int i = b; i < e; ++i)
      for (int j = b; j < e; ++j) rs.cartan_[i][j] = data.cartan[i - b][j - b];
  }
  rs.generate();
  return rs;
}

void RootSystem::generate() {
  // close the simple roots under simple reflections
  std::set<Coords> seen;
  std::deque<Coords> queue;
  for (int i = 0; i < rank_; ++i) {
    Coords a(rank_, 0);
    a[i] = 1;
    seen.insert(a);
    queue.push_back(a);
  }
  while (!queue.empty()) {
    Coords v = queue.front();
    queue.pop_front();
    for (int i = 0; i < rank_; ++i) {
      Coords w = reflect_root(i, v);
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  for (const Coords& v : seen) {
    bool nonneg = true, nonpos = true;
    for (int c : v) {
      nonneg = nonneg && c >= 0;
      nonpos = nonpos && c <= 0;
    }
    if (!nonneg && !nonpos) throw std::logic_error("root with mixed signs");
    index_[v] = (int)roots_.size();
    roots_.push_back(v);
  }
  size_t expect = 0;
  for (auto [f, r] : types_) expect += expected_root_count(f, r);
  if (roots_.size() != expect) throw std::logic_error("root count mismatch");
  for (int idx = 0; idx < (int)roots_.size(); ++idx) {
    if (is_positive(idx)) positive_.push_back(idx);
    // (gamma,gamma) = sum_ij n_i n_j (alpha_i,alpha_j), (a_i,a_j) = C[i][j] d_i / 2
    long long n2 = 0;
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j)
        n2 += (long long)roots_[idx][i] * roots_[idx][j] * cartan_[i][j] * simple_norm2_[i];
    if (n2 % 2 != 0 || n2 <= 0) throw std::logic_error("bad root norm");
    norm2_.push_back((int)(n2 / 2));
  }
  // coweight basis = inverse Cartan matrix, solved exactly
  std::vector<std::vector<mpq_class>> m(rank_, std::vector<mpq_class>(2 * rank_, 0));
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) m[i][j] = cartan_[i][j];
    m[i][rank_ + i] = 1;
  }
  for (int col = 0; col < rank_; ++col) {
    int piv = col;
    while (piv < rank_ && m[piv][col] == 0) ++piv;
    if (piv == rank_) throw std::logic_error("singular Cartan matrix");
    std::swap(m[piv], m[col]);
    mpq_class d = m[col][col];
    for (int j = 0; j < 2 * rank_; ++j) m[col][j] /= d;
    for (int i = 0; i < rank_; ++i) {
      if (i == col || m[i][col] == 0) continue;
      mpq_class f = m[i][col];
      for (int j = 0; j < 2 * rank_; ++j) m[i][j] -= f * m[col][j];
    }
  }
  coweights_.assign(rank_, QVec(rank_));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) coweights_[i][j] = m[i][rank_ + j];
}

std::string RootSystem::type_name() const {
  std::string s;
  for (auto [f, r] : types_) {
    if (!s.empty()) s += "x";
    s += f;
    s += std::to_string(r);
  }
  return s;
}

int RootSystem::component_of_root(int idx) const {
  for (int i = 0; i < rank_; ++i)
    if (roots_[idx][i] != 0) return comp_of_[i];
  throw std::logic_error("zero root");
}

int RootSystem::index(const Coords& v) const {
  auto it = index_.find(v);
  return it == index_.end() ? -1 : it->second;
}

int RootSystem::height(int idx) const {
  return std::accumulate(roots_[idx].begin(), roots_[idx].end(), 0);
}

int RootSystem::negate(int idx) const {
  Coords v = roots_[idx];
  for (int& c : v) c = -c;
  return index_.at(v);
}

int RootSystem::pairing(const Coords& gamma, int i) const {
  int s = 0;
  for (int j = 0; j < rank_; ++j) s += gamma[j] * cartan_[i][j];
  return s;
}

Coords RootSystem::reflect_root(int i, const Coords& v) const {
  Coords w = v;
  w[i] -= pairing(v, i);
  return w;
}

QVec RootSystem::reflect_point(int i, const QVec& x) const {
  // r_i(x) = x - alpha_i(x) alpha_i^vee, alpha_i^vee = row i of Cartan in
  // coweight coordinates
  QVec y = x;
  mpq_class c = x[i];
  for (int j = 0; j < rank_; ++j) y[j] -= c * cartan_[i][j];
  return y;
}

mpq_class RootSystem::eval(const Coords& gamma, const QVec& x) const {
  mpq_class s = 0;
  for (int j = 0; j < rank_; ++j) s += gamma[j] * x[j];
  return s;
}

mpq_class RootSystem::eval(int idx, const QVec& x) const { return eval(roots_[idx], x); }

int RootSystem::highest_root(int component) const {
  auto [b, e] = comp_range_[component];
  int best = -1, best_h = -1;
  for (int idx : positive_) {
    bool in_comp = false;
    for (int i = b; i < e; ++i) in_comp = in_comp || roots_[idx][i] != 0;
    if (!in_comp) continue;
    int h = height(idx);
    if (h > best_h) {
      best_h = h;
      best = idx;
    }
  }
  // certify domination coordinatewise
  for (int idx : positive_) {
    if (component_of_root(idx) != component) continue;
    for (int i = 0; i < rank_; ++i)
      if (roots_[idx][i] > roots_[best][i])
        throw std::logic_error("highest root fails domination");
  }
  return best;
}

WeylWord WeylWord::identity(const RootSystem& rs) {
  WeylWord w;
  w.matrix.assign(rs.rank(), std::vector<int>(rs.rank(), 0));
  for (int i = 0; i < rs.rank(); ++i) w.matrix[i][i] = 1;
  return w;
}

WeylWord WeylWord::reflection(const RootSystem& rs, int i) {
  return identity(rs).then(rs, i);
}

WeylWord WeylWord::then(const RootSystem& rs, int i) const {
  // matrix of r_i on coweight coordinates: x -> x - x_i * (row i of Cartan)
  WeylWord out;
  out.word = word;
  out.word.push_back(i);
  int n = rs.rank();
  std::vector<std::vector<int>> R(n, std::vector<int>(n, 0));
  for (int a = 0; a < n; ++a) R[a][a] = 1;
  for (int j = 0; j < n; ++j) R[i][j] -= rs.cartan()[i][j];
  // out.matrix = R * matrix  (r_i applied after the existing word)
  out.matrix.assign(n, std::vector<int>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int s = 0;
      for (int c = 0; c < n; ++c) s += R[a][c] * matrix[c][b];
      out.matrix[a][b] = s;
    }
  return out;
}

QVec WeylWord::apply(const QVec& x) const {
  int n = (int)matrix.size();
  QVec y(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) y[a] += matrix[a][b] * x[b];
  return y;
}

std::pair<int, int> root_string(const RootSystem& rs, int alpha, int beta) {
  const Coords& a = rs.roots()[alpha];
  const Coords& b = rs.roots()[beta];
  if (alpha == beta || rs.negate(alpha) == beta)
    throw std::invalid_argument("root_string: alpha = +-beta");
  auto shift = [&](int k) {
    Coords v(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) v[i] = b[i] + k * a[i];
    return v;
  };
  int p = 0, q = 0;
  while (rs.is_root(shift(-(p + 1)))) ++p;
  while (rs.is_root(shift(q + 1))) ++q;
  return {p, q};
}

std::vector<QVec> weyl_orbit(const RootSystem& rs, const std::vector<int>& generators,
                             const QVec& v) {
  std::set<QVec> seen{v};
  std::deque<QVec> queue{v};
  while (!queue.empty()) {
    QVec x = queue.front();
    queue.pop_front();
    for (int i : generators) {
      QVec y = rs.reflect_point(i, x);
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::vector<std::vector<int>>> weyl_group_matrices(const RootSystem& rs,
                                                               size_t max_size) {
  std::set<std::vector<std::vector<int>>> seen;
  std::deque<std::vector<std::vector<int>>> queue;
  auto id = WeylWord::identity(rs).matrix;
  seen.insert(id);
  queue.push_back(id);
  std::vector<std::vector<std::vector<int>>> gens;
  for (int i = 0; i < rs.rank(); ++i) gens.push_back(WeylWord::reflection(rs, i).matrix);
  int n = rs.rank();
  while (!queue.empty()) {
    auto m = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      std::vector<std::vector<int>> prod(n, std::vector<int>(n, 0));
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          int s = 0;
          for (int c = 0; c < n; ++c) s += g[a][c] * m[c][b];
          prod[a][b] = s;
        }
      if (seen.insert(prod).second) {
        if (seen.size() > max_size)
          throw std::runtime_error("weyl_group_matrices: group larger than guard");
        queue.push_back(prod);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace rootsys
