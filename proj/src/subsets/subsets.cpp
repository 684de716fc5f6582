#include "subsets/subsets.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace subsets {

using rootsys::Coords;

namespace {

int max_height(const RootSystem& rs) {
  int h = 0;
  for (int idx : rs.positive()) h = std::max(h, rs.height(idx));
  return h;
}

Coords combine(const RootSystem& rs, int r, int a, int s, int b) {
  Coords v(rs.rank());
  for (int i = 0; i < rs.rank(); ++i)
    v[i] = r * rs.roots()[a][i] + s * rs.roots()[b][i];
  return v;
}

}  // namespace

RootSubset make_subset(const RootSystem& rs, std::vector<int> elements) {
  std::set<int> dedup(elements.begin(), elements.end());
  if (dedup.size() != elements.size())
    throw std::invalid_argument("RootSubset: duplicate elements");
  for (int idx : elements)
    if (!rs.is_positive(idx)) throw std::invalid_argument("RootSubset: non-positive root");
  RootSubset out;
  out.rs = &rs;
  out.elements = std::move(elements);
  out.recompute_flags();
  return out;
}

void RootSubset::recompute_flags() {
  ConditionReport rep = check_conditions(*this);
  closed = rep.c0;
  c1 = rep.c1;
  c2 = rep.c2;
  numbering_ok = true;
  for (size_t i = 0; i < elements.size(); ++i)
    for (size_t j = 0; j < elements.size(); ++j)
      if (i < j && poset_less(*rs, elements[i], elements[j])) numbering_ok = false;
}

ConditionReport check_conditions(const RootSubset& psi) {
  const RootSystem& rs = *psi.rs;
  std::set<int> in(psi.elements.begin(), psi.elements.end());
  ConditionReport rep{true, true, true, true, true, true};
  int hmax = max_height(rs);
  auto sum_status = [&](const Coords& v) {
    int idx = rs.index(v);
    return idx;  // -1 if not a root
  };
  // (C0) closure within Psi; (C2) no sum of two Psi roots is a root
  for (int a : psi.elements)
    for (int b : psi.elements) {
      int s = sum_status(combine(rs, 1, a, 1, b));
      if (s >= 0) {
        rep.c2 = false;
        if (!in.count(s) && a != b) rep.c0 = false;
      }
    }
  // (C1): alpha in Phi^+, beta in Psi
  for (int a : rs.positive())
    for (int b : psi.elements) {
      int s = sum_status(combine(rs, 1, a, 1, b));
      if (s >= 0 && !in.count(s)) rep.c1 = false;
    }
  // primed variants with r,s >= 1 bounded by the height of the highest root
  for (int a : rs.positive()) {
    int ha = rs.height(a);
    for (int b : psi.elements) {
      int hb = rs.height(b);
      for (int r = 1; r * ha <= hmax; ++r)
        for (int s = 1; r * ha + s * hb <= hmax; ++s) {
          int x = sum_status(combine(rs, r, a, s, b));
          if (x < 0) continue;
          if (!in.count(x)) {
            rep.c1p = false;
            rep.c1pp = false;
          } else if (s != 1) {
            rep.c1pp = false;
          }
        }
    }
  }
  for (int a : psi.elements) {
    int ha = rs.height(a);
    for (int b : psi.elements) {
      int hb = rs.height(b);
      for (int r = 1; r * ha <= hmax; ++r)
        for (int s = 1; r * ha + s * hb <= hmax; ++s)
          if (sum_status(combine(rs, r, a, s, b)) >= 0) rep.c2p = false;
    }
  }
  return rep;
}

bool poset_less(const RootSystem& rs, int beta, int gamma) {
  if (beta == gamma) return false;
  // BFS from beta adding simple roots inside Phi^+
  std::set<int> seen{beta};
  std::deque<int> queue{beta};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (int i = 0; i < rs.rank(); ++i) {
      Coords v = rs.roots()[cur];
      v[i] += 1;
      int nxt = rs.index(v);
      if (nxt < 0 || seen.count(nxt)) continue;
      if (nxt == gamma) return true;
      seen.insert(nxt);
      queue.push_back(nxt);
    }
  }
  return false;
}

RootSubset psi_theta(const RootSystem& rs, const std::vector<int>& theta) {
  if (rs.num_components() != 1)
    throw std::invalid_argument("psi_theta: irreducible system required");
  if ((int)theta.size() >= rs.rank())
    throw std::invalid_argument("psi_theta: Theta must be a proper subset of Delta");
  std::set<int> th(theta.begin(), theta.end());
  int h = rs.highest_root(0);
  const Coords& hc = rs.roots()[h];
  std::vector<int> elems;
  for (int idx : rs.positive()) {
    bool match = true;
    for (int i = 0; i < rs.rank(); ++i)
      if (!th.count(i) && rs.roots()[idx][i] != hc[i]) match = false;
    if (match) elems.push_back(idx);
  }
  // negative roots cannot match: the coefficient on any free simple root
  // equals that of the highest root, which is >= 1
  return make_subset(rs, elems);
}

std::vector<RootSubset> psi_flag(const RootSystem& rs, const std::vector<int>& theta) {
  std::vector<std::vector<int>> stages;  // element lists, global indices
  std::set<int> th_all(theta.begin(), theta.end());
  std::vector<int> accumulated;  // union of finished components
  for (int c = 0; c < rs.num_components(); ++c) {
    auto [b, e] = rs.component_range(c);
    std::vector<int> th_c;
    for (int i = b; i < e; ++i)
      if (th_all.count(i)) th_c.push_back(i);
    if ((int)th_c.size() == e - b) continue;  // Theta_j = Delta_j: omit factor
    // greedy enlargement inside this component, first enlarging alpha in
    // Bourbaki order
    // components of a reducible system: psi_theta needs the standalone
    // irreducible system, so rebuild via coordinate filtering here
    std::vector<int> th_cur = th_c;
    auto psi_of = [&](const std::vector<int>& th) {
      std::set<int> ths(th.begin(), th.end());
      int hidx = rs.highest_root(c);
      const Coords& hc = rs.roots()[hidx];
      std::vector<int> elems;
      for (int idx : rs.positive()) {
        if (rs.component_of_root(idx) != c) continue;
        bool match = true;
        for (int i = b; i < e; ++i)
          if (!ths.count(i) && rs.roots()[idx][i] != hc[i]) match = false;
        if (match) elems.push_back(idx);
      }
      return elems;
    };
    std::vector<int> cur = psi_of(th_cur);
    int m_c = (e - b) - (int)th_c.size();
    for (int step = 0; step < m_c; ++step) {
      std::vector<int> stage = accumulated;
      stage.insert(stage.end(), cur.begin(), cur.end());
      stages.push_back(stage);
      if (step + 1 == m_c) break;
      bool grown = false;
      for (int i = b; i < e && !grown; ++i) {
        if (std::count(th_cur.begin(), th_cur.end(), i)) continue;
        std::vector<int> th_next = th_cur;
        th_next.push_back(i);
        std::vector<int> nxt = psi_of(th_next);
        if (nxt.size() > cur.size()) {
          th_cur = th_next;
          cur = nxt;
          grown = true;
        }
      }
      if (!grown) throw std::logic_error("psi_flag: no enlarging simple root");
    }
    accumulated.insert(accumulated.end(), cur.begin(), cur.end());
  }
  std::vector<RootSubset> out;
  for (auto& st : stages) out.push_back(make_subset(rs, st));
  return out;
}

namespace {

// per-type basis element lists as coordinate vectors, Bourbaki numbering
std::vector<Coords> basis_coords(char fam, int l) {
  std::vector<Coords> out;
  auto range_one = [&](int lo, int hi) {  // alpha_lo + ... + alpha_hi, 1-based
    Coords v(l, 0);
    for (int i = lo; i <= hi; ++i) v[i - 1] += 1;
    return v;
  };
  switch (fam) {
    case 'A':
      for (int i = 1; i <= l; ++i) out.push_back(range_one(i, l));
      break;
    case 'B':
      // (a_1+...+a_l) + sum_{i<=k<=l} a_k for 2 <= i <= l+1
      for (int i = 2; i <= l + 1; ++i) {
        Coords v = range_one(1, l);
        for (int k = i; k <= l; ++k) v[k - 1] += 1;
        out.push_back(v);
      }
      break;
    case 'C':
      for (int i = 1; i <= l; ++i) {
        Coords v = range_one(1, l);
        for (int k = i; k <= l - 1; ++k) v[k - 1] += 1;
        out.push_back(v);
      }
      break;
    case 'D': {
      out.push_back(range_one(1, l - 1));
      for (int i = 2; i <= l - 1; ++i) {
        Coords v = range_one(1, l);
        for (int k = i; k <= l - 2; ++k) v[k - 1] += 1;
        out.push_back(v);
      }
      Coords v = range_one(1, l - 2);
      v[l - 1] += 1;
      out.push_back(v);
      break;
    }
    case 'E': {
      auto mk = [&](const char* digits) {
        Coords v(l);
        for (int i = 0; i < l; ++i) v[i] = digits[i] - '0';
        return v;
      };
      if (l == 6)
        for (const char* s : {"011221", "112211", "111221", "112221", "112321", "122321"})
          out.push_back(mk(s));
      if (l == 7)
        for (const char* s :
             {"1223211", "1123321", "1223221", "1223321", "1224321", "1234321", "2234321"})
          out.push_back(mk(s));
      if (l == 8)
        for (const char* s : {"23354321", "22454321", "23454321", "23464321", "23465321",
                              "23465421", "23465431", "23465432"})
          out.push_back(mk(s));
      break;
    }
    case 'F':
      out.push_back({1, 2, 3, 2});
      out.push_back({1, 2, 4, 2});
      out.push_back({1, 3, 4, 2});
      out.push_back({2, 3, 4, 2});
      break;
    case 'G':
      out.push_back({3, 1});
      out.push_back({3, 2});
      break;
  }
  return out;
}

}  // namespace

RootSubset psi_basis(const RootSystem& rs) {
  std::vector<int> elems;
  for (int c = 0; c < rs.num_components(); ++c) {
    auto [b, e] = rs.component_range(c);
    auto [fam, l] = rs.type_list()[c];
    for (const Coords& local : basis_coords(fam, l)) {
      Coords global(rs.rank(), 0);
      for (int i = 0; i < l; ++i) global[b + i] = local[i];
      int idx = rs.index(global);
      if (idx < 0) throw std::logic_error("psi_basis: listed vector is not a root");
      elems.push_back(idx);
    }
    (void)e;
  }
  return make_subset(rs, elems);
}

RootSubset c3_numbering(const RootSubset& psi) {
  const RootSystem& rs = *psi.rs;
  std::vector<int> order = psi.elements;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    int ha = rs.height(a), hb = rs.height(b);
    if (ha != hb) return ha > hb;
    return rs.roots()[a] > rs.roots()[b];
  });
  return make_subset(rs, order);
}

bool weyl_stable(const RootSubset& psi, const std::vector<int>& theta) {
  const RootSystem& rs = *psi.rs;
  std::set<int> in(psi.elements.begin(), psi.elements.end());
  for (int i : theta)
    for (int idx : psi.elements) {
      int r = rs.index(rs.reflect_root(i, rs.roots()[idx]));
      if (r < 0 || !in.count(r)) return false;
    }
  return true;
}

int subset_rank(const RootSubset& psi) {
  const RootSystem& rs = *psi.rs;
  std::vector<std::vector<mpq_class>> m;
  for (int idx : psi.elements) {
    std::vector<mpq_class> row(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) row[i] = rs.roots()[idx][i];
    m.push_back(row);
  }
  int rank = 0;
  size_t rows = m.size(), cols = rs.rank();
  for (size_t col = 0, row = 0; col < cols && row < rows; ++col) {
    size_t piv = row;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[row]);
    for (size_t i = 0; i < rows; ++i) {
      if (i == row || m[i][col] == 0) continue;
      mpq_class f = m[i][col] / m[row][col];
      for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    ++row;
    ++rank;
  }
  return rank;
}

mpz_class subset_det(const RootSubset& psi) {
  const RootSystem& rs = *psi.rs;
  size_t n = psi.elements.size();
  if ((int)n != rs.rank()) throw std::invalid_argument("subset_det: not square");
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n));
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c) m[r][c] = rs.roots()[psi.elements[r]][c];
  mpq_class det = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (size_t i = col + 1; i < n; ++i) {
      if (m[i][col] == 0) continue;
      mpq_class f = m[i][col] / m[col][col];
      for (size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  mpq_class canon = det;
  canon.canonicalize();
  if (canon.get_den() != 1) throw std::logic_error("subset_det: non-integer determinant");
  return canon.get_num();
}

}  // namespace subsets
