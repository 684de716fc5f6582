// lie.hpp -- Chevalley basis of the semisimple Lie algebra attached to a
// root system: structure constants N_{a,b} fixed by the extraspecial-pair
// sign convention over a height-lexicographic root order.
#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

#include "rootsys/rootsys.hpp"

namespace chevalley {

using rootsys::RootSystem;

// Basis: indices 0..rank-1 are the simple coroots h_i, rank + ridx is the
// root vector e_gamma for root index ridx.  All brackets have integer
// coefficients; N magnitudes are certified to be p+1 on construction.
class LieAlgebra {
public:
  explicit LieAlgebra(const RootSystem& rs);

  const RootSystem& rs() const { return *rs_; }
  int dim() const { return rs_->rank() + (int)rs_->roots().size(); }
  int e_index(int ridx) const { return rs_->rank() + ridx; }

  // N_{a,b} for root indices a, b with a+b a root; 0 otherwise
  long long nconst(int a, int b) const;
  // coroot of a root on the simple-coroot basis (integer coordinates)
  std::vector<long long> coroot(int ridx) const;
  // <gamma, alpha_i^vee>
  int cartan_pairing(int ridx, int i) const;

  // bracket of two basis elements, sparse
  std::vector<std::pair<int, mpq_class>> bracket_basis(int bi, int bj) const;

  // verify the Jacobi identity on basis triples; checks every triple when
  // sample == 0, otherwise a deterministic subsample of that size
  void check_jacobi(size_t sample = 0) const;

  // total order used for the extraspecial convention (height, then lex)
  const std::vector<int>& positive_sorted() const { return pos_sorted_; }

private:
  const RootSystem* rs_;
  std::vector<int> pos_sorted_;           // positive root indices in order
  std::vector<int> order_rank_;           // order position per root index
  std::map<std::pair<int, int>, mpq_class> special_;  // N on special pairs

  mpq_class nval(int a, int b) const;  // N on arbitrary root index pair
  void build_constants();
};

}  // namespace chevalley
