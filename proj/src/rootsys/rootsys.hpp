// rootsys.hpp -- exact crystallographic root systems in the simple-root
// basis, Weyl reflections, coweights and root strings.
#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace rootsys {

using Coords = std::vector<int>;          // root coordinates on Delta
using QVec = std::vector<mpq_class>;      // point in fundamental-coweight coordinates
using IMat = std::vector<std::vector<int>>;

// Roots are integer vectors on the simple-root basis; the Cartan matrix
// supplies every pairing.  cartan[i][j] = <alpha_j, alpha_i^vee>.
// Simple-root numbering follows the Bourbaki plates.
class RootSystem {
public:
  static RootSystem build(char family, int rank);
  static RootSystem build(const std::string& type);  // "G2", "A3", "B2xA1", ...

  const std::vector<std::pair<char, int>>& type_list() const { return types_; }
  std::string type_name() const;
  int rank() const { return rank_; }
  int num_components() const { return (int)comp_range_.size(); }
  // half-open range of simple-root indices of a component
  std::pair<int, int> component_range(int c) const { return comp_range_[c]; }
  int component_of_simple(int i) const { return comp_of_[i]; }
  int component_of_root(int idx) const;

  const std::vector<Coords>& roots() const { return roots_; }
  const std::vector<int>& positive() const { return positive_; }  // indices
  const IMat& cartan() const { return cartan_; }
  // rational matrix with column j = fundamental coweight w_j on the
  // simple-coroot basis (the inverse Cartan matrix)
  const std::vector<QVec>& coweight_basis() const { return coweights_; }

  bool is_root(const Coords& v) const { return index_.count(v) > 0; }
  int index(const Coords& v) const;  // -1 if absent
  int height(int idx) const;
  bool is_positive(int idx) const { return height(idx) > 0; }
  int negate(int idx) const;

  // <gamma, alpha_i^vee> for gamma given by coordinates
  int pairing(const Coords& gamma, int i) const;
  // squared length (gamma,gamma), short roots of each component = 2
  int norm2(int idx) const { return norm2_[idx]; }
  int simple_norm2(int i) const { return simple_norm2_[i]; }

  // simple reflection acting on root coordinates
  Coords reflect_root(int i, const Coords& v) const;
  // simple reflection acting on coweight coordinates (exact rationals)
  QVec reflect_point(int i, const QVec& x) const;
  // evaluate root idx on a point in coweight coordinates
  mpq_class eval(int idx, const QVec& x) const;
  mpq_class eval(const Coords& gamma, const QVec& x) const;

  int highest_root(int component) const;  // root index

private:
  std::vector<std::pair<char, int>> types_;
  int rank_ = 0;
  IMat cartan_;
  std::vector<int> simple_norm2_;
  std::vector<int> comp_of_;
  std::vector<std::pair<int, int>> comp_range_;
  std::vector<Coords> roots_;
  std::vector<int> positive_;
  std::vector<int> norm2_;
  std::map<Coords, int> index_;
  std::vector<QVec> coweights_;

  void generate();
};

// product of simple reflections with its integer matrix on coweight coords
struct WeylWord {
  std::vector<int> word;
  std::vector<std::vector<int>> matrix;  // acts on coweight coordinates

  static WeylWord identity(const RootSystem& rs);
  static WeylWord reflection(const RootSystem& rs, int i);
  WeylWord then(const RootSystem& rs, int i) const;  // append r_i
  QVec apply(const QVec& x) const;
};

// p = max{k : beta - k alpha in Phi}, q = max{k : beta + k alpha in Phi}
std::pair<int, int> root_string(const RootSystem& rs, int alpha, int beta);

// orbit of v (coweight coordinates) under W_Theta, generators subset of Delta
std::vector<QVec> weyl_orbit(const RootSystem& rs, const std::vector<int>& generators,
                             const QVec& v);

// all Weyl group matrices on coweight coordinates; guarded by max_size
std::vector<std::vector<std::vector<int>>> weyl_group_matrices(const RootSystem& rs,
                                                               size_t max_size);

}  // namespace rootsys
