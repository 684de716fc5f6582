// subsets.hpp -- closed subsets of positive roots: conditions (C0)-(C3),
// the Psi(Theta) construction, increasing flags, and the explicit
// per-type linearly independent bases.
#pragma once

#include <vector>

#include "rootsys/rootsys.hpp"

namespace subsets {

using rootsys::RootSystem;

// subset of Phi^+ with cached condition flags; elements are root indices
struct RootSubset {
  const RootSystem* rs = nullptr;
  std::vector<int> elements;  // ordered; the order carries the (C3) numbering
  bool closed = false;        // (C0)
  bool c1 = false, c2 = false;
  bool numbering_ok = false;  // (C3) for the stored order

  void recompute_flags();
};

RootSubset make_subset(const RootSystem& rs, std::vector<int> elements);

struct ConditionReport {
  bool c0, c1, c2, c1p, c2p, c1pp;
};

// direct quantifier evaluation over Phi; primed variants independently
ConditionReport check_conditions(const RootSubset& psi);

// Psi(Theta) = (h + Vect_R(Theta)) cap Phi on an irreducible system
RootSubset psi_theta(const RootSystem& rs, const std::vector<int>& theta);

// increasing sequence Psi_1 c ... c Psi_m, m = sum card(Delta_j - Theta_j),
// by the greedy simple-root enlargement, concatenated over components
std::vector<RootSubset> psi_flag(const RootSystem& rs, const std::vector<int>& theta);

// the explicit per-type basis subsets (concatenated over components)
RootSubset psi_basis(const RootSystem& rs);

// reorder so that alpha_i < alpha_j (poset on Phi^+) implies i > j;
// height descending, ties broken lexicographically on coordinates
RootSubset c3_numbering(const RootSubset& psi);

// the poset order on Phi^+: beta < gamma iff gamma is reachable from beta
// by adding simple roots inside Phi^+
bool poset_less(const RootSystem& rs, int beta, int gamma);

// W_Theta-stability: r_alpha(Psi) = Psi for every alpha in theta
bool weyl_stable(const RootSubset& psi, const std::vector<int>& theta);

// rank of the coordinate matrix of the subset (exact)
int subset_rank(const RootSubset& psi);
// determinant of the coordinate matrix when square (exact)
mpz_class subset_det(const RootSubset& psi);

}  // namespace subsets
