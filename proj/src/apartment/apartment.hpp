// apartment.hpp -- exact geometry of the standard affine apartment:
// enclosures, local root systems, sector faces, subsector thresholds,
// minimal corner sets, and affine-Weyl fixed-point normalization.
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "apartment/polytope.hpp"
#include "rootsys/rootsys.hpp"

namespace apartment {

using rootsys::QVec;
using rootsys::RootSystem;

// points live in fundamental-coweight coordinates; alpha(x) is an integer
// combination of the coordinates
mpz_class floor_q(const mpq_class& q);
mpz_class ceil_q(const mpq_class& q);

bool is_special(const RootSystem& rs, const QVec& x);
std::vector<int> local_roots(const RootSystem& rs, const QVec& x);

// sector face Q(tip, D_0^Theta)
struct SectorFace {
  QVec tip;
  std::vector<int> theta;
  bool contains(const RootSystem& rs, const QVec& z, bool closure = false) const;
};

// intersection of half-apartments alpha >= r_alpha over the listed roots
struct EnclosedRegion {
  const RootSystem* rs = nullptr;
  std::map<int, mpz_class> thresholds;  // root index -> integer bound
  bool contains(const QVec& z) const;
};

// enclosure of a finite nonempty point set: r_alpha = floor(min alpha)
EnclosedRegion enclosure(const RootSystem& rs, const std::vector<QVec>& points);
// enclosure of a sector face (finite thresholds only where they exist)
EnclosedRegion enclosure_of_sector(const RootSystem& rs, const SectorFace& q);

// tip w1 = w0 + v* with alpha(v) > n_alpha on all of Q(w1, D_0^Theta),
// by the c_alpha / m_beta / n*_beta construction
QVec subsector_tip(const RootSystem& rs, const QVec& w0, const std::vector<int>& theta,
                   const std::map<int, mpq_class>& thresholds);

// special w2 in Q(w1, D_0^Theta) with cl(Q(w2)) inside Q(w1); w0 special
QVec subsector_special(const RootSystem& rs, const QVec& w0, const std::vector<int>& theta,
                       const QVec& w1);

// minimal special vertices of cl(Q(x, D_0^Theta)) under
// w' <= w  iff  w in closure(Q(w', D_0^Theta))
std::vector<QVec> corner_set(const RootSystem& rs, const QVec& x,
                             const std::vector<int>& theta);

// e(Phi) from the fixed-point proof: lcm over W of the kernel-basis
// polytope denominators times the pseudo-inverse denominators
mpz_class fixed_point_denominator(const RootSystem& rs, size_t weyl_guard = 4000);

struct FixedPointResult {
  QVec z;       // translation commuting with (w, v)
  QVec y;       // x + z
  mpz_class e;  // denominator bound actually used
};

// x fixed by the affine map (w, v): returns z with x+z in cl({x}) and
// coordinates in (1/e) Z
FixedPointResult normalize_fixed_point(const RootSystem& rs,
                                       const std::vector<std::vector<int>>& wmat,
                                       const std::vector<long>& v, const QVec& x,
                                       mpz_class e_hint = 0);

}  // namespace apartment
