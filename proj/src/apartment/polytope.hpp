// polytope.hpp -- exact vertex enumeration for small integer systems and
// the lcm-of-determinants denominator bound.
#pragma once

#include <gmpxx.h>

#include <vector>

namespace apartment {

using ZMatrix = std::vector<std::vector<mpz_class>>;
using QVector = std::vector<mpq_class>;

// lcm of |det| over all rank-n n x n submatrices; 1 when rank(M) < n
mpz_class polytope_denominator(const ZMatrix& M);

// vertices of { z : M z <= b }, by solving every n x n subsystem and
// filtering feasibility; empty when the polytope has no vertex
std::vector<QVector> polytope_vertices(const ZMatrix& M, const std::vector<mpz_class>& b);

// same, with rational right-hand sides (used by the fixed-point search)
std::vector<QVector> polytope_vertices_q(const ZMatrix& M, const QVector& b);

mpz_class det(const ZMatrix& M);  // square exact determinant
int rank_of(const ZMatrix& M);

}  // namespace apartment
