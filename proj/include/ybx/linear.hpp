#pragma once

#include <vector>

#include "ybx/cross.hpp"
#include "ybx/matrix.hpp"
#include "ybx/report.hpp"
#include "ybx/set_maps.hpp"

namespace ybx {

// Permutation matrix of a set-level solution acting on X*X, pairs flattened
// with the left coordinate most significant.
Mat yb_map_matrix(const FiniteYBMap& m);

// Permutation matrix of a cross map acting on C*B (C-coordinate most significant).
Mat cross_map_matrix(const CrossMap& r);

// Matrix of the factor swap V1 (x) V2 -> V2 (x) V1.
Mat swap_matrix(int d1, int d2);

// Conjugate a matrix on V1 (x) V2 by the factor swap, yielding one on V2 (x) V1.
Mat flip_factors(const Mat& m, int d1, int d2);

// Embed an operator into a larger tensor product: base acts on the legs listed in
// `positions` (1-based slots of `space_dims`, leftmost leg of base first) and as
// the identity elsewhere.  base_dims gives the per-leg dimensions of base.
Mat place(const Mat& base, const std::vector<int>& base_dims, const std::vector<int>& positions,
          const std::vector<int>& space_dims);

// R12 R13 R23 = R23 R13 R12 on V (x) V (x) V.
CheckReport check_qybe(const Mat& r, int dim);

// S12 S23 S12 = S23 S12 S23 on V (x) V (x) V.
CheckReport check_braid_matrix(const Mat& s, int dim);

// [r12,r13] + [r12,r23] + [r13,r23] = 0 on V (x) V (x) V.
CheckReport check_cybe(const Mat& r, int dim);

// Classical compatibility of r (on C (x) B) with rb (on B (x) B) and rc (on C (x) C):
//   fused_b on B,B,C:  [rb12, r31 + r32] + [r31, r32] = 0
//   fused_c on C,C,B:  [rc12, r13 + r23] - [r13, r23] = 0
CheckReport check_classical_compat(const Mat& rb, const Mat& rc, const Mat& r, int dim_b, int dim_c);

// rb13 + rc24 + r41 - r23 on the four-leg space B,C,B,C, returned as a matrix on
// W (x) W with W = B (x) C.  Requires rb and rc to satisfy the classical equation
// and r to be compatible; throws Incompatible otherwise.
Mat build_classical_extension(const Mat& rb, const Mat& rc, const Mat& r, int dim_b, int dim_c);

// Quantum compatibility of an invertible R (on C (x) B) with solutions RB, RC:
//   compat_b on C,B,B:  RB23 R12 R13 = R13 R12 RB23
//   compat_c on C,C,B:  RC12 R23 R13 = R13 R23 RC12
CheckReport check_quantum_compat(const Mat& rb, const Mat& rc, const Mat& r, int dim_b, int dim_c);

// R41 RB13 RC24 R23^-1 on the four-leg space B,C,B,C, returned on W (x) W.
// Throws NotInvertible if R is singular, Incompatible if compatibility fails.
Mat build_quantum_extension(const Mat& rb, const Mat& rc, const Mat& r, int dim_b, int dim_c);

// Twist data on W: t, f act on W (x) W; phi, psi act on W (x) W (x) W.
//   intertwine:     F12 Psi = F23 Phi
//   phi_commutes:   Phi T23 = T23 Phi
//   psi_commutes:   Psi T12 = T12 Psi
//   braid_twisted:  F T F^-1 satisfies the braid equation
CheckReport check_twist_matrix(const Mat& t, const Mat& f, const Mat& phi, const Mat& psi, int dim);

// All defining relations of the rank-3 mixed presentation, linearized: the twelve
// generators become placed matrices on the six-leg space B,C,B,C,B,C (rb on odd leg
// pairs, rc on even leg pairs, r with its C-leg on an even slot and B-leg on an odd
// slot), and every relator is checked in commutator form, together with the
// classical equation for the three combined elements
//   e12 = b13 + c24 + d41 - d23   (and its 13/23 analogues).
CheckReport y3_lie_check(const Mat& rb, const Mat& rc, const Mat& r, int dim_b, int dim_c);

}  // namespace ybx
