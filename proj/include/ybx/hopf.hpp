#pragma once

#include <vector>

#include "ybx/matrix.hpp"
#include "ybx/report.hpp"
#include "ybx/set_maps.hpp"

namespace ybx {

// Finite-dimensional Hopf algebra over the rationals, given by structure
// constants on a fixed basis e_0..e_{dim-1}:
//   mult[(i*dim+j)*dim+k]   = coefficient of e_k in e_i * e_j
//   unit[i]                 = coefficient of e_i in 1
//   comult[(i*dim+j)*dim+k] = coefficient of e_j (x) e_k in comult(e_i)
//   counit[i]               = counit(e_i)
//   antipode                = matrix acting on coefficient columns
struct HopfData {
  int dim = 0;
  std::vector<Rat> mult;
  std::vector<Rat> unit;
  std::vector<Rat> comult;
  std::vector<Rat> counit;
  Mat antipode;

  const Rat& m(int i, int j, int k) const {
    return mult[(static_cast<size_t>(i) * dim + j) * dim + k];
  }
  const Rat& d(int i, int j, int k) const {
    return comult[(static_cast<size_t>(i) * dim + j) * dim + k];
  }
};

// Throws DimensionMismatch unless all structure tensors match dim.
void validate_hopf_shape(const HopfData& h);

// Group algebra: basis = group elements, comult(g) = g (x) g, antipode(g) = g^-1.
HopfData group_algebra(const GroupTable& g);

// Function algebra on a group: basis of indicator elements p_g with
// p_g p_h = [g=h] p_g, comult(p_g) = sum over hk=g of p_h (x) p_k.
HopfData dual_group_algebra(const GroupTable& g);

// Seven defining relations (associativity, unit, coassociativity, counit,
// comult_multiplicative, counit_multiplicative, antipode) plus a
// "cocommutative" info flag.
CheckReport check_hopf_axioms(const HopfData& h);

// --- element arithmetic in tensor products of the underlying algebras ---

using AlgebraFactors = std::vector<const HopfData*>;

int algebra_dim(const AlgebraFactors& factors);
std::vector<Rat> algebra_unit(const AlgebraFactors& factors);
std::vector<Rat> algebra_mul(const AlgebraFactors& factors, const std::vector<Rat>& x,
                             const std::vector<Rat>& y);
// Two-sided inverse found by solving against left multiplication; throws
// NotInvertibleInAlgebra when none exists.
std::vector<Rat> algebra_inverse(const AlgebraFactors& factors, const std::vector<Rat>& x);

// Lift a two-leg element (coefficient matrix: rows = first leg, cols = second
// leg) into a tensor product, placing its legs at the given 1-based factor
// slots and the unit everywhere else.
std::vector<Rat> place_element(const Mat& coeffs, int pos_row, int pos_col,
                               const AlgebraFactors& factors);

// Cross element r in C (x) B (rows index C, columns index B):
//   spl_1 on C,C,B:  (comult_C (x) id) r = r23 r13
//   spl_2 on C,B,B:  (id (x) comult_B) r = r12 r13
//   spl_3:           (id (x) antipode_B) r = r^-1
//   spl_4:           (antipode_C (x) id) r = r^-1
// Throws NotInvertibleInAlgebra if r has no inverse in C (x) B.
CheckReport check_cross_element(const HopfData& b, const HopfData& c, const Mat& r);

// Product Hopf algebra on W = B (x) C (basis index b*dim_C + c) with comult
// conjugated by r23 in the four-leg algebra B,C,B,C and antipode conjugated by
// the transposed element r21 in W.  Throws NotInvertibleInAlgebra.
HopfData build_product_hopf(const HopfData& b, const HopfData& c, const Mat& r);

// R41 RB13 RC24 R23^-1 in the four-leg algebra B,C,B,C, reshaped to a two-leg
// element of W (x) W.
Mat product_r_element(const HopfData& b, const HopfData& c, const Mat& r, const Mat& rb,
                      const Mat& rc);

// Factor order for the split-comultiplication identities: `standard` puts the
// far-leg factor on the left ((comult (x) id)(r) = r13 r23, (id (x) comult)(r)
// = r13 r12); `reversed` puts it on the right (r23 r13 and r12 r13).
enum class QTConvention { standard, reversed };

// Quasitriangular structure checks for an invertible two-leg element r of
// H (x) H: qt_exchange (opposite comult intertwined by r), qt_comult_first and
// qt_comult_second (comult split across legs, factor order set by the
// convention), and qybe_algebra (the quantum equation as elements).
CheckReport check_quasitriangular(const HopfData& h, const Mat& r, QTConvention convention);

}  // namespace ybx
