#pragma once

#include <utility>
#include <vector>

#include "ybx/report.hpp"
#include "ybx/set_maps.hpp"

namespace ybx {

// A map C x B -> C x B used as the gluing datum for extensions; sizes may
// differ.  Flat input index is c*size_b + b.
struct CrossMap {
  int size_c = 0;
  int size_b = 0;
  std::vector<std::pair<int, int>> table;  // entries (c', b')
  bool invertible = false;

  std::pair<int, int> apply(int c, int b) const {
    return table[c * size_b + b];
  }
};

CrossMap make_cross_map(int size_c, int size_b,
                        std::vector<std::pair<int, int>> table);
CrossMap identity_cross(int size_c, int size_b);
CrossMap inverse_cross(const CrossMap& r);  // NotInvertible if not bijective

// First identity on C x B x B, second on C x C x B:
//   RB_23 R_12 R_13 = R_13 R_12 RB_23      (relation "compat_b")
//   RC_12 R_23 R_13 = R_13 R_23 RC_12      (relation "compat_c")
CheckReport check_cross_compat(const FiniteYBMap& rb, const FiniteYBMap& rc,
                               const CrossMap& r);

// The ten consequences (rb1..rb5, rc1..rc5) on the six-factor space with
// B-type legs at positions 1,3,5 and C-type legs at 2,4,6.
CheckReport check_derived_relations(const FiniteYBMap& rb,
                                    const FiniteYBMap& rc, const CrossMap& r);

// Extension solution on B x C with pair flattening (b, c) -> b*|C| + c.
FiniteYBMap build_extension(const FiniteYBMap& rb, const FiniteYBMap& rc,
                            const CrossMap& r);

// Braid-form extension S = R_23 SB_13 SC_24 R^{-1}_23.
FiniteYBMap build_braid_extension(const FiniteYBMap& sb, const FiniteYBMap& sc,
                                  const CrossMap& r);

// All cross maps compatible with (rb, rc), lexicographic by flattened table.
std::vector<CrossMap> search_cross_maps(const FiniteYBMap& rb,
                                        const FiniteYBMap& rc,
                                        bool invertible_only);

// Twist data: T and F are maps on W x W for a common finite W; Phi and Psi
// are bijections of W^3 given as full permutation tables.
CheckReport check_set_twist(const FiniteYBMap& t, const FiniteYBMap& f,
                            const std::vector<int>& phi,
                            const std::vector<int>& psi);

// The twist datum carried by a compatible cross map on the pair set
// W = B x C: T = SB_13 SC_24, F = R_23, Phi = R_23 R_25, Psi = R_45 R_25
// (cross legs named in the six-factor space, pairs at (2i-1, 2i)).
struct SetTwistData {
  FiniteYBMap t;
  FiniteYBMap f;
  std::vector<int> phi;
  std::vector<int> psi;
};

SetTwistData make_extension_twist(const FiniteYBMap& rb, const FiniteYBMap& rc,
                                  const CrossMap& r);

}  // namespace ybx
