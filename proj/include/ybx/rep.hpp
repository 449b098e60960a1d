#pragma once

#include <functional>
#include <map>
#include <tuple>
#include <vector>

#include "ybx/cross.hpp"
#include "ybx/report.hpp"
#include "ybx/set_maps.hpp"
#include "ybx/words.hpp"

namespace ybx {

// Assignment of permutations (of a fixed finite point set) to generator
// symbols.  Words evaluate with their first letter acting first.
struct GeneratorAssignment {
  int domain = 0;   // number of points acted on
  int strands = 0;  // ambient strand count, informational
  std::map<std::tuple<int, int, int>, std::vector<int>> images;

  void set_image(Fam fam, int i, int j, std::vector<int> perm);
  bool has(Fam fam, int i, int j) const;
  // Throws MissingGenerator.
  const std::vector<int>& image_of(Fam fam, int i, int j) const;
};

// First letter acts first; inverse letters use the inverse permutation
// (NotInvertible if an image is not bijective).
std::vector<int> evaluate_word(const GeneratorAssignment& a, const Word& w);

// Every relator must evaluate to the identity permutation; failures carry the
// relator index and the first moved point.  Throws MissingGenerator.
CheckReport check_assignment(const Presentation& p, const GeneratorAssignment& a);

// lambda_{ij} -> R_{ij} on the n-fold tuple space: adjacent positions by direct
// placement, all others by conjugating with chains of adjacent strand swaps.
// Also assigns p_i -> swap of slots (i, i+1).  R must be invertible
// (NotInvertible) and satisfy the Yang-Baxter equation (NotASolution).
GeneratorAssignment rep_vp(const FiniteYBMap& r, int n);

// x_{ij} -> S_{ij} for a braid-equation solution S (NotInvertible /
// NotASolution), same placement machinery; p_i assigned as above.
GeneratorAssignment rep_hn(const FiniteYBMap& s, int n);

// sigma_i -> S at slots (i, i+1), rho_i and p_i -> slot swap.
GeneratorAssignment rep_vbn(const FiniteYBMap& s, int n);

// b/c/d generators of the three-strand mixed presentation acting on the
// six-leg space B,C,B,C,B,C: b pairs odd slots (RB), c pairs even slots (RC),
// d(2k,2l-1) places the cross map with its first leg at slot 2k and second at
// slot 2l-1.  Requires invertibility (NotInvertible) and cross compatibility
// (Incompatible).
GeneratorAssignment y3_assignment(const FiniteYBMap& rb, const FiniteYBMap& rc, const CrossMap& r);

// The five simplicial identities, checked on every generator of the n-strand
// lambda presentation by evaluating both composite words under placements of r
// at the appropriate strand counts.
CheckReport simplicial_check(const FiniteYBMap& r, int n);

// Same engine with injectable face/degeneracy maps (arguments: word, 0-based
// index, ambient strand count) so deliberately mutated maps can be probed.
using SimplicialMap = std::function<Word(const Word&, int, int)>;
CheckReport simplicial_check_custom(const FiniteYBMap& r, int n, const SimplicialMap& face,
                                    const SimplicialMap& degeneracy);

// Verifies, in the symmetric-group image sigma_i -> (i, i+1), that the two
// words obtained by deleting the first strand from the doubled braid relation
// are different permutations of four points, that the braid relator itself
// collapses in the three-point image, and that a forced relation
// sigma_2 = sigma_2^2 is detectable whenever sigma_2's image is nontrivial.
CheckReport b3_counterexamples();

}  // namespace ybx
