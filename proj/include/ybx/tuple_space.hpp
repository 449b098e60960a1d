#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace ybx {

// Finite mixed product of legs; states are flat indices with the leftmost
// leg most significant.  Small enough spaces only (everything here is desk
// scale), so full permutation tables are the working representation.
struct TupleSpace {
  std::vector<int> dims;
  std::vector<int> stride;
  int total = 1;

  explicit TupleSpace(std::vector<int> d) : dims(std::move(d)) {
    stride.assign(dims.size(), 1);
    for (int k = static_cast<int>(dims.size()) - 2; k >= 0; --k)
      stride[k] = stride[k + 1] * dims[k + 1];
    total = dims.empty() ? 1 : stride[0] * dims[0];
  }

  int digit(int state, int leg) const {  // leg is 0-based here
    return (state / stride[leg]) % dims[leg];
  }
};

// Permutation table of the map acting as `f` on the ordered leg pair (p, q)
// (1-based positions) and as the identity elsewhere.
std::vector<int> placed_pair_perm(
    const TupleSpace& space, int p, int q,
    const std::function<std::pair<int, int>(int, int)>& f);

// Composition h = f after g (g acts first): h[v] = f[g[v]].
std::vector<int> compose_perms(const std::vector<int>& f,
                               const std::vector<int>& g);

std::vector<int> identity_perm(int n);

// Inverse of a bijective table; empty vector if not bijective.
std::vector<int> inverse_perm(const std::vector<int>& f);

}  // namespace ybx
