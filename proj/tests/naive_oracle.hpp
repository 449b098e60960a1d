#pragma once

// Independent re-implementations of the core identities, used to cross-check
// the library along a second route.  These deliberately avoid the library's
// placed-operator machinery: equations are checked by nested componentwise
// application, and operator placement is realized as a permutation-conjugated
// Kronecker product.

#include <array>
#include <functional>
#include <tuple>
#include <vector>

#include "ybx/cross.hpp"
#include "ybx/matrix.hpp"
#include "ybx/set_maps.hpp"

namespace oracle {

using ybx::CrossMap;
using ybx::FiniteYBMap;
using ybx::Mat;

using Triple = std::array<int, 3>;

inline Triple r12(const FiniteYBMap& m, Triple t) {
  const auto [a, b] = m.apply(t[0], t[1]);
  return {a, b, t[2]};
}
inline Triple r13(const FiniteYBMap& m, Triple t) {
  const auto [a, c] = m.apply(t[0], t[2]);
  return {a, t[1], c};
}
inline Triple r23(const FiniteYBMap& m, Triple t) {
  const auto [b, c] = m.apply(t[1], t[2]);
  return {t[0], b, c};
}

// R12 R13 R23 = R23 R13 R12, the rightmost factor applied first.
inline bool ybe(const FiniteYBMap& m) {
  for (int x = 0; x < m.size; ++x)
    for (int y = 0; y < m.size; ++y)
      for (int z = 0; z < m.size; ++z) {
        const Triple t = {x, y, z};
        if (r12(m, r13(m, r23(m, t))) != r23(m, r13(m, r12(m, t)))) return false;
      }
  return true;
}

// S12 S23 S12 = S23 S12 S23.
inline bool braid(const FiniteYBMap& m) {
  for (int x = 0; x < m.size; ++x)
    for (int y = 0; y < m.size; ++y)
      for (int z = 0; z < m.size; ++z) {
        const Triple t = {x, y, z};
        if (r12(m, r23(m, r12(m, t))) != r23(m, r12(m, r23(m, t)))) return false;
      }
  return true;
}

// (x <| y) <| z = (x <| z) <| (y <| z).
inline bool self_distributive(const ybx::BinaryOpTable& op) {
  for (int x = 0; x < op.size; ++x)
    for (int y = 0; y < op.size; ++y)
      for (int z = 0; z < op.size; ++z)
        if (op.apply(op.apply(x, y), z) != op.apply(op.apply(x, z), op.apply(y, z)))
          return false;
  return true;
}

// --- tuple-space placement, digit-vector route ---------------------------------

inline std::vector<int> decode(long long v, const std::vector<int>& dims) {
  std::vector<int> digits(dims.size());
  for (size_t k = dims.size(); k-- > 0;) {
    digits[k] = static_cast<int>(v % dims[k]);
    v /= dims[k];
  }
  return digits;
}

inline long long encode(const std::vector<int>& digits, const std::vector<int>& dims) {
  long long v = 0;
  for (size_t k = 0; k < dims.size(); ++k) v = v * dims[k] + digits[k];
  return v;
}

// Permutation of the product set that applies a two-coordinate function at
// 1-based slots p, q and the identity elsewhere.
inline std::vector<int> place_pair(const std::vector<int>& dims, int p, int q,
                                   const std::function<std::pair<int, int>(int, int)>& f) {
  long long total = 1;
  for (int d : dims) total *= d;
  std::vector<int> out(static_cast<size_t>(total));
  for (long long v = 0; v < total; ++v) {
    std::vector<int> digits = decode(v, dims);
    const auto [a, b] = f(digits[p - 1], digits[q - 1]);
    digits[p - 1] = a;
    digits[q - 1] = b;
    out[static_cast<size_t>(v)] = static_cast<int>(encode(digits, dims));
  }
  return out;
}

inline std::vector<int> place_yb(const std::vector<int>& dims, int p, int q,
                                 const FiniteYBMap& m) {
  return place_pair(dims, p, q, [&](int a, int b) { return m.apply(a, b); });
}

inline std::vector<int> place_cross(const std::vector<int>& dims, int p, int q,
                                    const CrossMap& r) {
  return place_pair(dims, p, q, [&](int c, int b) { return r.apply(c, b); });
}

inline std::vector<int> compose(const std::vector<int>& f, const std::vector<int>& g) {
  // first g, then f
  std::vector<int> out(g.size());
  for (size_t v = 0; v < g.size(); ++v) out[v] = f[static_cast<size_t>(g[v])];
  return out;
}

// --- matrix placement as a permutation-conjugated Kronecker product ---------------

// Gather matrix: coordinates listed in `order` move to the front.
inline Mat gather_matrix(const std::vector<int>& dims, const std::vector<int>& order) {
  long long total = 1;
  for (int d : dims) total *= d;
  std::vector<int> new_dims;
  new_dims.reserve(dims.size());
  for (int slot : order) new_dims.push_back(dims[static_cast<size_t>(slot - 1)]);
  Mat g(static_cast<int>(total), static_cast<int>(total));
  for (long long old_idx = 0; old_idx < total; ++old_idx) {
    const std::vector<int> digits = decode(old_idx, dims);
    std::vector<int> new_digits;
    new_digits.reserve(order.size());
    for (int slot : order) new_digits.push_back(digits[static_cast<size_t>(slot - 1)]);
    g.at(static_cast<int>(encode(new_digits, new_dims)), static_cast<int>(old_idx)) = 1;
  }
  return g;
}

// Independent version of operator placement: gather the target legs to the
// front, act by base (x) identity, scatter back.
inline Mat place_matrix(const Mat& base, const std::vector<int>& positions,
                        const std::vector<int>& space_dims) {
  std::vector<int> order = positions;
  for (int slot = 1; slot <= static_cast<int>(space_dims.size()); ++slot) {
    bool used = false;
    for (int p : positions) used = used || p == slot;
    if (!used) order.push_back(slot);
  }
  long long rest = 1;
  for (size_t k = positions.size(); k < order.size(); ++k)
    rest *= space_dims[static_cast<size_t>(order[k] - 1)];
  const Mat g = gather_matrix(space_dims, order);
  const Mat big = ybx::kron(base, ybx::mat_identity(static_cast<int>(rest)));
  return ybx::mul(ybx::transpose(g), ybx::mul(big, g));
}

}  // namespace oracle
