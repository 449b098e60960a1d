#pragma once

// Shared test fixtures: small group tables, the rank-two solution census on a
// two-element set (frozen constants), distinguished three-element solutions,
// and the 2x2 trace-zero matrix triple used by the exact r-matrix tests.

#include <array>
#include <numeric>
#include <vector>

#include "ybx/matrix.hpp"
#include "ybx/set_maps.hpp"

namespace fixtures {

using ybx::FiniteYBMap;
using ybx::GroupTable;
using ybx::Mat;
using ybx::Rat;

// --- groups -----------------------------------------------------------------

inline GroupTable cyclic(int n) {
  std::vector<int> mult(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mult[static_cast<size_t>(i) * n + j] = (i + j) % n;
  return ybx::make_group(n, std::move(mult));
}

inline GroupTable trivial_group() { return cyclic(1); }
inline GroupTable z2() { return cyclic(2); }
inline GroupTable z3() { return cyclic(3); }
inline GroupTable z4() { return cyclic(4); }
inline GroupTable z5() { return cyclic(5); }
inline GroupTable z6() { return cyclic(6); }
inline GroupTable z7() { return cyclic(7); }
inline GroupTable z8() { return cyclic(8); }

// Klein four-group as bitwise xor on {0,1,2,3}.
inline GroupTable v4() {
  std::vector<int> mult(16);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) mult[static_cast<size_t>(i) * 4 + j] = i ^ j;
  return ybx::make_group(4, std::move(mult));
}

// Symmetric group on three points; elements are the permutations of (0,1,2)
// in lexicographic order, and (p*q)(t) = p(q(t)).
inline GroupTable s3() {
  const std::array<std::array<int, 3>, 6> perms = {
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  auto index_of = [&](const std::array<int, 3>& p) {
    for (int k = 0; k < 6; ++k)
      if (perms[k] == p) return k;
    return -1;
  };
  std::vector<int> mult(36);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      std::array<int, 3> comp{};
      for (int t = 0; t < 3; ++t) comp[t] = perms[i][perms[j][t]];
      mult[static_cast<size_t>(i) * 6 + j] = index_of(comp);
    }
  return ybx::make_group(6, std::move(mult));
}

// Dihedral group of order 8: (a1,b1)(a2,b2) = (a1 + (b1 ? -a2 : a2) mod 4,
// b1 xor b2), element index a + 4b.
inline GroupTable d4() {
  std::vector<int> mult(64);
  for (int a1 = 0; a1 < 4; ++a1)
    for (int b1 = 0; b1 < 2; ++b1)
      for (int a2 = 0; a2 < 4; ++a2)
        for (int b2 = 0; b2 < 2; ++b2) {
          const int a = ((a1 + (b1 ? -a2 : a2)) % 4 + 4) % 4;
          const int b = b1 ^ b2;
          mult[static_cast<size_t>(a1 + 4 * b1) * 8 + (a2 + 4 * b2)] = a + 4 * b;
        }
  return ybx::make_group(8, std::move(mult));
}

// Quaternion group: elements s * e_axis with axes (1, i, j, k) and sign bit s,
// indexed axis + 4s.
inline GroupTable q8() {
  // prod_axis[a][b], prod_sign[a][b] for e_a * e_b.
  static const int prod_axis[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  // i*j = k, j*k = i, k*i = j, and the squares of i, j, k are -1.
  static const int prod_sign[4][4] = {
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<int> mult(64);
  for (int a = 0; a < 4; ++a)
    for (int s1 = 0; s1 < 2; ++s1)
      for (int b = 0; b < 4; ++b)
        for (int s2 = 0; s2 < 2; ++s2) {
          int axis = prod_axis[a][b];
          int sign = s1 ^ s2 ^ prod_sign[a][b];
          mult[static_cast<size_t>(a + 4 * s1) * 8 + (b + 4 * s2)] = axis + 4 * sign;
        }
  return ybx::make_group(8, std::move(mult));
}

inline std::vector<GroupTable> group_corpus() {
  return {trivial_group(), z2(), z3(), z4(), v4(), z5(), s3(), z6(), z7(), z8(), d4(), q8()};
}

// --- two-element solution census (frozen) -------------------------------------

inline FiniteYBMap yb_from_flat(int n, const std::vector<int>& flat) {
  std::vector<std::pair<int, int>> t(flat.size() / 2);
  for (size_t k = 0; k < t.size(); ++k) t[k] = {flat[2 * k], flat[2 * k + 1]};
  return ybx::make_yb_map(n, std::move(t));
}

// All five bijective solutions of the three-position equation on {0,1}, in
// flattened-table lexicographic order: identity, the factor swap, and the
// three coordinate-flip maps.
inline std::vector<FiniteYBMap> n2_bijective_solutions() {
  const std::vector<std::vector<int>> tables = {
      {0, 0, 0, 1, 1, 0, 1, 1},   // identity
      {0, 0, 1, 0, 0, 1, 1, 1},   // swap
      {0, 1, 0, 0, 1, 1, 1, 0},   // (x, y) -> (x, 1-y)
      {1, 0, 1, 1, 0, 0, 0, 1},   // (x, y) -> (1-x, y)
      {1, 1, 1, 0, 0, 1, 0, 0}};  // (x, y) -> (1-x, 1-y)
  std::vector<FiniteYBMap> out;
  for (const auto& t : tables) out.push_back(yb_from_flat(2, t));
  return out;
}

// A bijection on {0,1}^2 that is not a solution: exchanges (0,0) and (0,1).
inline FiniteYBMap n2_non_solution() { return yb_from_flat(2, {0, 1, 0, 0, 1, 0, 1, 1}); }

// R(x, y) = (2y - x mod 3, y): the dihedral solution on three elements.
inline FiniteYBMap dihedral3_yb() {
  std::vector<std::pair<int, int>> t(9);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) t[static_cast<size_t>(x) * 3 + y] = {((2 * y - x) % 3 + 3) % 3, y};
  return ybx::make_yb_map(3, std::move(t));
}

// Conjugation solution on the six elements of s3: R(x, y) = (y^-1 x y, y).
inline FiniteYBMap s3_conjugation_yb() {
  const GroupTable g = s3();
  std::vector<std::pair<int, int>> t(36);
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y)
      t[static_cast<size_t>(x) * 6 + y] = {g.mul(g.mul(g.inverse(y), x), y), y};
  return ybx::make_yb_map(6, std::move(t));
}

// --- exact r-matrix fixture ------------------------------------------------------

inline Mat mat2(int a, int b, int c, int d) {
  Mat m(2, 2);
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = c;
  m.at(1, 1) = d;
  return m;
}

inline Mat raising() { return mat2(0, 1, 0, 0); }   // e
inline Mat lowering() { return mat2(0, 0, 1, 0); }  // f
inline Mat cartan() { return mat2(1, 0, 0, -1); }   // h

// r = e (x) f + (1/4) h (x) h on a pair of two-dimensional legs.
inline Mat classical_r() {
  using ybx::add;
  using ybx::kron;
  using ybx::scale;
  return add(kron(raising(), lowering()), scale(Rat(1, 4), kron(cartan(), cartan())));
}

// The leg-swapped reading f (x) e + (1/4) h (x) h.
inline Mat classical_r_flipped() {
  using ybx::add;
  using ybx::kron;
  using ybx::scale;
  return add(kron(lowering(), raising()), scale(Rat(1, 4), kron(cartan(), cartan())));
}

}  // namespace fixtures
