#include "ybx/set_maps.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <string>

#include "ybx/error.hpp"
#include "ybx/tuple_space.hpp"

namespace ybx {

std::vector<int> placed_pair_perm(
    const TupleSpace& space, int p, int q,
    const std::function<std::pair<int, int>(int, int)>& f) {
  const int np = static_cast<int>(space.dims.size());
  if (p < 1 || p > np || q < 1 || q > np || p == q)
    fail(ErrorCode::BadIndex, "placed pair positions " + std::to_string(p) +
                                  "," + std::to_string(q));
  std::vector<int> out(space.total);
  const int sp = space.stride[p - 1], sq = space.stride[q - 1];
  const int dp = space.dims[p - 1], dq = space.dims[q - 1];
  for (int v = 0; v < space.total; ++v) {
    const int a = (v / sp) % dp;
    const int b = (v / sq) % dq;
    const auto [a2, b2] = f(a, b);
    out[v] = v + (a2 - a) * sp + (b2 - b) * sq;
  }
  return out;
}

std::vector<int> compose_perms(const std::vector<int>& f,
                               const std::vector<int>& g) {
  std::vector<int> h(g.size());
  for (size_t v = 0; v < g.size(); ++v) h[v] = f[g[v]];
  return h;
}

std::vector<int> identity_perm(int n) {
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  return id;
}

std::vector<int> inverse_perm(const std::vector<int>& f) {
  std::vector<int> inv(f.size(), -1);
  for (size_t v = 0; v < f.size(); ++v) {
    if (inv[f[v]] != -1) return {};
    inv[f[v]] = static_cast<int>(v);
  }
  return inv;
}

FiniteYBMap make_yb_map(int size, std::vector<std::pair<int, int>> table) {
  if (size <= 0) fail(ErrorCode::BadN, "set size must be positive");
  const size_t want = static_cast<size_t>(size) * size;
  if (table.size() != want)
    fail(ErrorCode::LengthMismatch, "table has " + std::to_string(table.size()) +
                                        " entries, expected " + std::to_string(want));
  std::vector<bool> hit(want, false);
  bool bijective = true;
  for (const auto& [x, y] : table) {
    if (x < 0 || x >= size || y < 0 || y >= size)
      fail(ErrorCode::IndexOutOfRange,
           "output (" + std::to_string(x) + "," + std::to_string(y) + ")");
    const size_t flat = static_cast<size_t>(x) * size + y;
    if (hit[flat]) bijective = false;
    hit[flat] = true;
  }
  FiniteYBMap m;
  m.size = size;
  m.table = std::move(table);
  m.invertible = bijective;
  return m;
}

FiniteYBMap swap_map(int size) {
  std::vector<std::pair<int, int>> t;
  t.reserve(static_cast<size_t>(size) * size);
  for (int x = 0; x < size; ++x)
    for (int y = 0; y < size; ++y) t.emplace_back(y, x);
  return make_yb_map(size, std::move(t));
}

FiniteYBMap identity_yb_map(int size) {
  std::vector<std::pair<int, int>> t;
  t.reserve(static_cast<size_t>(size) * size);
  for (int x = 0; x < size; ++x)
    for (int y = 0; y < size; ++y) t.emplace_back(x, y);
  return make_yb_map(size, std::move(t));
}

namespace {

// Apply the 2-leg map at legs (p, q) of a 3-digit state; digits in a/b/c.
inline void apply_at(const FiniteYBMap& m, int p, int q, int& a, int& b, int& c) {
  int* legs[3] = {&a, &b, &c};
  const auto [u, v] = m.apply(*legs[p - 1], *legs[q - 1]);
  *legs[p - 1] = u;
  *legs[q - 1] = v;
}

}  // namespace

CheckReport check_ybe(const FiniteYBMap& r) {
  CheckReport rep;
  const int n = r.size;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        ++rep.relations_checked;
        int a = x, b = y, c = z;
        apply_at(r, 2, 3, a, b, c);
        apply_at(r, 1, 3, a, b, c);
        apply_at(r, 1, 2, a, b, c);
        int a2 = x, b2 = y, c2 = z;
        apply_at(r, 1, 2, a2, b2, c2);
        apply_at(r, 1, 3, a2, b2, c2);
        apply_at(r, 2, 3, a2, b2, c2);
        if (a != a2 || b != b2 || c != c2)
          rep.add_failure("ybe", {x, y, z});
      }
  return rep;
}

CheckReport check_braid(const FiniteYBMap& s) {
  CheckReport rep;
  const int n = s.size;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        ++rep.relations_checked;
        int a = x, b = y, c = z;
        apply_at(s, 1, 2, a, b, c);
        apply_at(s, 2, 3, a, b, c);
        apply_at(s, 1, 2, a, b, c);
        int a2 = x, b2 = y, c2 = z;
        apply_at(s, 2, 3, a2, b2, c2);
        apply_at(s, 1, 2, a2, b2, c2);
        apply_at(s, 2, 3, a2, b2, c2);
        if (a != a2 || b != b2 || c != c2)
          rep.add_failure("braid", {x, y, z});
      }
  return rep;
}

FiniteYBMap convert(const FiniteYBMap& m, ConvertDirection) {
  // Both directions are composition with the swap on the left: S = P R and
  // R = P S.
  std::vector<std::pair<int, int>> t;
  t.reserve(m.table.size());
  for (const auto& [x, y] : m.table) t.emplace_back(y, x);
  return make_yb_map(m.size, std::move(t));
}

std::pair<bool, bool> nondegeneracy(const FiniteYBMap& r) {
  const int n = r.size;
  bool left = true, right = true;
  for (int y = 0; y < n && left; ++y) {
    std::vector<bool> seen(n, false);
    for (int x = 0; x < n; ++x) {
      const int img = r.apply(x, y).first;  // sigma_y(x)
      if (seen[img]) { left = false; break; }
      seen[img] = true;
    }
  }
  for (int x = 0; x < n && right; ++x) {
    std::vector<bool> seen(n, false);
    for (int y = 0; y < n; ++y) {
      const int img = r.apply(x, y).second;  // tau_x(y)
      if (seen[img]) { right = false; break; }
      seen[img] = true;
    }
  }
  return {left, right};
}

FiniteYBMap guitar_map(const FiniteYBMap& r) {
  const int n = r.size;
  // sigma_x(z) = first component of R(z, x); the formula needs every
  // sigma_x to be invertible.
  std::vector<std::vector<int>> sigma_inv(n, std::vector<int>(n, -1));
  for (int x = 0; x < n; ++x)
    for (int z = 0; z < n; ++z) {
      const int img = r.apply(z, x).first;
      if (sigma_inv[x][img] != -1)
        fail(ErrorCode::Degenerate,
             "sigma_" + std::to_string(x) + " is not a bijection");
      sigma_inv[x][img] = z;
    }
  // R'(x, y) = (sigma_y(tau_z(x)), y) with z = sigma_x^{-1}(y).
  std::vector<std::pair<int, int>> t(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int z = sigma_inv[x][y];
      const int w = r.apply(z, x).second;  // tau_z(x)
      t[static_cast<size_t>(x) * n + y] = {r.apply(w, y).first, y};
    }
  return make_yb_map(n, std::move(t));
}

BinaryOpTable make_binop(int size, std::vector<int> table) {
  if (size <= 0) fail(ErrorCode::BadN, "set size must be positive");
  const size_t want = static_cast<size_t>(size) * size;
  if (table.size() != want)
    fail(ErrorCode::LengthMismatch, "table has " + std::to_string(table.size()) +
                                        " entries, expected " + std::to_string(want));
  for (int v : table)
    if (v < 0 || v >= size)
      fail(ErrorCode::IndexOutOfRange, "output " + std::to_string(v));
  return BinaryOpTable{size, std::move(table)};
}

CheckReport check_self_distributive(const BinaryOpTable& op) {
  CheckReport rep;
  const int n = op.size;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        ++rep.relations_checked;
        if (op.apply(op.apply(x, y), z) !=
            op.apply(op.apply(x, z), op.apply(y, z)))
          rep.add_failure("self_distributive", {x, y, z});
      }
  return rep;
}

FiniteYBMap braiding_from_sd(const BinaryOpTable& op) {
  const int n = op.size;
  std::vector<std::pair<int, int>> t(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      t[static_cast<size_t>(x) * n + y] = {y, op.apply(x, y)};
  return make_yb_map(n, std::move(t));
}

int GroupTable::inverse(int a) const {
  for (int b = 0; b < size; ++b)
    if (mul(a, b) == 0) return b;
  return -1;  // unreachable for a validated group
}

GroupTable make_group(int size, std::vector<int> mult) {
  if (size <= 0) fail(ErrorCode::BadN, "group order must be positive");
  const size_t want = static_cast<size_t>(size) * size;
  if (mult.size() != want)
    fail(ErrorCode::LengthMismatch, "multiplication table has " +
                                        std::to_string(mult.size()) +
                                        " entries, expected " + std::to_string(want));
  for (int v : mult)
    if (v < 0 || v >= size)
      fail(ErrorCode::IndexOutOfRange, "product " + std::to_string(v));
  GroupTable g{size, std::move(mult)};
  for (int a = 0; a < size; ++a) {
    if (g.mul(0, a) != a || g.mul(a, 0) != a)
      fail(ErrorCode::NotAGroup, "identity axiom fails at element " + std::to_string(a));
  }
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b)
      for (int c = 0; c < size; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          fail(ErrorCode::NotAGroup, "associativity fails at (" + std::to_string(a) +
                                         "," + std::to_string(b) + "," +
                                         std::to_string(c) + ")");
  for (int a = 0; a < size; ++a) {
    bool has_inverse = false;
    for (int b = 0; b < size; ++b)
      if (g.mul(a, b) == 0 && g.mul(b, a) == 0) { has_inverse = true; break; }
    if (!has_inverse)
      fail(ErrorCode::NotAGroup, "no two-sided inverse for element " + std::to_string(a));
  }
  return g;
}

BinaryOpTable conjugation_quandle(const GroupTable& g) {
  const int n = g.size;
  std::vector<int> t(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      t[static_cast<size_t>(x) * n + y] = g.mul(g.mul(g.inverse(y), x), y);
  return make_binop(n, std::move(t));
}

SetMapping make_mapping(int domain_size, int codomain_size,
                        std::vector<int> table) {
  if (domain_size <= 0 || codomain_size <= 0)
    fail(ErrorCode::BadN, "mapping sizes must be positive");
  if (table.size() != static_cast<size_t>(domain_size))
    fail(ErrorCode::LengthMismatch, "mapping table has " +
                                        std::to_string(table.size()) +
                                        " entries, expected " +
                                        std::to_string(domain_size));
  for (int v : table)
    if (v < 0 || v >= codomain_size)
      fail(ErrorCode::IndexOutOfRange, "image " + std::to_string(v));
  return SetMapping{domain_size, codomain_size, std::move(table)};
}

CheckReport is_morphism(const SetMapping& f, const FiniteYBMap& rx,
                        const FiniteYBMap& ry) {
  if (f.domain_size != rx.size || f.codomain_size != ry.size)
    fail(ErrorCode::SizeMismatch, "mapping " + std::to_string(f.domain_size) +
                                      "->" + std::to_string(f.codomain_size) +
                                      " vs solutions of sizes " +
                                      std::to_string(rx.size) + ", " +
                                      std::to_string(ry.size));
  CheckReport rep;
  for (int x = 0; x < rx.size; ++x)
    for (int y = 0; y < rx.size; ++y) {
      ++rep.relations_checked;
      const auto [u, v] = rx.apply(x, y);
      const auto lhs = std::make_pair(f.apply(u), f.apply(v));
      const auto rhs = ry.apply(f.apply(x), f.apply(y));
      if (lhs != rhs) rep.add_failure("morphism_square", {x, y});
    }
  return rep;
}

bool is_homogeneous(const SetMapping& f) {
  std::vector<int> fiber(f.codomain_size, 0);
  for (int x = 0; x < f.domain_size; ++x) ++fiber[f.apply(x)];
  std::string unhit;
  for (int y = 0; y < f.codomain_size; ++y)
    if (fiber[y] == 0) unhit += (unhit.empty() ? "" : ",") + std::to_string(y);
  if (!unhit.empty())
    fail(ErrorCode::NotSurjective, "codomain elements not hit: " + unhit);
  return std::all_of(fiber.begin(), fiber.end(),
                     [&](int c) { return c == fiber[0]; });
}

KernelResult kernel_check(const SetMapping& f, int k, const FiniteYBMap& rx) {
  if (f.domain_size != rx.size)
    fail(ErrorCode::SizeMismatch, "mapping domain vs solution size");
  if (k < 0 || k >= f.codomain_size)
    fail(ErrorCode::IndexOutOfRange, "codomain index " + std::to_string(k));
  std::vector<int> fiber;
  for (int x = 0; x < f.domain_size; ++x)
    if (f.apply(x) == k) fiber.push_back(x);
  if (fiber.empty())
    fail(ErrorCode::EmptyFiber, "fiber over " + std::to_string(k) + " is empty");

  KernelResult result;
  std::vector<int> pos(f.domain_size, -1);
  for (size_t i = 0; i < fiber.size(); ++i) pos[fiber[i]] = static_cast<int>(i);
  for (int a : fiber)
    for (int b : fiber) {
      ++result.report.relations_checked;
      const auto [u, v] = rx.apply(a, b);
      if (pos[u] < 0 || pos[v] < 0)
        result.report.add_failure("fiber_invariance", {a, b});
    }
  if (result.report.passed()) {
    const int m = static_cast<int>(fiber.size());
    std::vector<std::pair<int, int>> t(static_cast<size_t>(m) * m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        const auto [u, v] = rx.apply(fiber[i], fiber[j]);
        t[static_cast<size_t>(i) * m + j] = {pos[u], pos[v]};
      }
    result.restriction = make_yb_map(m, std::move(t));
  }
  return result;
}

namespace {

bool solves(const FiniteYBMap& m, Equation equation) {
  return equation == Equation::ybe ? check_ybe(m).passed()
                                   : check_braid(m).passed();
}

}  // namespace

std::vector<FiniteYBMap> enumerate_solutions(int n, Equation equation,
                                             bool invertible_only) {
  if (n <= 0) fail(ErrorCode::BadN, "size must be positive");
  if (n > 3)
    fail(ErrorCode::TooLarge, "enumeration capped at size 3, got " + std::to_string(n));
  std::vector<FiniteYBMap> out;
  const int n2 = n * n;
  if (n <= 2 && !invertible_only) {
    // All functions on pairs, flattened-table lexicographic order.
    std::vector<int> flat(n2, 0);
    while (true) {
      std::vector<std::pair<int, int>> t(n2);
      for (int i = 0; i < n2; ++i) t[i] = {flat[i] / n, flat[i] % n};
      FiniteYBMap m = make_yb_map(n, std::move(t));
      if (solves(m, equation)) out.push_back(std::move(m));
      int k = n2 - 1;
      while (k >= 0 && flat[k] == n2 - 1) flat[k--] = 0;
      if (k < 0) break;
      ++flat[k];
    }
    return out;
  }
  // Bijections only (n = 3 is restricted to bijections in either mode).
  std::vector<int> perm(n2);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<std::pair<int, int>> t(n2);
    for (int i = 0; i < n2; ++i) t[i] = {perm[i] / n, perm[i] % n};
    FiniteYBMap m = make_yb_map(n, std::move(t));
    if (solves(m, equation)) out.push_back(std::move(m));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace ybx
