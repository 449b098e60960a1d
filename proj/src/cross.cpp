#include "ybx/cross.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <string>

#include "ybx/error.hpp"
#include "ybx/tuple_space.hpp"

namespace ybx {

CrossMap make_cross_map(int size_c, int size_b,
                        std::vector<std::pair<int, int>> table) {
  if (size_c <= 0 || size_b <= 0)
    fail(ErrorCode::BadN, "cross map sizes must be positive");
  const size_t want = static_cast<size_t>(size_c) * size_b;
  if (table.size() != want)
    fail(ErrorCode::LengthMismatch, "table has " + std::to_string(table.size()) +
                                        " entries, expected " + std::to_string(want));
  std::vector<bool> hit(want, false);
  bool bijective = true;
  for (const auto& [c, b] : table) {
    if (c < 0 || c >= size_c || b < 0 || b >= size_b)
      fail(ErrorCode::IndexOutOfRange,
           "output (" + std::to_string(c) + "," + std::to_string(b) + ")");
    const size_t flat = static_cast<size_t>(c) * size_b + b;
    if (hit[flat]) bijective = false;
    hit[flat] = true;
  }
  CrossMap r;
  r.size_c = size_c;
  r.size_b = size_b;
  r.table = std::move(table);
  r.invertible = bijective;
  return r;
}

CrossMap identity_cross(int size_c, int size_b) {
  std::vector<std::pair<int, int>> t;
  t.reserve(static_cast<size_t>(size_c) * size_b);
  for (int c = 0; c < size_c; ++c)
    for (int b = 0; b < size_b; ++b) t.emplace_back(c, b);
  return make_cross_map(size_c, size_b, std::move(t));
}

CrossMap inverse_cross(const CrossMap& r) {
  if (!r.invertible)
    fail(ErrorCode::NotInvertible, "cross map is not a bijection");
  std::vector<std::pair<int, int>> t(r.table.size());
  for (int c = 0; c < r.size_c; ++c)
    for (int b = 0; b < r.size_b; ++b) {
      const auto [c2, b2] = r.apply(c, b);
      t[static_cast<size_t>(c2) * r.size_b + b2] = {c, b};
    }
  return make_cross_map(r.size_c, r.size_b, std::move(t));
}

namespace {

void require_sizes(const FiniteYBMap& rb, const FiniteYBMap& rc,
                   const CrossMap& r) {
  if (r.size_b != rb.size || r.size_c != rc.size)
    fail(ErrorCode::SizeMismatch,
         "cross map (" + std::to_string(r.size_c) + "," +
             std::to_string(r.size_b) + ") vs solutions of sizes " +
             std::to_string(rb.size) + ", " + std::to_string(rc.size));
}

using PairFn = std::function<std::pair<int, int>(int, int)>;

PairFn fn_of(const FiniteYBMap& m) {
  return [&m](int a, int b) { return m.apply(a, b); };
}

// Cross map as a placed factor: first leg C, second leg B.
PairFn fn_of(const CrossMap& r) {
  return [&r](int c, int b) { return r.apply(c, b); };
}

PairFn fn_of_inverse(const CrossMap& r) {
  // Caller guarantees invertibility.
  auto inv = std::make_shared<CrossMap>(inverse_cross(r));
  return [inv](int c, int b) { return inv->apply(c, b); };
}

// A placed factor in a relation word: map legs are (p, q) in the ambient
// space; the word is composed right to left.
struct PlacedFactor {
  int p, q;
  PairFn f;
};

std::vector<int> eval_word(const TupleSpace& space,
                           const std::vector<PlacedFactor>& word) {
  std::vector<int> acc = identity_perm(space.total);
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    acc = compose_perms(placed_pair_perm(space, it->p, it->q, it->f), acc);
  return acc;
}

void check_sides(const TupleSpace& space, const std::string& relation,
                 const std::vector<PlacedFactor>& lhs,
                 const std::vector<PlacedFactor>& rhs, CheckReport& rep) {
  const auto l = eval_word(space, lhs);
  const auto r = eval_word(space, rhs);
  rep.relations_checked += space.total;
  for (int v = 0; v < space.total; ++v)
    if (l[v] != r[v]) {
      std::vector<long long> witness;
      for (size_t leg = 0; leg < space.dims.size(); ++leg)
        witness.push_back(space.digit(v, static_cast<int>(leg)));
      rep.add_failure(relation, witness);
      break;
    }
}

}  // namespace

CheckReport check_cross_compat(const FiniteYBMap& rb, const FiniteYBMap& rc,
                               const CrossMap& r) {
  require_sizes(rb, rc, r);
  CheckReport rep;
  const auto cross = fn_of(r);
  {
    // C x B x B:  RB_23 R_12 R_13 = R_13 R_12 RB_23
    TupleSpace space({rc.size, rb.size, rb.size});
    check_sides(space, "compat_b",
                {{2, 3, fn_of(rb)}, {1, 2, cross}, {1, 3, cross}},
                {{1, 3, cross}, {1, 2, cross}, {2, 3, fn_of(rb)}}, rep);
  }
  {
    // C x C x B:  RC_12 R_23 R_13 = R_13 R_23 RC_12
    TupleSpace space({rc.size, rc.size, rb.size});
    check_sides(space, "compat_c",
                {{1, 2, fn_of(rc)}, {2, 3, cross}, {1, 3, cross}},
                {{1, 3, cross}, {2, 3, cross}, {1, 2, fn_of(rc)}}, rep);
  }
  return rep;
}

CheckReport check_derived_relations(const FiniteYBMap& rb,
                                    const FiniteYBMap& rc, const CrossMap& r) {
  require_sizes(rb, rc, r);
  if (!r.invertible)
    fail(ErrorCode::NotInvertible,
         "derived relations involve the inverse cross map");
  // Six-factor space, B legs at 1,3,5 and C legs at 2,4,6; cross factors are
  // written (C-leg, B-leg).
  TupleSpace space({rb.size, rc.size, rb.size, rc.size, rb.size, rc.size});
  const auto B = fn_of(rb);
  const auto C = fn_of(rc);
  const auto X = fn_of(r);
  const auto Xi = fn_of_inverse(r);
  CheckReport rep;
  // rb1: RB_15 R_41 R_45 = R_45 R_41 RB_15
  check_sides(space, "rb1", {{1, 5, B}, {4, 1, X}, {4, 5, X}},
              {{4, 5, X}, {4, 1, X}, {1, 5, B}}, rep);
  // rb2: R_45^-1 RB_15 R_41 = R_41 RB_15 R_45^-1
  check_sides(space, "rb2", {{4, 5, Xi}, {1, 5, B}, {4, 1, X}},
              {{4, 1, X}, {1, 5, B}, {4, 5, Xi}}, rep);
  // rb3: RB_35 R_23 R_25 = R_25 R_23 RB_35
  check_sides(space, "rb3", {{3, 5, B}, {2, 3, X}, {2, 5, X}},
              {{2, 5, X}, {2, 3, X}, {3, 5, B}}, rep);
  // rb4: R_23^-1 R_25^-1 RB_35 = RB_35 R_25^-1 R_23^-1
  check_sides(space, "rb4", {{2, 3, Xi}, {2, 5, Xi}, {3, 5, B}},
              {{3, 5, B}, {2, 5, Xi}, {2, 3, Xi}}, rep);
  // rb5: RB_13 R_61 R_63 = R_63 R_61 RB_13
  check_sides(space, "rb5", {{1, 3, B}, {6, 1, X}, {6, 3, X}},
              {{6, 3, X}, {6, 1, X}, {1, 3, B}}, rep);
  // rc1: RC_26 R_63 R_23 = R_23 R_63 RC_26
  check_sides(space, "rc1", {{2, 6, C}, {6, 3, X}, {2, 3, X}},
              {{2, 3, X}, {6, 3, X}, {2, 6, C}}, rep);
  // rc2: R_23^-1 RC_26 R_63 = R_63 RC_26 R_23^-1
  check_sides(space, "rc2", {{2, 3, Xi}, {2, 6, C}, {6, 3, X}},
              {{6, 3, X}, {2, 6, C}, {2, 3, Xi}}, rep);
  // rc3: RC_24 R_45 R_25 = R_25 R_45 RC_24
  check_sides(space, "rc3", {{2, 4, C}, {4, 5, X}, {2, 5, X}},
              {{2, 5, X}, {4, 5, X}, {2, 4, C}}, rep);
  // rc4: R_45^-1 R_25^-1 RC_24 = RC_24 R_25^-1 R_45^-1
  check_sides(space, "rc4", {{4, 5, Xi}, {2, 5, Xi}, {2, 4, C}},
              {{2, 4, C}, {2, 5, Xi}, {4, 5, Xi}}, rep);
  // rc5: RC_46 R_61 R_41 = R_41 R_61 RC_46
  check_sides(space, "rc5", {{4, 6, C}, {6, 1, X}, {4, 1, X}},
              {{4, 1, X}, {6, 1, X}, {4, 6, C}}, rep);
  return rep;
}

namespace {

std::string describe_first_failure(const CheckReport& rep) {
  const auto& f = rep.failures.front();
  std::string w;
  for (long long v : f.witness) w += (w.empty() ? "" : ",") + std::to_string(v);
  return f.relation + " fails at (" + w + ")";
}

// Permutation of the four-factor space (B, C, B, C) realizing a word of
// placed factors, converted to a pair map on W = B x C.
FiniteYBMap pair_map_from_word(int nb, int nc,
                               const std::vector<PlacedFactor>& word) {
  TupleSpace space({nb, nc, nb, nc});
  std::vector<int> acc = identity_perm(space.total);
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    acc = compose_perms(placed_pair_perm(space, it->p, it->q, it->f), acc);
  const int w = nb * nc;
  std::vector<std::pair<int, int>> t(static_cast<size_t>(w) * w);
  // Leftmost-most-significant flattening makes the four-factor index agree
  // with the pair flattening (b, c) -> b*nc + c on both halves.
  for (int v = 0; v < space.total; ++v)
    t[v] = {acc[v] / w, acc[v] % w};
  return make_yb_map(w, std::move(t));
}

}  // namespace

FiniteYBMap build_extension(const FiniteYBMap& rb, const FiniteYBMap& rc,
                            const CrossMap& r) {
  require_sizes(rb, rc, r);
  if (!r.invertible)
    fail(ErrorCode::NotInvertible, "cross map must be a bijection");
  const auto compat = check_cross_compat(rb, rc, r);
  if (!compat.passed())
    fail(ErrorCode::Incompatible, describe_first_failure(compat));
  // R = R_41 RB_13 RC_24 R^-1_23 on legs (B, C, B, C).
  return pair_map_from_word(rb.size, rc.size,
                            {{4, 1, fn_of(r)},
                             {1, 3, fn_of(rb)},
                             {2, 4, fn_of(rc)},
                             {2, 3, fn_of_inverse(r)}});
}

FiniteYBMap build_braid_extension(const FiniteYBMap& sb, const FiniteYBMap& sc,
                                  const CrossMap& r) {
  if (r.size_b != sb.size || r.size_c != sc.size)
    fail(ErrorCode::SizeMismatch, "cross map vs braid solutions");
  if (!r.invertible)
    fail(ErrorCode::NotInvertible, "cross map must be a bijection");
  // Braid-form compatibility: the six relations carrying SB/SC across the
  // cross factors, on the six-factor space.
  TupleSpace space({sb.size, sc.size, sb.size, sc.size, sb.size, sc.size});
  const auto B = fn_of(sb);
  const auto C = fn_of(sc);
  const auto X = fn_of(r);
  CheckReport rep;
  check_sides(space, "brb1", {{1, 5, B}, {4, 1, X}, {4, 5, X}},
              {{4, 1, X}, {4, 5, X}, {1, 5, B}}, rep);
  check_sides(space, "brb2", {{3, 5, B}, {2, 3, X}, {2, 5, X}},
              {{2, 3, X}, {2, 5, X}, {3, 5, B}}, rep);
  check_sides(space, "brb3", {{1, 3, B}, {6, 1, X}, {6, 3, X}},
              {{6, 1, X}, {6, 3, X}, {1, 3, B}}, rep);
  check_sides(space, "brc1", {{2, 6, C}, {6, 3, X}, {2, 3, X}},
              {{6, 3, X}, {2, 3, X}, {2, 6, C}}, rep);
  check_sides(space, "brc2", {{2, 4, C}, {4, 5, X}, {2, 5, X}},
              {{4, 5, X}, {2, 5, X}, {2, 4, C}}, rep);
  check_sides(space, "brc3", {{4, 6, C}, {6, 1, X}, {4, 1, X}},
              {{6, 1, X}, {4, 1, X}, {4, 6, C}}, rep);
  if (!rep.passed())
    fail(ErrorCode::Incompatible, describe_first_failure(rep));
  // S = R_23 SB_13 SC_24 R^-1_23 on legs (B, C, B, C).
  return pair_map_from_word(sb.size, sc.size,
                            {{2, 3, fn_of(r)},
                             {1, 3, fn_of(sb)},
                             {2, 4, fn_of(sc)},
                             {2, 3, fn_of_inverse(r)}});
}

std::vector<CrossMap> search_cross_maps(const FiniteYBMap& rb,
                                        const FiniteYBMap& rc,
                                        bool invertible_only) {
  const long long n = static_cast<long long>(rb.size) * rc.size;
  if (n > 4)
    fail(ErrorCode::TooLarge,
         "cross-map search capped at |B|*|C| <= 4, got " + std::to_string(n));
  const int total = static_cast<int>(n);
  std::vector<CrossMap> out;
  auto push_if_compatible = [&](const std::vector<int>& flat) {
    std::vector<std::pair<int, int>> t(total);
    for (int i = 0; i < total; ++i) t[i] = {flat[i] / rb.size, flat[i] % rb.size};
    CrossMap r = make_cross_map(rc.size, rb.size, std::move(t));
    if (check_cross_compat(rb, rc, r).passed()) out.push_back(std::move(r));
  };
  if (invertible_only) {
    std::vector<int> perm(total);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      push_if_compatible(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  } else {
    std::vector<int> flat(total, 0);
    while (true) {
      push_if_compatible(flat);
      int k = total - 1;
      while (k >= 0 && flat[k] == total - 1) flat[k--] = 0;
      if (k < 0) break;
      ++flat[k];
    }
  }
  return out;
}

CheckReport check_set_twist(const FiniteYBMap& t, const FiniteYBMap& f,
                            const std::vector<int>& phi,
                            const std::vector<int>& psi) {
  if (f.size != t.size)
    fail(ErrorCode::SizeMismatch, "T and F act on different sets");
  if (!f.invertible)
    fail(ErrorCode::NotBijective, "F must be a bijection");
  const int m = t.size;
  const size_t m3 = static_cast<size_t>(m) * m * m;
  if (phi.size() != m3 || psi.size() != m3)
    fail(ErrorCode::SizeMismatch, "Phi/Psi must act on the threefold product");
  for (const auto* p : {&phi, &psi}) {
    for (int v : *p)
      if (v < 0 || v >= static_cast<int>(m3))
        fail(ErrorCode::IndexOutOfRange, "endomap output " + std::to_string(v));
    if (inverse_perm(*p).empty())
      fail(ErrorCode::NotBijective, "Phi and Psi must be bijections");
  }

  TupleSpace space({m, m, m});
  const auto f12 = placed_pair_perm(space, 1, 2, fn_of(f));
  const auto f23 = placed_pair_perm(space, 2, 3, fn_of(f));
  const auto t12 = placed_pair_perm(space, 1, 2, fn_of(t));
  const auto t23 = placed_pair_perm(space, 2, 3, fn_of(t));
  CheckReport rep;
  auto compare = [&](const std::string& relation, const std::vector<int>& lhs,
                     const std::vector<int>& rhs) {
    rep.relations_checked += space.total;
    for (int v = 0; v < space.total; ++v)
      if (lhs[v] != rhs[v]) {
        rep.add_failure(relation,
                        {space.digit(v, 0), space.digit(v, 1), space.digit(v, 2)});
        break;
      }
  };
  compare("twist_intertwine", compose_perms(f12, psi), compose_perms(f23, phi));
  compare("twist_phi_commutes", compose_perms(phi, t23), compose_perms(t23, phi));
  compare("twist_psi_commutes", compose_perms(psi, t12), compose_perms(t12, psi));

  // Twisted map R = F T F^-1 must satisfy the braid relation.
  std::vector<int> ft(static_cast<size_t>(m) * m), finv(ft.size());
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      const auto [u, v] = f.apply(x, y);
      finv[u * m + v] = x * m + y;
    }
  std::vector<std::pair<int, int>> twisted(static_cast<size_t>(m) * m);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      const int pre = finv[x * m + y];
      const auto [a, b] = t.apply(pre / m, pre % m);
      const auto [u, v] = f.apply(a, b);
      twisted[static_cast<size_t>(x) * m + y] = {u, v};
    }
  const auto braid = check_braid(make_yb_map(m, std::move(twisted)));
  rep.relations_checked += braid.relations_checked;
  for (const auto& fl : braid.failures)
    rep.add_failure("braid_twisted", fl.witness);
  return rep;
}

SetTwistData make_extension_twist(const FiniteYBMap& rb, const FiniteYBMap& rc,
                                  const CrossMap& r) {
  require_sizes(rb, rc, r);
  const FiniteYBMap sb = convert(rb, ConvertDirection::yb_to_braid);
  const FiniteYBMap sc = convert(rc, ConvertDirection::yb_to_braid);
  SetTwistData data{
      pair_map_from_word(rb.size, rc.size,
                         {{1, 3, fn_of(sb)}, {2, 4, fn_of(sc)}}),
      pair_map_from_word(rb.size, rc.size, {{2, 3, fn_of(r)}}),
      {},
      {}};
  TupleSpace space6({rb.size, rc.size, rb.size, rc.size, rb.size, rc.size});
  const auto r23 = placed_pair_perm(space6, 2, 3, fn_of(r));
  const auto r25 = placed_pair_perm(space6, 2, 5, fn_of(r));
  const auto r45 = placed_pair_perm(space6, 4, 5, fn_of(r));
  data.phi = compose_perms(r23, r25);
  data.psi = compose_perms(r45, r25);
  return data;
}

}  // namespace ybx
