#include "ybx/words.hpp"

#include <algorithm>
#include <utility>

#include "ybx/error.hpp"

namespace ybx {

std::string fam_name(Fam fam) {
  switch (fam) {
    case Fam::sigma: return "sigma";
    case Fam::rho: return "rho";
    case Fam::lambda: return "lambda";
    case Fam::x: return "x";
    case Fam::b: return "b";
    case Fam::c: return "c";
    case Fam::d: return "d";
    case Fam::p: return "p";
  }
  return "?";
}

Fam fam_from_name(const std::string& name) {
  if (name == "sigma") return Fam::sigma;
  if (name == "rho") return Fam::rho;
  if (name == "lambda") return Fam::lambda;
  if (name == "x") return Fam::x;
  if (name == "b") return Fam::b;
  if (name == "c") return Fam::c;
  if (name == "d") return Fam::d;
  if (name == "p") return Fam::p;
  fail(ErrorCode::BadSymbol, "unknown generator family '" + name + "'");
}

static bool single_indexed(Fam fam) { return fam == Fam::sigma || fam == Fam::rho || fam == Fam::p; }

Letter make_letter(Fam fam, int i, int j, int e) {
  if (e != 1 && e != -1) fail(ErrorCode::BadIndex, "exponent must be +1 or -1");
  if (i < 1) fail(ErrorCode::BadIndex, "generator index must be positive");
  if (single_indexed(fam)) {
    if (j != 0) fail(ErrorCode::BadIndex, fam_name(fam) + " takes a single index");
    return Letter{fam, i, 0, e};
  }
  if (j < 1) fail(ErrorCode::BadIndex, "generator index must be positive");
  if (i == j) fail(ErrorCode::BadIndex, fam_name(fam) + " needs two distinct indices");
  switch (fam) {
    case Fam::b:
      if (i % 2 == 0 || j % 2 == 0 || i > j)
        fail(ErrorCode::BadIndex, "b generators use an increasing pair of odd indices");
      break;
    case Fam::c:
      if (i % 2 == 1 || j % 2 == 1 || i > j)
        fail(ErrorCode::BadIndex, "c generators use an increasing pair of even indices");
      break;
    case Fam::d:
      if (i % 2 == 1 || j % 2 == 0) fail(ErrorCode::BadIndex, "d generators pair an even and an odd index");
      if (i / 2 == (j + 1) / 2) fail(ErrorCode::BadIndex, "d generator legs must sit on different strands");
      break;
    default: break;
  }
  return Letter{fam, i, j, e};
}

Word inverse_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    Letter l = *it;
    l.e = -l.e;
    out.push_back(l);
  }
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  for (const Letter& l : w) {
    if (!out.empty() && out.back().fam == l.fam && out.back().i == l.i && out.back().j == l.j &&
        out.back().e == -l.e)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

static std::pair<int, int> strand_support(const Letter& l) {
  if (single_indexed(l.fam)) return {l.i, l.i + 1};
  return {l.i, l.j};
}

static bool supports_disjoint(const Letter& a, const Letter& b) {
  const auto [a1, a2] = strand_support(a);
  const auto [b1, b2] = strand_support(b);
  return a1 != b1 && a1 != b2 && a2 != b1 && a2 != b2;
}

static bool letter_key_less(const Letter& a, const Letter& b) {
  if (a.i != b.i) return a.i < b.i;
  if (a.j != b.j) return a.j < b.j;
  if (a.fam != b.fam) return static_cast<int>(a.fam) < static_cast<int>(b.fam);
  return a.e < b.e;
}

Word normalize_commuting(const Word& w) {
  Word out = w;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t t = 0; t + 1 < out.size(); ++t) {
      if (supports_disjoint(out[t], out[t + 1]) && letter_key_less(out[t + 1], out[t])) {
        std::swap(out[t], out[t + 1]);
        changed = true;
      }
    }
  }
  return out;
}

std::string letter_string(const Letter& l) {
  std::string s = fam_name(l.fam) + "(" + std::to_string(l.i);
  if (!single_indexed(l.fam)) s += "," + std::to_string(l.j);
  s += ")";
  if (l.e < 0) s += "^-1";
  return s;
}

std::string word_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (size_t t = 0; t < w.size(); ++t) {
    if (t) s += " ";
    s += letter_string(w[t]);
  }
  return s;
}

namespace {

Word commutator_relator(const Letter& a, const Letter& b) {
  Letter ai = a, bi = b;
  ai.e = -1;
  bi.e = -1;
  return {a, b, ai, bi};
}

Word two_sided_relator(Word lhs, const Word& rhs) {
  const Word inv = inverse_word(rhs);
  lhs.insert(lhs.end(), inv.begin(), inv.end());
  return lhs;
}

}  // namespace

Presentation presentation(const std::string& name, int n) {
  if (name != "bn" && name != "vbn" && name != "vpn" && name != "hn" && name != "yn")
    fail(ErrorCode::UnsupportedName, "unknown presentation '" + name + "'");
  if (n < 2) fail(ErrorCode::BadN, "presentations need n >= 2");
  Presentation p;
  p.name = name;
  p.n = n;

  auto sig = [](int i) { return make_letter(Fam::sigma, i, 0, 1); };
  auto rho = [](int i) { return make_letter(Fam::rho, i, 0, 1); };
  auto lam = [](int i, int j) { return make_letter(Fam::lambda, i, j, 1); };

  if (name == "bn" || name == "vbn") {
    for (int i = 1; i <= n - 1; ++i) p.generators.push_back(sig(i));
    if (name == "vbn")
      for (int i = 1; i <= n - 1; ++i) p.generators.push_back(rho(i));

    for (int i = 1; i <= n - 2; ++i)
      p.relators.push_back(
          two_sided_relator({sig(i), sig(i + 1), sig(i)}, {sig(i + 1), sig(i), sig(i + 1)}));
    for (int i = 1; i <= n - 1; ++i)
      for (int j = i + 2; j <= n - 1; ++j) p.relators.push_back(commutator_relator(sig(i), sig(j)));

    if (name == "vbn") {
      for (int i = 1; i <= n - 1; ++i) p.relators.push_back(Word{rho(i), rho(i)});
      for (int i = 1; i <= n - 2; ++i)
        p.relators.push_back(
            two_sided_relator({rho(i), rho(i + 1), rho(i)}, {rho(i + 1), rho(i), rho(i + 1)}));
      for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 2; j <= n - 1; ++j) p.relators.push_back(commutator_relator(rho(i), rho(j)));
      for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n - 1; ++j)
          if (j >= i + 2 || i >= j + 2) p.relators.push_back(commutator_relator(sig(i), rho(j)));
      for (int i = 1; i <= n - 2; ++i)
        p.relators.push_back(
            two_sided_relator({rho(i), rho(i + 1), sig(i)}, {sig(i + 1), rho(i), rho(i + 1)}));
    }
    return p;
  }

  if (name == "vpn" || name == "hn") {
    const Fam fam = (name == "vpn") ? Fam::lambda : Fam::x;
    auto gen = [&](int i, int j) { return make_letter(fam, i, j, 1); };
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (i != j) p.generators.push_back(gen(i, j));

    const auto& gens = p.generators;
    for (size_t u = 0; u < gens.size(); ++u)
      for (size_t v = u + 1; v < gens.size(); ++v)
        if (supports_disjoint(gens[u], gens[v]))
          p.relators.push_back(commutator_relator(gens[u], gens[v]));

    if (name == "vpn") {
      for (int k = 1; k <= n; ++k)
        for (int i = 1; i <= n; ++i)
          for (int j = 1; j <= n; ++j) {
            if (i == j || i == k || j == k) continue;
            p.relators.push_back(
                two_sided_relator({gen(k, i), gen(k, j), gen(i, j)}, {gen(i, j), gen(k, j), gen(k, i)}));
          }
    } else {
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          for (int k = 1; k <= n; ++k) {
            if (i == j || i == k || j == k) continue;
            p.relators.push_back(
                two_sided_relator({gen(i, k), gen(k, j), gen(i, k)}, {gen(k, j), gen(i, k), gen(k, j)}));
          }
    }
    return p;
  }

  // yn
  auto bg = [](int i, int j) { return make_letter(Fam::b, 2 * i - 1, 2 * j - 1, 1); };
  auto cg = [](int i, int j) { return make_letter(Fam::c, 2 * i, 2 * j, 1); };
  auto dg = [](int k, int l) { return make_letter(Fam::d, 2 * k, 2 * l - 1, 1); };

  std::vector<std::pair<int, int>> pairs;    // i < j
  std::vector<std::pair<int, int>> d_index;  // k != l
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l <= n; ++l)
      if (k != l) d_index.emplace_back(k, l);

  for (const auto& [i, j] : pairs) p.generators.push_back(bg(i, j));
  for (const auto& [i, j] : pairs) p.generators.push_back(cg(i, j));
  for (const auto& [k, l] : d_index) p.generators.push_back(dg(k, l));

  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        p.relators.push_back(
            two_sided_relator({bg(i, j), bg(i, k), bg(j, k)}, {bg(j, k), bg(i, k), bg(i, j)}));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        p.relators.push_back(
            two_sided_relator({cg(i, j), cg(i, k), cg(j, k)}, {cg(j, k), cg(i, k), cg(i, j)}));

  for (const auto& [i, j] : pairs)
    for (const auto& [pp, q] : pairs) p.relators.push_back(commutator_relator(bg(i, j), cg(pp, q)));
  for (const auto& [i, j] : pairs)
    for (const auto& [k, l] : d_index)
      if (l != i && l != j) p.relators.push_back(commutator_relator(bg(i, j), dg(k, l)));
  for (const auto& [i, j] : pairs)
    for (const auto& [k, l] : d_index)
      if (k != i && k != j) p.relators.push_back(commutator_relator(cg(i, j), dg(k, l)));
  for (size_t u = 0; u < d_index.size(); ++u)
    for (size_t v = u + 1; v < d_index.size(); ++v) {
      const auto [k, l] = d_index[u];
      const auto [m, o] = d_index[v];
      if (k != m && l != o) p.relators.push_back(commutator_relator(dg(k, l), dg(m, o)));
    }

  for (const auto& [i, j] : pairs)
    for (int k = 1; k <= n; ++k) {
      if (k == i || k == j) continue;
      p.relators.push_back(
          two_sided_relator({bg(i, j), dg(k, i), dg(k, j)}, {dg(k, j), dg(k, i), bg(i, j)}));
    }
  for (const auto& [i, j] : pairs)
    for (int k = 1; k <= n; ++k) {
      if (k == i || k == j) continue;
      p.relators.push_back(
          two_sided_relator({cg(i, j), dg(j, k), dg(i, k)}, {dg(i, k), dg(j, k), cg(i, j)}));
    }
  return p;
}

Word tau_yn(const Word& w, int n) {
  if (n < 2) fail(ErrorCode::BadN, "tau needs n >= 2");
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (l.fam != Fam::b && l.fam != Fam::c && l.fam != Fam::d)
      fail(ErrorCode::BadSymbol, "tau applies to b/c/d letters, got " + letter_string(l));
    if (l.i > 2 * n || l.j > 2 * n)
      fail(ErrorCode::BadIndex, letter_string(l) + " is outside the 2n-strand range");
    if (l.fam == Fam::d)
      out.push_back(make_letter(Fam::lambda, l.j, l.i, l.e));
    else
      out.push_back(make_letter(Fam::lambda, l.i, l.j, l.e));
  }
  return out;
}

static void require_y3_pair(int i, int j) {
  if (!((i == 1 && j == 2) || (i == 1 && j == 3) || (i == 2 && j == 3)))
    fail(ErrorCode::BadIndex, "strand pair must be one of (1,2), (1,3), (2,3)");
}

Word lambda_y3(int i, int j) {
  require_y3_pair(i, j);
  return {make_letter(Fam::d, 2 * j, 2 * i - 1, 1), make_letter(Fam::b, 2 * i - 1, 2 * j - 1, 1),
          make_letter(Fam::c, 2 * i, 2 * j, 1), make_letter(Fam::d, 2 * i, 2 * j - 1, -1)};
}

Word n_element(int i, int j) {
  require_y3_pair(i, j);
  return {make_letter(Fam::lambda, 2 * i - 1, 2 * j, 1), make_letter(Fam::lambda, 2 * i - 1, 2 * j - 1, 1),
          make_letter(Fam::lambda, 2 * i, 2 * j, 1), make_letter(Fam::lambda, 2 * j - 1, 2 * i, -1)};
}

Word m_element(int i, int j) {
  require_y3_pair(i, j);
  return {make_letter(Fam::lambda, 2 * i - 1, 2 * j, 1), make_letter(Fam::lambda, 2 * i - 1, 2 * j - 1, 1),
          make_letter(Fam::lambda, 2 * i, 2 * j, 1), make_letter(Fam::lambda, 2 * i, 2 * j - 1, 1)};
}

Word plus_projection(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (l.fam != Fam::lambda)
      fail(ErrorCode::BadSymbol, "plus projection applies to lambda words, got " + letter_string(l));
    if (l.i > l.j)
      out.push_back(make_letter(Fam::lambda, l.j, l.i, -l.e));
    else
      out.push_back(l);
  }
  return free_reduce(out);
}

namespace {

void check_vp_word(const Word& w, int n) {
  for (const Letter& l : w) {
    if (l.fam != Fam::lambda)
      fail(ErrorCode::BadSymbol, "expected a lambda word, got " + letter_string(l));
    if (l.i > n || l.j > n) fail(ErrorCode::BadIndex, letter_string(l) + " is outside 1.." + std::to_string(n));
  }
}

// Image of a positive lambda letter under the degeneracy that doubles strand i
// (1-based): the table below, split by whether the subscript pair ascends.
Word degeneracy_letter(int a, int b, int i) {
  auto lam = [](int x, int y) { return make_letter(Fam::lambda, x, y, 1); };
  const int k = std::min(a, b), l = std::max(a, b);
  if (a < b) {
    if (i < k) return {lam(k + 1, l + 1)};
    if (i == k) return {lam(k, l + 1), lam(k + 1, l + 1)};
    if (i < l) return {lam(k, l + 1)};
    if (i == l) return {lam(k, l + 1), lam(k, l)};
    return {lam(k, l)};
  }
  if (i < k) return {lam(l + 1, k + 1)};
  if (i == k) return {lam(l + 1, k + 1), lam(l + 1, k)};
  if (i < l) return {lam(l + 1, k)};
  if (i == l) return {lam(l, k), lam(l + 1, k)};
  return {lam(l, k)};
}

}  // namespace

Word degeneracy_vp(const Word& w, int i, int n) {
  if (i < 0 || i > n - 1) fail(ErrorCode::BadIndex, "degeneracy index outside 0..n-1");
  check_vp_word(w, n);
  Word out;
  for (const Letter& l : w) {
    Word img = degeneracy_letter(l.i, l.j, i + 1);
    if (l.e < 0) img = inverse_word(img);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

Word face_vp(const Word& w, int i, int n) {
  if (i < 0 || i > n - 1) fail(ErrorCode::BadIndex, "face index outside 0..n-1");
  check_vp_word(w, n);
  const int s = i + 1;
  Word out;
  for (const Letter& l : w) {
    if (l.i == s || l.j == s) continue;
    out.push_back(make_letter(Fam::lambda, l.i - (l.i > s ? 1 : 0), l.j - (l.j > s ? 1 : 0), l.e));
  }
  return out;
}

Word doubling_vp(const Word& w, int n, int k) {
  if (k < 1) fail(ErrorCode::BadIndex, "doubling exponent must be at least 1");
  check_vp_word(w, n);
  Word out = w;
  int strands = n;
  for (int j = n - 1; j >= 0; --j)
    for (int t = 0; t < k; ++t) {
      out = degeneracy_vp(out, j, strands);
      ++strands;
    }
  return out;
}

Word doubling_bn(const Word& w, int n) {
  if (n < 2) fail(ErrorCode::BadN, "braid doubling needs n >= 2");
  auto sig = [](int i, int e) { return make_letter(Fam::sigma, i, 0, e); };
  Word out;
  for (const Letter& l : w) {
    if (l.fam != Fam::sigma)
      fail(ErrorCode::BadSymbol, "braid doubling applies to sigma words, got " + letter_string(l));
    if (l.i > n - 1) fail(ErrorCode::BadIndex, letter_string(l) + " is outside 1..n-1");
    Word img{sig(2 * l.i, 1), sig(2 * l.i + 1, 1), sig(2 * l.i - 1, 1), sig(2 * l.i, 1)};
    if (l.e < 0) img = inverse_word(img);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

}  // namespace ybx
