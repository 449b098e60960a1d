#include "ybx/rep.hpp"

#include <string>

#include "ybx/error.hpp"
#include "ybx/tuple_space.hpp"

namespace ybx {

void GeneratorAssignment::set_image(Fam fam, int i, int j, std::vector<int> perm) {
  images[{static_cast<int>(fam), i, j}] = std::move(perm);
}

bool GeneratorAssignment::has(Fam fam, int i, int j) const {
  return images.count({static_cast<int>(fam), i, j}) > 0;
}

const std::vector<int>& GeneratorAssignment::image_of(Fam fam, int i, int j) const {
  const auto it = images.find({static_cast<int>(fam), i, j});
  if (it == images.end())
    fail(ErrorCode::MissingGenerator,
         "no image assigned to " + letter_string(Letter{fam, i, j, 1}));
  return it->second;
}

std::vector<int> evaluate_word(const GeneratorAssignment& a, const Word& w) {
  std::vector<int> acc = identity_perm(a.domain);
  for (const Letter& l : w) {
    const std::vector<int>& img = a.image_of(l.fam, l.i, l.j);
    if (l.e > 0) {
      acc = compose_perms(img, acc);
    } else {
      const std::vector<int> inv = inverse_perm(img);
      if (inv.empty())
        fail(ErrorCode::NotInvertible, "image of " + letter_string(l) + " is not bijective");
      acc = compose_perms(inv, acc);
    }
  }
  return acc;
}

CheckReport check_assignment(const Presentation& p, const GeneratorAssignment& a) {
  for (const Letter& g : p.generators) a.image_of(g.fam, g.i, g.j);
  CheckReport rep;
  for (size_t ri = 0; ri < p.relators.size(); ++ri) {
    rep.relations_checked += 1;
    const std::vector<int> perm = evaluate_word(a, p.relators[ri]);
    for (int v = 0; v < a.domain; ++v)
      if (perm[v] != v) {
        rep.add_failure(word_string(p.relators[ri]), {static_cast<long long>(ri), v},
                        "moves point " + std::to_string(v) + " to " + std::to_string(perm[v]));
        break;
      }
  }
  return rep;
}

namespace {

constexpr long long kMaxDomain = 4000000;

std::function<std::pair<int, int>(int, int)> fn_of(const FiniteYBMap& m) {
  return [&m](int x, int y) { return m.apply(x, y); };
}

std::pair<int, int> swap_fn(int x, int y) { return {y, x}; }

// Placement of a pair map with its legs at slots (p, q), built through chains
// of adjacent slot swaps so that only adjacent placements are primitive.
struct ChainPlacer {
  const TupleSpace& space;

  std::vector<int> adjacent(const FiniteYBMap& m, int k) const {
    return placed_pair_perm(space, k, k + 1, fn_of(m));
  }
  std::vector<int> adjacent_swap(int k) const { return placed_pair_perm(space, k, k + 1, swap_fn); }

  std::vector<int> at(const FiniteYBMap& m, int p, int q) const {
    if (q == p + 1) return adjacent(m, p);
    if (q > p) {
      // conjugate the adjacent instance at (p, p+1) by the chain moving slot
      // p+1 up to q
      std::vector<int> chain = adjacent_swap(p + 1);
      for (int k = p + 2; k <= q - 1; ++k) chain = compose_perms(adjacent_swap(k), chain);
      return compose_perms(chain, compose_perms(adjacent(m, p), inverse_perm(chain)));
    }
    // descending pair: conjugate the ascending instance by the swap of slots
    // (q, p), itself a palindrome chain of adjacent swaps
    std::vector<int> big = adjacent_swap(q);
    for (int k = q + 1; k <= p - 1; ++k) big = compose_perms(adjacent_swap(k), big);
    for (int k = p - 2; k >= q; --k) big = compose_perms(adjacent_swap(k), big);
    return compose_perms(big, compose_perms(at(m, q, p), big));
  }
};

void require_solution(const FiniteYBMap& m, bool braid_form, const char* what) {
  if (!m.invertible) fail(ErrorCode::NotInvertible, std::string(what) + " must be bijective");
  const CheckReport chk = braid_form ? check_braid(m) : check_ybe(m);
  if (!chk.passed())
    fail(ErrorCode::NotASolution, std::string(what) + " does not satisfy the required equation");
}

TupleSpace uniform_space(int size, int n) {
  long long total = 1;
  for (int t = 0; t < n; ++t) {
    total *= size;
    if (total > kMaxDomain) fail(ErrorCode::TooLarge, "tuple space exceeds the supported size");
  }
  return TupleSpace(std::vector<int>(static_cast<size_t>(n), size));
}

}  // namespace

GeneratorAssignment rep_vp(const FiniteYBMap& r, int n) {
  if (n < 1) fail(ErrorCode::BadN, "strand count must be at least 1");
  require_solution(r, false, "the solution");
  const TupleSpace space = uniform_space(r.size, n);
  const ChainPlacer placer{space};
  GeneratorAssignment a;
  a.domain = space.total;
  a.strands = n;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) a.set_image(Fam::lambda, i, j, placer.at(r, i, j));
  for (int i = 1; i <= n - 1; ++i) a.set_image(Fam::p, i, 0, placer.adjacent_swap(i));
  return a;
}

GeneratorAssignment rep_hn(const FiniteYBMap& s, int n) {
  if (n < 1) fail(ErrorCode::BadN, "strand count must be at least 1");
  require_solution(s, true, "the braid solution");
  const TupleSpace space = uniform_space(s.size, n);
  const ChainPlacer placer{space};
  GeneratorAssignment a;
  a.domain = space.total;
  a.strands = n;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) a.set_image(Fam::x, i, j, placer.at(s, i, j));
  for (int i = 1; i <= n - 1; ++i) a.set_image(Fam::p, i, 0, placer.adjacent_swap(i));
  return a;
}

GeneratorAssignment rep_vbn(const FiniteYBMap& s, int n) {
  if (n < 1) fail(ErrorCode::BadN, "strand count must be at least 1");
  require_solution(s, true, "the braid solution");
  const TupleSpace space = uniform_space(s.size, n);
  const ChainPlacer placer{space};
  GeneratorAssignment a;
  a.domain = space.total;
  a.strands = n;
  for (int i = 1; i <= n - 1; ++i) {
    a.set_image(Fam::sigma, i, 0, placer.adjacent(s, i));
    a.set_image(Fam::rho, i, 0, placer.adjacent_swap(i));
    a.set_image(Fam::p, i, 0, placer.adjacent_swap(i));
  }
  return a;
}

GeneratorAssignment y3_assignment(const FiniteYBMap& rb, const FiniteYBMap& rc, const CrossMap& r) {
  if (!rb.invertible || !rc.invertible)
    fail(ErrorCode::NotInvertible, "both factor solutions must be bijective");
  if (!r.invertible) fail(ErrorCode::NotInvertible, "the cross map must be bijective");
  if (r.size_b != rb.size || r.size_c != rc.size)
    fail(ErrorCode::SizeMismatch, "cross map sizes do not match the factor solutions");
  const CheckReport compat = check_cross_compat(rb, rc, r);
  if (!compat.passed())
    fail(ErrorCode::Incompatible,
         "cross map is not compatible (" + compat.failures.front().relation + ")");

  const int nb = rb.size, nc = rc.size;
  const TupleSpace space(std::vector<int>{nb, nc, nb, nc, nb, nc});
  auto rb_fn = fn_of(rb);
  auto rc_fn = fn_of(rc);
  auto cross_fn = [&r](int c, int b) { return r.table[static_cast<size_t>(c) * r.size_b + b]; };

  GeneratorAssignment a;
  a.domain = space.total;
  a.strands = 6;
  const std::vector<std::pair<int, int>> pairs{{1, 2}, {1, 3}, {2, 3}};
  for (const auto& [i, j] : pairs) {
    a.set_image(Fam::b, 2 * i - 1, 2 * j - 1, placed_pair_perm(space, 2 * i - 1, 2 * j - 1, rb_fn));
    a.set_image(Fam::c, 2 * i, 2 * j, placed_pair_perm(space, 2 * i, 2 * j, rc_fn));
  }
  for (int k = 1; k <= 3; ++k)
    for (int l = 1; l <= 3; ++l)
      if (k != l) a.set_image(Fam::d, 2 * k, 2 * l - 1, placed_pair_perm(space, 2 * k, 2 * l - 1, cross_fn));
  return a;
}

namespace {

// Evaluation helper for a given strand count; strand counts below 2 carry no
// generators and only ever receive empty words.
GeneratorAssignment lambda_assignment(const FiniteYBMap& r, int m) {
  if (m >= 2) return rep_vp(r, m);
  GeneratorAssignment a;
  a.strands = m;
  a.domain = (m <= 0) ? 1 : r.size;
  return a;
}

struct SimplicialEngine {
  const FiniteYBMap& r;
  int n;
  const SimplicialMap& face;
  const SimplicialMap& degeneracy;
  std::map<int, GeneratorAssignment> reps;
  CheckReport rep;

  const GeneratorAssignment& at(int m) {
    auto it = reps.find(m);
    if (it == reps.end()) it = reps.emplace(m, lambda_assignment(r, m)).first;
    return it->second;
  }

  void compare(const std::string& relation, int i, int j, int gen_index, const Word& lhs,
               const Word& rhs, int strands) {
    rep.relations_checked += 1;
    const GeneratorAssignment& a = at(strands);
    const std::vector<int> pl = evaluate_word(a, lhs);
    const std::vector<int> pr = evaluate_word(a, rhs);
    for (int v = 0; v < a.domain; ++v)
      if (pl[v] != pr[v]) {
        rep.add_failure(relation, {i, j, gen_index, v},
                        word_string(lhs) + " vs " + word_string(rhs));
        return;
      }
  }

  void run() {
    const Presentation p = presentation("vpn", n);
    for (size_t g = 0; g < p.generators.size(); ++g) {
      const Word w{p.generators[g]};
      const int gi = static_cast<int>(g);
      for (int j = 0; j <= n - 1; ++j) {
        for (int i = 0; i < j; ++i)
          compare("face_face", i, j, gi, face(face(w, j, n), i, n - 1),
                  face(face(w, i, n), j - 1, n - 1), n - 2);
        for (int i = 0; i <= j; ++i)
          compare("degeneracy_degeneracy", i, j, gi, degeneracy(degeneracy(w, j, n), i, n + 1),
                  degeneracy(degeneracy(w, i, n), j + 1, n + 1), n + 2);
        for (int i = 0; i < j; ++i)
          compare("face_below_degeneracy", i, j, gi, face(degeneracy(w, j, n), i, n + 1),
                  degeneracy(face(w, i, n), j - 1, n - 1), n);
        compare("face_cancels_degeneracy", j, j, gi, face(degeneracy(w, j, n), j, n + 1), w, n);
        compare("face_cancels_degeneracy", j + 1, j, gi, face(degeneracy(w, j, n), j + 1, n + 1), w,
                n);
        if (j <= n - 2)
          for (int i = j + 2; i <= n; ++i)
            compare("face_above_degeneracy", i, j, gi, face(degeneracy(w, j, n), i, n + 1),
                    degeneracy(face(w, i - 1, n), j, n - 1), n);
      }
    }
  }
};

}  // namespace

CheckReport simplicial_check_custom(const FiniteYBMap& r, int n, const SimplicialMap& face,
                                    const SimplicialMap& degeneracy) {
  if (n < 2) fail(ErrorCode::BadN, "simplicial checks need n >= 2");
  SimplicialEngine engine{r, n, face, degeneracy, {}, {}};
  engine.run();
  return std::move(engine.rep);
}

CheckReport simplicial_check(const FiniteYBMap& r, int n) {
  return simplicial_check_custom(
      r, n, [](const Word& w, int i, int m) { return face_vp(w, i, m); },
      [](const Word& w, int i, int m) { return degeneracy_vp(w, i, m); });
}

namespace {

std::vector<int> sym_transposition(int points, int i) {  // swaps i, i+1 (1-based)
  std::vector<int> p = identity_perm(points);
  std::swap(p[i - 1], p[i]);
  return p;
}

std::vector<int> eval_sigma_word(const Word& w, int points) {
  std::vector<int> acc = identity_perm(points);
  for (const Letter& l : w) acc = compose_perms(sym_transposition(points, l.i), acc);
  return acc;
}

std::string perm_string(const std::vector<int>& p) {  // 1-based images
  std::string s = "[";
  for (size_t v = 0; v < p.size(); ++v) {
    if (v) s += ",";
    s += std::to_string(p[v] + 1);
  }
  return s + "]";
}

}  // namespace

CheckReport b3_counterexamples() {
  auto sig = [](int i) { return make_letter(Fam::sigma, i, 0, 1); };
  CheckReport rep;

  const Word left{sig(2), sig(1), sig(3), sig(2), sig(1)};
  const Word right{sig(3), sig(2), sig(1), sig(3)};
  const auto pl = eval_sigma_word(left, 4);
  const auto pr = eval_sigma_word(right, 4);
  rep.relations_checked += 1;
  if (pl == pr)
    rep.add_failure("face_image_words_differ", {},
                    "both words give " + perm_string(pl) + "; the face map would be a homomorphism");
  rep.info.emplace_back("face_image_words_differ " + perm_string(pl) + " vs " + perm_string(pr),
                        pl != pr);

  const Word relator{sig(1), sig(2), sig(1), make_letter(Fam::sigma, 2, 0, -1),
                     make_letter(Fam::sigma, 1, 0, -1), make_letter(Fam::sigma, 2, 0, -1)};
  std::vector<int> acc = identity_perm(3);
  for (const Letter& l : relator) {
    std::vector<int> img = sym_transposition(3, l.i);
    acc = compose_perms(img, acc);  // transpositions are self-inverse
  }
  rep.relations_checked += 1;
  if (acc != identity_perm(3))
    rep.add_failure("braid_relator_collapses", {}, "braid relator image " + perm_string(acc));
  rep.info.emplace_back("braid_relator_collapses_in_sym3", acc == identity_perm(3));

  const auto s2 = eval_sigma_word(Word{sig(2)}, 4);
  const auto s2s2 = eval_sigma_word(Word{sig(2), sig(2)}, 4);
  rep.relations_checked += 1;
  if (s2 == s2s2)
    rep.add_failure("degenerate_square_relation_detectable", {},
                    "sigma_2 image equals its square; the forced relation would be invisible");
  rep.info.emplace_back("degenerate_square_relation_detected", s2 != s2s2);
  return rep;
}

}  // namespace ybx
