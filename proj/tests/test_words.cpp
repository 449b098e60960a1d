#include <doctest.h>

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ybx/error.hpp"
#include "ybx/words.hpp"

using namespace ybx;

namespace {

template <typename F>
std::optional<ErrorCode> code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

Letter lam(int i, int j, int e = 1) { return make_letter(Fam::lambda, i, j, e); }
Letter sig(int i, int e = 1) { return make_letter(Fam::sigma, i, 0, e); }

Word parse_lambdas(const std::vector<std::array<int, 3>>& rows) {
  Word w;
  for (const auto& [i, j, e] : rows) w.push_back(lam(i, j, e));
  return w;
}

}  // namespace

TEST_CASE("letter construction validates family, arity, indices, and parity") {
  CHECK(make_letter(Fam::sigma, 3, 0, -1).e == -1);
  CHECK(make_letter(Fam::lambda, 2, 5, 1).j == 5);
  // b letters join two odd strands, c two even strands, d an even to an odd.
  CHECK(make_letter(Fam::b, 1, 3, 1).fam == Fam::b);
  CHECK(make_letter(Fam::c, 2, 6, 1).fam == Fam::c);
  CHECK(make_letter(Fam::d, 4, 1, 1).fam == Fam::d);

  CHECK(code_of([] { make_letter(Fam::sigma, 0, 0, 1); }) == ErrorCode::BadIndex);
  CHECK(code_of([] { make_letter(Fam::sigma, 1, 2, 1); }) == ErrorCode::BadIndex);
  CHECK(code_of([] { make_letter(Fam::lambda, 2, 2, 1); }) == ErrorCode::BadIndex);
  CHECK(code_of([] { make_letter(Fam::lambda, 1, 0, 1); }) == ErrorCode::BadIndex);
  CHECK(code_of([] { make_letter(Fam::lambda, 1, 2, 2); }) == ErrorCode::BadIndex);
  CHECK(code_of([] { make_letter(Fam::b, 1, 2, 1); }) == ErrorCode::BadIndex);   // even second
  CHECK(code_of([] { make_letter(Fam::b, 3, 1, 1); }) == ErrorCode::BadIndex);   // not ascending
  CHECK(code_of([] { make_letter(Fam::c, 2, 3, 1); }) == ErrorCode::BadIndex);   // odd second
  CHECK(code_of([] { make_letter(Fam::d, 3, 2, 1); }) == ErrorCode::BadIndex);   // odd first
  CHECK(code_of([] { make_letter(Fam::d, 2, 1, 1); }) == ErrorCode::BadIndex);   // same strand
  CHECK(code_of([] { make_letter(Fam::d, 2, 3, 1); }) == std::nullopt);
  CHECK(code_of([] { make_letter(Fam::d, 6, 1, 1); }) == std::nullopt);

  CHECK(fam_from_name("lambda") == Fam::lambda);
  CHECK(fam_name(Fam::rho) == "rho");
  CHECK(code_of([] { fam_from_name("gamma"); }) == ErrorCode::BadSymbol);
}

TEST_CASE("word formatting") {
  const Word w{lam(1, 4), lam(2, 3, -1), sig(2)};
  CHECK(word_string(w) == "lambda(1,4) lambda(2,3)^-1 sigma(2)");
  CHECK(word_string({}) == "1");  // the empty word is the identity
}

TEST_CASE("free reduction and inverses") {
  const Word w{lam(1, 2), lam(1, 3)};
  const Word winv = inverse_word(w);
  REQUIRE(winv.size() == 2);
  CHECK(winv[0] == lam(1, 3, -1));
  CHECK(winv[1] == lam(1, 2, -1));

  Word cancel = w;
  cancel.insert(cancel.end(), winv.begin(), winv.end());
  CHECK(free_reduce(cancel).empty());

  // Reduction cascades through newly adjacent pairs.
  const Word nested{lam(1, 2), lam(3, 4), lam(3, 4, -1), lam(1, 2, -1), lam(5, 6)};
  const Word reduced = free_reduce(nested);
  REQUIRE(reduced.size() == 1);
  CHECK(reduced[0] == lam(5, 6));

  // No cancellation across distinct letters.
  CHECK(free_reduce({lam(1, 2), lam(2, 1, -1)}).size() == 2);
}

TEST_CASE("commuting-letter normalization sorts disjoint neighbours") {
  // lambda(2,4) and lambda(1,3) have disjoint strand sets: sorted by index.
  const Word w{lam(2, 4), lam(1, 3)};
  const Word sorted = normalize_commuting(w);
  REQUIRE(sorted.size() == 2);
  CHECK(sorted[0] == lam(1, 3));
  CHECK(sorted[1] == lam(2, 4));
  // Overlapping supports are left alone.
  const Word keep{lam(2, 4), lam(1, 2)};
  CHECK(normalize_commuting(keep) == keep);
}

TEST_CASE("presentation sizes follow the strand count") {
  // Braid presentations: n-1 generators, (n-2) exchange relators plus distant
  // commutators.
  for (int n = 2; n <= 5; ++n) {
    const Presentation b = presentation("bn", n);
    CHECK(static_cast<int>(b.generators.size()) == n - 1);
    CHECK(static_cast<int>(b.relators.size()) == (n - 2) + (n - 2) * (n - 3) / 2);
  }
  // Virtual braids add an involutive family, its exchange relators, and the
  // mixed relations.
  const Presentation vb3 = presentation("vbn", 3);
  CHECK(vb3.generators.size() == 4);
  CHECK(vb3.relators.size() == 5);
  const Presentation vb2 = presentation("vbn", 2);
  CHECK(vb2.generators.size() == 2);
  CHECK(vb2.relators.size() == 1);

  const Presentation vp2 = presentation("vpn", 2);
  CHECK(vp2.generators.size() == 2);
  CHECK(vp2.relators.size() == 0);
  const Presentation vp3 = presentation("vpn", 3);
  CHECK(vp3.generators.size() == 6);
  CHECK(vp3.relators.size() == 6);
  const Presentation vp4 = presentation("vpn", 4);
  CHECK(vp4.generators.size() == 12);
  CHECK(vp4.relators.size() == 36);

  const Presentation h3 = presentation("hn", 3);
  CHECK(h3.generators.size() == 6);
  CHECK(h3.relators.size() == 6);

  const Presentation y2 = presentation("yn", 2);
  CHECK(y2.generators.size() == 4);
  CHECK(y2.relators.size() == 2);
  const Presentation y3 = presentation("yn", 3);
  CHECK(y3.generators.size() == 12);
  CHECK(y3.relators.size() == 38);

  CHECK(code_of([] { presentation("xyz", 3); }) == ErrorCode::UnsupportedName);
  CHECK(code_of([] { presentation("bn", 1); }) == ErrorCode::BadN);
}

TEST_CASE("substitution into the strand-pair group maps the distinguished words") {
  // b/c keep their indices, d swaps its pair.
  const Word img = tau_yn({make_letter(Fam::b, 1, 3, 1), make_letter(Fam::c, 2, 4, -1),
                           make_letter(Fam::d, 4, 1, 1)},
                          2);
  REQUIRE(img.size() == 3);
  CHECK(img[0] == lam(1, 3));
  CHECK(img[1] == lam(2, 4, -1));
  CHECK(img[2] == lam(1, 4));

  for (int i = 1; i <= 2; ++i)
    for (int j = i + 1; j <= 3; ++j) CHECK(tau_yn(lambda_y3(i, j), 3) == n_element(i, j));

  CHECK(code_of([] { tau_yn({make_letter(Fam::sigma, 1, 0, 1)}, 3); }) == ErrorCode::BadSymbol);
  CHECK(code_of([] { tau_yn({make_letter(Fam::b, 1, 7, 1)}, 3); }) == ErrorCode::BadIndex);
}

TEST_CASE("positive projection folds reversed letters") {
  for (int i = 1; i <= 2; ++i)
    for (int j = i + 1; j <= 3; ++j) CHECK(plus_projection(n_element(i, j)) == m_element(i, j));
  // lambda(3,2)^-1 -> lambda(2,3); lambda(3,2) -> lambda(2,3)^-1.
  CHECK(plus_projection({lam(3, 2, -1)}) == Word{lam(2, 3)});
  CHECK(plus_projection({lam(3, 2)}) == Word{lam(2, 3, -1)});
  CHECK(plus_projection({lam(2, 3)}) == Word{lam(2, 3)});
  // The projection free-reduces its output.
  CHECK(plus_projection({lam(3, 2, -1), lam(2, 3, -1)}).empty());
  CHECK(code_of([] { plus_projection({sig(1)}); }) == ErrorCode::BadSymbol);
}

TEST_CASE("the doubled generators expand to the reduced four-letter words") {
  // Doubling the three 3-strand generators lands on six strands.
  const struct {
    int i, j;
    std::vector<std::array<int, 3>> expect;
  } table[] = {
      {1, 2, {{1, 4, 1}, {1, 3, 1}, {2, 4, 1}, {2, 3, 1}}},
      {1, 3, {{1, 6, 1}, {1, 5, 1}, {2, 6, 1}, {2, 5, 1}}},
      {2, 3, {{3, 6, 1}, {3, 5, 1}, {4, 6, 1}, {4, 5, 1}}},
  };
  for (const auto& row : table) {
    const Word raw = doubling_vp({lam(row.i, row.j)}, 3, 1);
    const Word norm = free_reduce(normalize_commuting(raw));
    CHECK(norm == parse_lambdas(row.expect));
    // The normalized doubled word is exactly the positive strand-pair word.
    CHECK(norm == m_element(row.i, row.j));
  }
  // Doubling twice lands on twelve strands and stays a positive word.
  const Word twice = doubling_vp(doubling_vp({lam(1, 2)}, 3, 1), 6, 1);
  CHECK(twice.size() == 16);
  for (const Letter& l : twice) {
    CHECK(l.e == 1);
    CHECK(l.j <= 12);
  }
  CHECK(code_of([] { doubling_vp({lam(1, 4)}, 3, 1); }) == ErrorCode::BadIndex);
}

TEST_CASE("doubling a braid generator gives the two-strand cabling word") {
  const Word out = doubling_bn({sig(1)}, 3);
  REQUIRE(out.size() == 4);
  CHECK(out[0] == sig(2));
  CHECK(out[1] == sig(3));
  CHECK(out[2] == sig(1));
  CHECK(out[3] == sig(2));
  // Inverse letters expand to the reversed inverse block.
  const Word inv = doubling_bn({sig(1, -1)}, 3);
  REQUIRE(inv.size() == 4);
  CHECK(inv[0] == sig(2, -1));
  CHECK(inv[1] == sig(1, -1));
  CHECK(inv[2] == sig(3, -1));
  CHECK(inv[3] == sig(2, -1));
  CHECK(code_of([] { doubling_bn({make_letter(Fam::rho, 1, 0, 1)}, 3); }) ==
        ErrorCode::BadSymbol);
}

TEST_CASE("degeneracy letter rules") {
  // Doubling strand 1 inside lambda(1,2): the new strand pair acts jointly.
  CHECK(degeneracy_vp({lam(1, 2)}, 0, 2) == parse_lambdas({{1, 3, 1}, {2, 3, 1}}));
  // Doubling strand 2: the target strand splits.
  CHECK(degeneracy_vp({lam(1, 2)}, 1, 2) == parse_lambdas({{1, 3, 1}, {1, 2, 1}}));
  // A strand strictly between the indices only shifts the upper one.
  CHECK(degeneracy_vp({lam(1, 3)}, 1, 3) == parse_lambdas({{1, 4, 1}}));
  // A strand above both leaves the letter alone.
  CHECK(degeneracy_vp({lam(1, 2)}, 2, 3) == parse_lambdas({{1, 2, 1}}));
  // Reversed pairs mirror the rule.
  CHECK(degeneracy_vp({lam(2, 1)}, 0, 2) == parse_lambdas({{3, 2, 1}, {3, 1, 1}}));
  // Inverse letters get the inverted expansion in reverse order.
  CHECK(degeneracy_vp({lam(1, 2, -1)}, 0, 2) ==
        parse_lambdas({{2, 3, -1}, {1, 3, -1}}));
  CHECK(code_of([] { degeneracy_vp({lam(1, 2)}, 2, 2); }) == ErrorCode::BadIndex);
  CHECK(code_of([] { degeneracy_vp({sig(1)}, 0, 2); }) == ErrorCode::BadSymbol);
}

TEST_CASE("face letter rules") {
  // Deleting a strand kills every letter that touches it.
  CHECK(face_vp({lam(1, 2)}, 0, 3).empty());
  // Untouched letters shift down across the deleted strand.
  CHECK(face_vp({lam(2, 3)}, 0, 3) == parse_lambdas({{1, 2, 1}}));
  CHECK(face_vp({lam(1, 3)}, 1, 3) == parse_lambdas({{1, 2, 1}}));
  CHECK(face_vp({lam(1, 2)}, 2, 3) == parse_lambdas({{1, 2, 1}}));
  // Exponents survive.
  CHECK(face_vp({lam(3, 1, -1)}, 1, 3) == parse_lambdas({{2, 1, -1}}));
  CHECK(code_of([] { face_vp({lam(1, 2)}, 3, 3); }) == ErrorCode::BadIndex);
}

TEST_CASE("every stated relator uses only declared generators") {
  for (const char* name : {"bn", "vbn", "vpn", "hn", "yn"})
    for (int n = 2; n <= 4; ++n) {
      const Presentation p = presentation(name, n);
      for (const Word& rel : p.relators)
        for (const Letter& l : rel) {
          bool declared = false;
          for (const Letter& g : p.generators)
            declared = declared || (g.fam == l.fam && g.i == l.i && g.j == l.j);
          CHECK(declared);
        }
    }
}
