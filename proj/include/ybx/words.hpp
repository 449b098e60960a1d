#pragma once

#include <string>
#include <vector>

namespace ybx {

// Generator families: sigma/rho are single-indexed (strand i, acting on strands
// i and i+1); lambda/x/b/c/d are pair-indexed; p is the plain strand swap used
// in conjugation words.
enum class Fam { sigma, rho, lambda, x, b, c, d, p };

std::string fam_name(Fam fam);
// Accepts the family names above; throws BadSymbol otherwise.
Fam fam_from_name(const std::string& name);

struct Letter {
  Fam fam;
  int i = 0;
  int j = 0;  // 0 for single-indexed families
  int e = 1;  // +1 or -1

  bool operator==(const Letter& other) const {
    return fam == other.fam && i == other.i && j == other.j && e == other.e;
  }
};

// Validated constructor: index positivity, arity per family, pair distinctness,
// parity shape for b/c/d (b: odd<odd, c: even<even, d: even,odd on different
// strands), exponent in {+1,-1}.  Throws BadIndex / BadSymbol.
Letter make_letter(Fam fam, int i, int j, int e);

using Word = std::vector<Letter>;

Word inverse_word(const Word& w);
// Cancel adjacent inverse pairs to a fixed point.
Word free_reduce(const Word& w);
// Canonical order for letters on disjoint strand sets: adjacent letters whose
// strand supports are disjoint are sorted by (i, j, family, exponent).
Word normalize_commuting(const Word& w);

std::string letter_string(const Letter& l);
std::string word_string(const Word& w);

struct Presentation {
  std::string name;
  int n = 0;
  std::vector<Letter> generators;  // exponent +1
  std::vector<Word> relators;      // each evaluates to the identity
};

// name in {bn, vbn, vpn, hn, yn}; n >= 2.  Throws UnsupportedName / BadN.
Presentation presentation(const std::string& name, int n);

// Generator-wise substitution b_{ij} -> lambda_{ij}, c_{ij} -> lambda_{ij},
// d_{ij} -> lambda_{ji} into the word group on 2n strands.  Throws BadSymbol
// for non-Yn letters, BadIndex for indices outside 1..2n.
Word tau_yn(const Word& w, int n);

// The distinguished words on six strands, for strand pairs
// (i,j) in {(1,2),(1,3),(2,3)}:
//   lambda_y3: d(2j,2i-1) b(2i-1,2j-1) c(2i,2j) d(2i,2j-1)^-1
//   n_element: l(2i-1,2j) l(2i-1,2j-1) l(2i,2j) l(2j-1,2i)^-1
//   m_element: l(2i-1,2j) l(2i-1,2j-1) l(2i,2j) l(2i,2j-1)
Word lambda_y3(int i, int j);
Word n_element(int i, int j);
Word m_element(int i, int j);

// lambda_{ji} with j > i becomes lambda_{ij}^-1; result is free-reduced.
// Throws BadSymbol on non-lambda letters.
Word plus_projection(const Word& w);

// Degeneracy s_i (0-based, doubling strand i+1): word map into n+1 strands.
Word degeneracy_vp(const Word& w, int i, int n);
// Face d_i (0-based, deleting strand i+1): letters touching the strand vanish,
// higher indices shift down.
Word face_vp(const Word& w, int i, int n);
// Composite s_0^k s_1^k ... s_{n-1}^k, rightmost factor applied first.
Word doubling_vp(const Word& w, int n, int k);
// sigma_i -> sigma_{2i} sigma_{2i+1} sigma_{2i-1} sigma_{2i} on braid words.
Word doubling_bn(const Word& w, int n);

}  // namespace ybx
