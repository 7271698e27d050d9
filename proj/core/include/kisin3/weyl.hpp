#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kisin3/smallperm.hpp"

namespace kisin3::weyl {

// An element of the extended affine Weyl group of GL3, realized as a 3x3
// monomial matrix over F((v)): the matrix has v^{exps[m]} in row perm(m),
// column m, and zeros elsewhere. Composition is matrix multiplication.
struct AffineWeylElt {
  Perm3 perm;
  std::array<int, 3> exps{0, 0, 0};

  static AffineWeylElt identity() { return {}; }

  // Generators of the affine Weyl group of SL3 and the rotation delta,
  // realized as the standard monomial matrices.
  static AffineWeylElt alpha() { return {Perm3::transposition(0, 1), {0, 0, 0}}; }
  static AffineWeylElt beta() { return {Perm3::transposition(1, 2), {0, 0, 0}}; }
  static AffineWeylElt gamma() { return {Perm3::transposition(0, 2), {1, 0, -1}}; }
  static AffineWeylElt delta() { return {Perm3::cycle012(), {0, 0, -1}}; }
  // Translation by the cocharacter (x,y,z): diag(v^x, v^y, v^z).
  static AffineWeylElt translation(int x, int y, int z) {
    return {Perm3::identity(), {x, y, z}};
  }
  static AffineWeylElt v_times_identity() { return translation(1, 1, 1); }

  friend AffineWeylElt operator*(const AffineWeylElt& x, const AffineWeylElt& y) {
    AffineWeylElt r;
    r.perm = x.perm * y.perm;
    for (int k = 0; k < 3; ++k) r.exps[k] = x.exps[y.perm(k)] + y.exps[k];
    return r;
  }
  AffineWeylElt inverse() const {
    AffineWeylElt r;
    r.perm = perm.inverse();
    for (int k = 0; k < 3; ++k) r.exps[k] = -exps[r.perm(k)];
    return r;
  }
  // v-adic valuation of the determinant.
  int det_valuation() const { return exps[0] + exps[1] + exps[2]; }

  bool operator==(const AffineWeylElt&) const = default;
  auto operator<=>(const AffineWeylElt&) const = default;

  std::string str() const;
};

// Parses a word in the letters a/b/g (or the names alpha/beta/gamma separated
// by non-letters) and multiplies left to right. "id" gives the identity.
AffineWeylElt parse_word(const std::string& word);

// delta * w * delta^{-1}
AffineWeylElt delta_conjugate(const AffineWeylElt& w);

// Coxeter length of v^{-1} w in the affine Weyl group of SL3 (generated by
// alpha, beta, gamma). Requires w in v * W^0, i.e. det valuation 3.
int length(const AffineWeylElt& w);

// One reduced word for v^{-1} w, as a string over {a,b,g}. Deterministic:
// breadth-first search from the identity with the generator order a < b < g.
std::string reduced_word(const AffineWeylElt& w);

// All reduced words of v^{-1} w (used by tests as a brute-force oracle).
std::vector<std::string> all_reduced_words(const AffineWeylElt& w);

// Bruhat order on v * W^0: x <= y iff v^{-1}x <= v^{-1}y. Subword criterion
// against a fixed reduced word of y.
bool bruhat_leq(const AffineWeylElt& x, const AffineWeylElt& y);

struct AdmissibleSet {
  std::vector<AffineWeylElt> elements;            // size 25
  std::map<AffineWeylElt, int> lengths;           // element -> 0..4
  std::map<AffineWeylElt, int> orbit_id;          // element -> 0..8 (delta orbits)
  std::map<AffineWeylElt, std::string> word_of;   // canonical reduced word
  std::map<std::string, AffineWeylElt> elt_of;    // inverse of word_of

  bool contains(const AffineWeylElt& w) const {
    return lengths.find(w) != lengths.end();
  }
};

// The (2,1,0)-admissible set: the 25 elements of v*W^0 below some t_{s(2,1,0)}.
const AdmissibleSet& adm_210();

// The six translations t_{s(2,1,0)}, s in S3.
std::vector<AffineWeylElt> extremal_translations();

// Length-3 elements split into shadow (delta-orbit of alpha beta alpha) and
// ordinary ones.
bool is_shadow(const AffineWeylElt& w);

}  // namespace kisin3::weyl
