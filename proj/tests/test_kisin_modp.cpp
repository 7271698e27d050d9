#include "doctest.h"
#include "kisin3/fppoly.hpp"
#include "kisin3/weyl.hpp"

#include <random>

using namespace kisin3;
using namespace kisin3::modp;
using namespace kisin3::weyl;

namespace {
AffineWeylElt w(const std::string& word) {
  return AffineWeylElt::v_times_identity() * parse_word(word);
}
}  // namespace

TEST_CASE("double coset of the identity and of plain shapes") {
  long p = 7;
  int T = 24;
  CHECK(double_coset_of(TMat::identity(p, T)) == AffineWeylElt::identity());
  for (const char* word : {"aba", "abag", "ba", "a", "id", "gag", "bgag"}) {
    AffineWeylElt e = w(word);
    CHECK(double_coset_of(weyl_matrix(e, p, T)) == e);
  }
}

TEST_CASE("double coset recovery under random Iwahori sandwiches") {
  int T = 24;
  std::mt19937 rng(2024);
  for (long p : {5L, 7L}) {
    for (const auto& e : adm_210().elements) {
      for (int trial = 0; trial < 8; ++trial) {
        TMat M = random_iwahori(rng, p, T, 3) * weyl_matrix(e, p, T) *
                 random_iwahori(rng, p, T, 3);
        CHECK(double_coset_of(M) == e);
      }
    }
  }
}

TEST_CASE("double coset rejects singular input") {
  long p = 5;
  int T = 12;
  TMat M = TMat::zero(p, T);
  M.m[0][0] = TPoly::monomial(p, T, 1, 1);
  M.m[1][1] = TPoly::monomial(p, T, 0, 2);
  CHECK_THROWS(double_coset_of(M));
}

TEST_CASE("shape patterns match the tabulated monomial points") {
  long p = 7;
  int T = 16;
  for (const auto& e : adm_210().elements) {
    ShapePattern sp = shape_pattern(e);
    TMat mono = weyl_matrix(e, p, T);
    CHECK(sp.matches(mono));
    // pivot positions are the nonzero entries of the monomial matrix
    for (int k = 0; k < 3; ++k) CHECK(sp.pivot[e.perm(k)][k]);
  }
}

TEST_CASE("canonical form is a fixed point on pattern representatives") {
  long p = 7;
  int T = 20;
  std::mt19937 rng(55);
  std::uniform_int_distribution<long> unit(1, p - 1), any(0, p - 1);
  for (const char* word : {"aba", "ba", "abag", "a", "id", "abg"}) {
    AffineWeylElt e = w(word);
    ShapePattern sp = shape_pattern(e);
    // random matrix supported on the pattern with unit pivots
    TMat A = TMat::zero(p, T);
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k)
        for (int d : sp.allowed[i][k]) {
          long c = sp.pivot[i][k] && d == sp.allowed[i][k].front() ? unit(rng) : any(rng);
          A.m[i][k] = A.m[i][k] + TPoly::monomial(p, T, d, c);
        }
    CHECK(canonical_form(A, e) == A);

    // multiplying by a random pro-v Iwahori element on the left must recover A
    TMat J = random_iwahori1(rng, p, T, 4);
    CHECK(canonical_form(J * A, e) == A);
  }
}

TEST_CASE("canonical form of a full double coset element matches the pattern") {
  long p = 5;
  int T = 20;
  std::mt19937 rng(77);
  for (const char* word : {"aba", "ba", "bag", "gag", "bgb"}) {
    AffineWeylElt e = w(word);
    TMat M = random_iwahori(rng, p, T, 2) * weyl_matrix(e, p, T) *
             random_iwahori(rng, p, T, 2);
    TMat C = canonical_form(M, e);
    CHECK(shape_pattern(e).matches(C));
  }
}

TEST_CASE("canonical form detects a shape mismatch") {
  long p = 5;
  int T = 16;
  CHECK_THROWS(canonical_form(weyl_matrix(w("aba"), p, T), w("ba")));
}
