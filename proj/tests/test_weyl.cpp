#include "doctest.h"
#include "kisin3/weyl.hpp"

#include <map>
#include <set>

using namespace kisin3;
using namespace kisin3::weyl;

namespace {
AffineWeylElt w(const std::string& word) {
  return AffineWeylElt::v_times_identity() * parse_word(word);
}
}  // namespace

TEST_CASE("generator relations") {
  auto a = AffineWeylElt::alpha(), b = AffineWeylElt::beta(), g = AffineWeylElt::gamma(),
       d = AffineWeylElt::delta(), id = AffineWeylElt::identity();
  CHECK(a * a == id);
  CHECK(b * b == id);
  CHECK(g * g == id);
  CHECK(d * d * d == AffineWeylElt::translation(-1, -1, -1));  // delta^3 = v^{-1}
  CHECK(d * a * d.inverse() == b);
  CHECK(d * b * d.inverse() == g);
  CHECK(d * g * d.inverse() == a);
  CHECK(id * a == a);
  CHECK(a.inverse() * a == id);
  CHECK(g.inverse() * g == id);
}

TEST_CASE("multiplication is matrix composition, associative on samples") {
  auto a = AffineWeylElt::alpha(), g = AffineWeylElt::gamma(), d = AffineWeylElt::delta();
  CHECK((a * g) * d == a * (g * d));
  CHECK((g * d) * g == g * (d * g));
  // det valuation adds
  CHECK((a * g).det_valuation() == a.det_valuation() + g.det_valuation());
}

TEST_CASE("lengths of table words") {
  CHECK(length(w("abag")) == 4);
  CHECK(length(w("aba")) == 3);
  CHECK(length(w("id")) == 0);
  CHECK(length(w("a")) == 1);
  CHECK(length(w("ga")) == 2);
  // t_{(2,1,0)} = v * alpha beta alpha gamma
  CHECK(w("abag") == AffineWeylElt::translation(2, 1, 0));
}

TEST_CASE("bruhat order basics") {
  CHECK(bruhat_leq(w("a"), w("a")));
  CHECK(bruhat_leq(w("a"), w("ab")));
  CHECK(!bruhat_leq(AffineWeylElt::translation(2, 1, 0), AffineWeylElt::translation(0, 1, 2)));
  CHECK(bruhat_leq(w("id"), w("abag")));
}

TEST_CASE("bruhat_leq agrees with exhaustive subword oracle on Adm(2,1,0)") {
  const auto& adm = adm_210();
  // Oracle: x <= y iff some reduced word of y has a subword multiplying to x.
  auto oracle = [&](const AffineWeylElt& x, const AffineWeylElt& y) {
    auto vinv = AffineWeylElt::v_times_identity().inverse();
    AffineWeylElt x0 = vinv * x;
    for (const auto& word : all_reduced_words(y)) {
      int n = static_cast<int>(word.size());
      for (int mask = 0; mask < (1 << n); ++mask) {
        AffineWeylElt prod = AffineWeylElt::identity();
        for (int i = 0; i < n; ++i)
          if (mask >> i & 1) prod = prod * parse_word(std::string(1, word[i]));
        if (prod == x0) return true;
      }
    }
    return false;
  };
  int checked = 0;
  for (const auto& x : adm.elements)
    for (const auto& y : adm.elements) {
      CHECK(bruhat_leq(x, y) == oracle(x, y));
      ++checked;
    }
  CHECK(checked == 625);
}

TEST_CASE("Adm(2,1,0) structure") {
  const auto& adm = adm_210();
  CHECK(adm.elements.size() == 25);

  std::map<int, int> by_len;
  for (const auto& e : adm.elements) ++by_len[adm.lengths.at(e)];
  CHECK(by_len[4] == 6);
  CHECK(by_len[3] == 9);
  CHECK(by_len[2] == 6);
  CHECK(by_len[1] == 3);
  CHECK(by_len[0] == 1);

  int shadows = 0, ordinary3 = 0;
  for (const auto& e : adm.elements)
    if (adm.lengths.at(e) == 3) (is_shadow(e) ? shadows : ordinary3)++;
  CHECK(shadows == 3);
  CHECK(ordinary3 == 6);

  // the six length-4 members are the extremal translations
  std::set<AffineWeylElt> len4, extremal;
  for (const auto& e : adm.elements)
    if (adm.lengths.at(e) == 4) len4.insert(e);
  for (const auto& t : extremal_translations()) extremal.insert(t);
  CHECK(len4 == extremal);

  // closed under delta conjugation with 9 orbits
  std::set<int> orbits;
  for (const auto& e : adm.elements) {
    CHECK(adm.contains(delta_conjugate(e)));
    orbits.insert(adm.orbit_id.at(e));
  }
  CHECK(orbits.size() == 9);

  CHECK(adm.contains(w("a")));
}

TEST_CASE("table 1 words all land in Adm(2,1,0) and exhaust it") {
  const char* words[] = {"abag", "bgag", "bgba", "gaba", "agab", "abgb",  // length 4
                         "gab",  "agb",  "abg",  "bag",  "bga",  "gba",   // ordinary
                         "gag",  "aba",  "bgb",                           // shadow
                         "ga",   "ag",   "ba",   "ab",   "bg",   "gb",    // length 2
                         "a",    "b",    "g",    "id"};
  const auto& adm = adm_210();
  std::set<AffineWeylElt> seen;
  for (const char* word : words) {
    auto e = w(word);
    CHECK(adm.contains(e));
    seen.insert(e);
  }
  CHECK(seen.size() == 25);
}

TEST_CASE("delta conjugation of shadow words") {
  CHECK(delta_conjugate(w("aba")) == w("bgb"));
  CHECK(delta_conjugate(w("id")) == w("id"));
}

TEST_CASE("length subadditive on samples") {
  auto xs = {w("a"), w("ab"), w("aba"), w("gag")};
  auto vinv = AffineWeylElt::v_times_identity().inverse();
  for (const auto& x : xs)
    for (const auto& y : xs) {
      AffineWeylElt prod = AffineWeylElt::v_times_identity() * (vinv * x) * (vinv * y);
      CHECK(length(prod) <= length(x) + length(y));
    }
}
