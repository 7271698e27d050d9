#include "doctest.h"
#include "kisin3/tametype.hpp"

using namespace kisin3;
using namespace kisin3::tame;

TEST_CASE("genericity level") {
  CHECK(genericity_level(TameType(101, 1, 1, {{{30}, {20}, {10}}})) == 10);
  CHECK(genericity_level(TameType(101, 1, 1, {{{5}, {4}, {3}}})) == 1);
  CHECK(genericity_level(TameType(7, 1, 1, {{{4}, {2}, {0}}})) == 2);
  CHECK(genericity_level(TameType(101, 1, 1, {{{5}, {5}, {3}}})) == 0);
}

TEST_CASE("orientation niveau 1") {
  TameType t(101, 1, 1, {{{10}, {30}, {20}}});
  auto o = orientation(t);
  REQUIRE(o.s.size() == 1);
  // sorted descending: a_{s(1)} = 30 (k=1), then 20 (k=2), then 10 (k=0)
  CHECK(o.s[0].p == std::array<int, 3>{1, 2, 0});

  TameType dom(101, 1, 1, {{{30}, {20}, {10}}});
  CHECK(orientation(dom).s[0] == Perm3::identity());
}

TEST_CASE("orientation rejects non-generic") {
  TameType t(101, 1, 1, {{{5}, {4}, {3}}});
  CHECK_THROWS(orientation(t));
}

TEST_CASE("base change niveau 3, f = 1") {
  TameType t(101, 1, 3, {{{30}, {20}, {10}}});
  TameType bc = base_change(t);
  CHECK(bc.f == 3);
  CHECK(bc.niveau == 1);
  // a'_1 realizes omega_3^{-(a + p b + p^2 c)}
  CHECK(bc.a[0] == std::vector<int>{30, 20, 10});
  CHECK(bc.a[1] == std::vector<int>{20, 10, 30});
  CHECK(bc.a[2] == std::vector<int>{10, 30, 20});
  CHECK(genericity_level(bc) == genericity_level(t));

  auto direct = orientation(bc);
  auto predicted = base_change_orientation(t);
  REQUIRE(direct.s.size() == predicted.s.size());
  for (size_t j = 0; j < direct.s.size(); ++j) CHECK(direct.s[j] == predicted.s[j]);
}

TEST_CASE("base change niveau 2, f = 1") {
  TameType t(101, 1, 2, {{{40}, {25}, {10}}});
  TameType bc = base_change(t);
  CHECK(bc.f == 2);
  CHECK(bc.a[0] == std::vector<int>{40, 40});
  CHECK(bc.a[1] == std::vector<int>{25, 10});
  CHECK(bc.a[2] == std::vector<int>{10, 25});
  auto direct = orientation(bc);
  auto predicted = base_change_orientation(t);
  for (size_t j = 0; j < direct.s.size(); ++j) CHECK(direct.s[j] == predicted.s[j]);
}

TEST_CASE("base change identity for niveau 1") {
  TameType t(101, 1, 1, {{{30}, {20}, {10}}});
  TameType bc = base_change(t);
  CHECK(bc.f == 1);
  CHECK(bc.a == t.a);
}

TEST_CASE("relabeling transforms the orientation") {
  // permuting (a_1,a_2,a_3) by sigma sends s_j to s_j o sigma^{-1}
  TameType t(101, 1, 1, {{{10}, {30}, {20}}});
  TameType u(101, 1, 1, {{{30}, {20}, {10}}});  // relabeled by sigma: 0->?,...
  auto st = orientation(t).s[0], su = orientation(u).s[0];
  // sorted upper values agree
  std::array<Int, 3> vt{t.a_upper(st(0), 0), t.a_upper(st(1), 0), t.a_upper(st(2), 0)};
  std::array<Int, 3> vu{u.a_upper(su(0), 0), u.a_upper(su(1), 0), u.a_upper(su(2), 0)};
  CHECK(vt == vu);
}
