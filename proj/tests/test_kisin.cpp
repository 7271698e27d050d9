#include "doctest.h"
#include "kisin3/kisin.hpp"

using namespace kisin3;
using namespace kisin3::kisin;
using shapes::Params;

TEST_CASE("height/determinant conditions hold for all nine representatives") {
  for (const auto& par : {Params::first(), Params::second()}) {
    for (const auto& word : shapes::representative_words()) {
      auto sh = shapes::make_shape(word, par);
      auto rep = verify_height_det(sh, par);
      for (const auto& f : rep.failures) MESSAGE(f);
      CHECK(rep.pass);
    }
  }
}

TEST_CASE("templates reduce to the tabulated mod-p shapes with correct bounds") {
  auto par = Params::first();
  for (const auto& word : shapes::representative_words()) {
    auto sh = shapes::make_shape(word, par);
    auto rep = verify_template_shape(sh, par);
    for (const auto& f : rep.failures) MESSAGE(f);
    CHECK(rep.pass);
  }
}

TEST_CASE("a wrong relation ideal is detected") {
  auto par = Params::first();
  auto sh = shapes::make_shape("aba", par);
  // corrupt a height relation with a spurious term
  sh.relations[1] = sh.relations[1] + sh.vp("c32") * sh.vp("c32");
  auto rep = verify_height_det(sh, par);
  CHECK(!rep.pass);
}

TEST_CASE("sample eliminations of the alpha-beta-alpha cell") {
  // The pre-saturation template with extra coordinates in the middle row:
  // minor (1,3) forces the extra (2,2) coordinate to vanish and minor (1,2)
  // the extra (2,3) one.
  auto par = Params::first();
  Rat p(par.p);
  using shapes::QPoly;
  using series::VMatrix;
  using series::VPoly;
  // variables: c11 c12 c13 c13s t22 c22s t23 c23 c31s c32 c33 c33p
  int nv = 12;
  auto X = [&](int i) { return QPoly::variable(nv, i, Rat(1)); };
  VPoly P = VPoly::linear_vp(nv, p);
  VMatrix A = VMatrix::zero(nv);
  A.m[0][0] = VPoly::constant(X(0));
  A.m[0][1] = VPoly::constant(X(1));
  A.m[0][2] = VPoly::constant(X(2)) + P * VPoly::constant(X(3));
  A.m[1][1] = VPoly::constant(X(4)) + P * VPoly::constant(X(5));
  A.m[1][2] = VPoly::constant(X(6)) + P * VPoly::constant(X(7));
  A.m[2][0] = VPoly::monomial(X(8), 1);
  A.m[2][1] = VPoly::monomial(X(9), 1);
  A.m[2][2] = VPoly::constant(X(10)) + P * VPoly::constant(X(11));

  auto minor = [&](int i, int k) {
    int r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (k + 1) % 3, c1 = (k + 2) % 3;
    if (r0 > r1) std::swap(r0, r1);
    if (c0 > c1) std::swap(c0, c1);
    return A.m[r0][c0] * A.m[r1][c1] - A.m[r0][c1] * A.m[r1][c0];
  };
  // (1,3) minor: v-content removed, at v=-p equals -c31s * t22
  QPoly m13 = minor(0, 2).remove_v_content().eval(-p);
  CHECK(m13 == -(X(8) * X(4)));
  // (1,2) minor gives -c31s * t23
  QPoly m12 = minor(0, 1).remove_v_content().eval(-p);
  CHECK(m12 == -(X(8) * X(6)));
  // with t22 = t23 = 0, the remaining (2,k) minors give the tabulated
  // relations c12 c33 = -p c32 c13, c11 c33 = -p c31s c13, c11 c32 = c31s c12
  std::map<int, QPoly> kill{{4, QPoly(nv)}, {6, QPoly(nv)}};
  auto at = [&](int i, int k) {
    return minor(i, k).substitute(kill).remove_v_content().eval(-p);
  };
  CHECK(at(1, 0) == X(1) * X(10) + X(9).scaled(Rat(par.p)) * X(2));
  CHECK(at(1, 1) == X(0) * X(10) + X(8).scaled(Rat(par.p)) * X(2));
  CHECK(at(1, 2) == X(0) * X(9) - X(8) * X(1));
}

TEST_CASE("cyclic symmetry of monomial representatives") {
  for (const auto& e : weyl::adm_210().elements) {
    CHECK(cyclic_symmetry_holds(e, 5));
    CHECK(cyclic_symmetry_holds(e, 7));
  }
}

TEST_CASE("kisin variety uniqueness oracle") {
  auto aba = weyl::AffineWeylElt::v_times_identity() * weyl::parse_word("aba");
  CHECK(kisin_variety_uniqueness_check(aba, 7, 100, 99));
  CHECK(kisin_variety_uniqueness_check(weyl::AffineWeylElt::v_times_identity() *
                                           weyl::parse_word("id"),
                                       7, 100, 17));
}
