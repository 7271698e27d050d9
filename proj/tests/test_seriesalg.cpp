#include "doctest.h"
#include "kisin3/useries.hpp"
#include "kisin3/vpoly.hpp"

#include <random>

using namespace kisin3;
using namespace kisin3::series;
using poly::QPoly;

namespace {
QPoly qc(long c) { return QPoly::constant(2, Rat(c)); }
QPoly qv(int i) { return QPoly::variable(2, i, Rat(1)); }

VPoly rand_vpoly(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  std::vector<QPoly> c;
  for (int i = 0; i < 3; ++i) c.push_back(qc(d(rng)) + qv(0).scaled(Rat(d(rng))));
  return VPoly::from_coeff(c);
}
}  // namespace

TEST_CASE("vpoly arithmetic and division by v+p") {
  Rat p(7);
  VPoly P = VPoly::linear_vp(2, p);
  VPoly f = P * P * VPoly::constant(qv(0)) + VPoly::monomial(qv(1), 1);
  // f(-p) = -p * coeff, division drops it
  QPoly at = f.eval(-p);
  CHECK(at == qv(1).scaled(-p));
  VPoly q = f.div_exact_vp(p);
  CHECK(P * q + VPoly::constant(at) == f);

  // exact case: P^2 x / (v+p) = P x
  VPoly g = P * P * VPoly::constant(qv(0));
  CHECK(g.div_exact_vp(p) == P * VPoly::constant(qv(0)));
  CHECK(!(P * VPoly::constant(qv(0))).is_zero());
}

TEST_CASE("adjugate identity for random vmatrices") {
  std::mt19937 rng(42);
  for (int t = 0; t < 5; ++t) {
    VMatrix M;
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k) M.m[i][k] = rand_vpoly(rng);
    CHECK(adjugate_identity_holds(M));
  }
}

TEST_CASE("vpoly derivative and content") {
  VPoly f = VPoly::monomial(qc(3), 2) + VPoly::monomial(qc(5), 4);
  VPoly df = f.derivative();
  CHECK(df == VPoly::monomial(qc(6), 1) + VPoly::monomial(qc(20), 3));
  CHECK(f.v_content() == 2);
  CHECK(f.remove_v_content() == VPoly::constant(qc(3)) + VPoly::monomial(qc(5), 2));
}

TEST_CASE("useries basics") {
  int T = 30;
  USeries one(T, Rat(1));
  USeries u = USeries::monomial(T, 1, Rat(1));
  USeries f = one + u;
  USeries finv = f.inverse();
  CHECK((f * finv - one).is_zero());
  CHECK((f.theta() - u).is_zero());

  // frobenius sends u to u^p
  USeries fp = f.frobenius(7);
  CHECK(fp.c[0] == 1);
  CHECK(fp.c[7] == 1);
  CHECK(fp.c[1] == 0);
}

TEST_CASE("lambda truncation") {
  long p = 7;
  int e = 6, T = 3 * e;
  USeries lam = lambda_truncated(p, e, T);
  CHECK(lam.c[0] == 1);          // constant term 1
  CHECK(lam.c[e] == Rat(1, p));  // coefficient of u^e
  CHECK(lam.c[1] == 0);
  // evaluating at u = 0 gives 1
  CHECK(lam.c[0] == Rat(1));
}

TEST_CASE("ad conjugation respects multiplication and inverts") {
  int T = 24;
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> d(-2, 2);
  Perm3 s = Perm3::cycle012();
  std::array<long, 3> exps{8, 5, 1};
  auto randmat = [&](int minval) {
    UMatrix M = UMatrix::zero(T);
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k)
        for (int deg = minval; deg < 14; ++deg) M.m[i][k].c[deg] = d(rng);
    return M;
  };
  UMatrix M = randmat(8), N = randmat(8);
  UMatrix lhs = ad_conjugate(M * N, s, exps);
  UMatrix rhs = ad_conjugate(M, s, exps) * ad_conjugate(N, s, exps);
  // agreement holds below trunc - max shift; beyond that the two sides see
  // different truncation tails
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k)
      for (int d = 0; d <= T - 8; ++d) CHECK(lhs.m[i][k].c[d] == rhs.m[i][k].c[d]);

  UMatrix back = ad_conjugate_inverse(ad_conjugate(M, s, exps), s, exps);
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) CHECK((back.m[i][k] - M.m[i][k]).is_zero());

  UMatrix id = UMatrix::identity(T);
  UMatrix adid = ad_conjugate(id, s, exps);
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) CHECK((adid.m[i][k] - id.m[i][k]).is_zero());
}

TEST_CASE("umatrix inverse") {
  int T = 16;
  UMatrix M = UMatrix::identity(T);
  M.m[0][1] = USeries::monomial(T, 2, Rat(3));
  M.m[1][2] = USeries::monomial(T, 1, Rat(1, 2));
  M.m[2][2] = USeries(T, Rat(5)) + USeries::monomial(T, 3, Rat(1));
  UMatrix I = M * M.inverse();
  UMatrix id = UMatrix::identity(T);
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) CHECK((I.m[i][k] - id.m[i][k]).is_zero());
}
