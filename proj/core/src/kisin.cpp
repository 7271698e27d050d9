#include "kisin3/kisin.hpp"

#include <sstream>

namespace kisin3::kisin {

using poly::QIdeal;
using poly::QPoly;
using series::VMatrix;
using series::VPoly;

namespace {

VPoly minor2(const VMatrix& M, int i, int k) {
  int r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (k + 1) % 3, c1 = (k + 2) % 3;
  if (r0 > r1) std::swap(r0, r1);
  if (c0 > c1) std::swap(c0, c1);
  return M.m[r0][c0] * M.m[r1][c1] - M.m[r0][c1] * M.m[r1][c0];
}

bool unit_residue(const QPoly& f, const ShapeTemplate& sh, long p) {
  for (unsigned seed : {11u, 23u}) {
    auto pt = sh.residue_point(seed, p);
    Rat val = f.eval(pt);
    if (residue_mod(val, Int(p)) == 0) return false;
  }
  return true;
}

}  // namespace

CheckReport verify_height_det(const ShapeTemplate& sh, const Params& par) {
  CheckReport rep;
  QIdeal I = sh.ideal();
  Rat p(par.p);
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      VPoly m = minor2(sh.universal, i, k).remove_v_content();
      QPoly r = m.eval(-p);
      if (!I.contains(r)) {
        std::ostringstream os;
        os << sh.word << ": minor (" << i + 1 << "," << k + 1
           << ") not in the ideal at v = -p";
        rep.fail(os.str());
      }
    }
  VPoly q = sh.universal.det();
  for (int t = 0; t < 3; ++t) {
    QPoly r = q.eval(-p);
    if (!I.contains(r)) {
      rep.fail(sh.word + ": det / P(v)^" + std::to_string(t) +
               " does not vanish at v = -p modulo the ideal");
      return rep;
    }
    q = q.div_exact_vp(p);
  }
  // q is now a canonical representative of det / P(v)^3 modulo the ideal;
  // its residue at the mod-m_R point is well defined without further
  // reduction (normal forms may carry p in denominators).
  if (q.degree() > 0) rep.fail(sh.word + ": det / P(v)^3 has positive v-degree");
  if (!unit_residue(q.at(0), sh, par.p))
    rep.fail(sh.word + ": det / P(v)^3 is not a unit");
  return rep;
}

CheckReport verify_template_shape(const ShapeTemplate& sh, const Params& par) {
  CheckReport rep;
  // degree bounds of the third column
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      const auto& b = sh.bounds[i][k];
      const VPoly& e = sh.universal.m[i][k];
      if (b.zero) {
        if (!e.is_zero()) rep.fail(sh.word + ": entry expected zero");
        continue;
      }
      if (e.degree() > b.max_deg) rep.fail(sh.word + ": degree bound violated");
      if (b.v_divisible && !e.is_zero() && e.v_content() < 1)
        rep.fail(sh.word + ": entry not divisible by v");
      if (b.unit) {
        if (e.degree() != b.max_deg || !unit_residue(e.at(b.max_deg), sh, par.p))
          rep.fail(sh.word + ": leading coefficient not a unit");
      }
    }
  // reduction modulo m_R matches the tabulated pattern
  modp::ShapePattern sp = modp::shape_pattern(sh.elt);
  auto pt = sh.residue_point(31u, par.p);
  int T = 8;
  modp::TMat bar = modp::TMat::zero(par.p, T);
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      const VPoly& e = sh.universal.m[i][k];
      for (int d = 0; d <= e.degree() && d < T; ++d) {
        Rat cv = e.at(d).eval(pt);
        Int r = residue_mod(cv, Int(par.p));
        bar.m[i][k] = bar.m[i][k] + modp::TPoly::monomial(par.p, T, d, r.get_si());
      }
    }
  if (!sp.matches(bar)) rep.fail(sh.word + ": residue matrix leaves the mod-p pattern");
  return rep;
}

namespace {
modp::TMat conj_by_delta(const modp::TMat& M, int times) {
  weyl::AffineWeylElt d = weyl::AffineWeylElt::delta();
  modp::TMat X = M;
  for (int t = 0; t < times; ++t) {
    Perm3 sdi = d.perm.inverse();
    modp::TMat Y = X;
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k)
        Y.m[i][k] = X.m[sdi(i)][sdi(k)].shifted(d.exps[sdi(i)] - d.exps[sdi(k)]);
    X = Y;
  }
  return X;
}
}  // namespace

bool cyclic_symmetry_holds(const weyl::AffineWeylElt& w, long q) {
  int T = 12;
  modp::TMat lhs = conj_by_delta(modp::weyl_matrix(w, q, T), 1);
  modp::TMat rhs = modp::weyl_matrix(weyl::delta_conjugate(w), q, T);
  return lhs == rhs;
}

namespace {

bool lattice_conditions(const modp::TMat& A) {
  int T = A.m[0][0].trunc;
  long p = A.m[0][0].p;
  // integral with v-divisible strict lower part
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k)
      if (i > k && !A.m[i][k].is_zero() && A.m[i][k].valuation() < 1) return false;
  // determinant valuation 3 and v^2 A^{-1} integral: check via adjugate
  auto mul = [](const modp::TPoly& a, const modp::TPoly& b) { return a * b; };
  modp::TPoly det(p, T);
  {
    modp::TPoly t1 = mul(A.m[1][1], A.m[2][2]) - mul(A.m[1][2], A.m[2][1]);
    modp::TPoly t2 = mul(A.m[1][0], A.m[2][2]) - mul(A.m[1][2], A.m[2][0]);
    modp::TPoly t3 = mul(A.m[1][0], A.m[2][1]) - mul(A.m[1][1], A.m[2][0]);
    det = mul(A.m[0][0], t1) - mul(A.m[0][1], t2) + mul(A.m[0][2], t3);
  }
  if (det.is_zero() || det.valuation() != 3) return false;
  // adjugate entries must have valuation >= 1 so that v^2 A^{-1} = v^2 adj/det
  // is integral (det has valuation exactly 3)
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      int r0 = (k + 1) % 3, r1 = (k + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      if (r0 > r1) std::swap(r0, r1);
      if (c0 > c1) std::swap(c0, c1);
      modp::TPoly mn = mul(A.m[r0][c0], A.m[r1][c1]) - mul(A.m[r0][c1], A.m[r1][c0]);
      if (!mn.is_zero() && mn.valuation() < 1) return false;
    }
  return true;
}

}  // namespace

bool kisin_variety_uniqueness_check(const weyl::AffineWeylElt& w, long q, int trials,
                                    unsigned seed) {
  int T = 30;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dmu(-1, 1), coin(0, 1);
  modp::TMat A = modp::weyl_matrix(w, q, T);
  for (int t = 0; t < trials; ++t) {
    // candidate basis change D = t_mu * J of the ambient etale phi-module
    std::array<int, 3> mu{0, 0, 0};
    bool nontrivial = coin(rng) == 1;
    if (nontrivial) {
      mu = {dmu(rng), dmu(rng), dmu(rng)};
      if (mu == std::array<int, 3>{0, 0, 0}) mu[0] = 1;
    }
    modp::TMat J = modp::random_iwahori(rng, q, T, 2);
    // A' = D^{-1} A phi(D), phi(v) = v^p; shifts of v^{mu} act entrywise.
    // First J-part: A1 = J^{-1} A phi(J). phi on truncated polys:
    auto phi = [&](const modp::TPoly& f) {
      modp::TPoly r(q, T);
      for (int i = 0; i < T; ++i) {
        if (!f.c[i]) continue;
        long dd = static_cast<long>(i) * q;
        if (dd < T) r.c[dd] = f.c[i];
      }
      return r;
    };
    // invert J by adjugate/det (det is a unit series)
    modp::TMat Jphi = modp::TMat::zero(q, T);
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k) Jphi.m[i][k] = phi(J.m[i][k]);
    // J inverse:
    modp::TMat adj = modp::TMat::zero(q, T);
    auto mul = [](const modp::TPoly& a, const modp::TPoly& b) { return a * b; };
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k) {
        int r0 = (k + 1) % 3, r1 = (k + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
        if (r0 > r1) std::swap(r0, r1);
        if (c0 > c1) std::swap(c0, c1);
        modp::TPoly mn = mul(J.m[r0][c0], J.m[r1][c1]) - mul(J.m[r0][c1], J.m[r1][c0]);
        adj.m[i][k] = ((i + k) % 2 == 0) ? mn : -mn;
      }
    modp::TPoly det =
        mul(J.m[0][0], adj.m[0][0]) + mul(J.m[1][0], adj.m[0][1]) + mul(J.m[2][0], adj.m[0][2]);
    modp::TPoly dinv = det.inverse_unit();
    modp::TMat Jinv = modp::TMat::zero(q, T);
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k) Jinv.m[i][k] = adj.m[i][k] * dinv;
    modp::TMat A1 = Jinv * A * Jphi;
    // now the torus part: A'[i][k] = v^{-mu_i + p mu_k} A1[i][k]; negative
    // exponents that hit nonzero coefficients mean the candidate is not a
    // lattice at all.
    bool valid = true;
    modp::TMat A2 = modp::TMat::zero(q, T);
    for (int i = 0; i < 3 && valid; ++i)
      for (int k = 0; k < 3 && valid; ++k) {
        long shift = -static_cast<long>(mu[i]) + q * mu[k];
        const modp::TPoly& e = A1.m[i][k];
        if (e.is_zero()) continue;
        if (shift < 0 && e.valuation() < -shift) {
          valid = false;
          break;
        }
        if (shift >= T) {
          A2.m[i][k] = modp::TPoly(q, T);
          continue;
        }
        A2.m[i][k] = e.shifted(static_cast<int>(shift));
      }
    if (!valid) continue;
    if (!lattice_conditions(A2)) continue;
    // a valid lattice was found; it is a *second* lattice exactly when the
    // torus part is nontrivial
    if (nontrivial) return false;
  }
  return true;
}

}  // namespace kisin3::kisin
