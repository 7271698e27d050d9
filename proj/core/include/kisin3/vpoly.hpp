#pragma once

#include <array>
#include <vector>

#include "kisin3/groebner.hpp"
#include "kisin3/mpoly.hpp"

namespace kisin3::series {

using poly::Mono;
using poly::MonomialOrder;
using poly::QIdeal;
using poly::QPoly;

// Polynomial in v with multivariate coefficients. coeff[i] is the coefficient
// of v^i; trailing zeros trimmed.
class VPoly {
 public:
  std::vector<QPoly> coeff;
  int nvars = 0;

  VPoly() = default;
  explicit VPoly(int nv) : nvars(nv) {}
  static VPoly from_coeff(std::vector<QPoly> c);
  static VPoly constant(QPoly c);
  static VPoly monomial(QPoly c, int vdeg);
  // v + p with p a literal integer
  static VPoly linear_vp(int nv, const Rat& p);

  void trim();
  bool is_zero() const { return coeff.empty(); }
  int degree() const { return static_cast<int>(coeff.size()) - 1; }  // -1 for 0
  const QPoly& at(int i) const;

  friend VPoly operator+(const VPoly& a, const VPoly& b);
  friend VPoly operator-(const VPoly& a, const VPoly& b);
  friend VPoly operator*(const VPoly& a, const VPoly& b);
  VPoly operator-() const;
  VPoly scaled(const QPoly& c) const;
  VPoly shifted(int k) const;  // * v^k
  bool operator==(const VPoly& o) const { return coeff == o.coeff; }

  VPoly derivative() const;  // d/dv
  QPoly eval(const Rat& v) const;
  QPoly eval_minus_p(const Rat& p) const { return eval(-p); }

  // Largest k with v^k dividing every coefficient-term; 0 for the zero poly.
  int v_content() const;
  VPoly remove_v_content() const;

  // Exact division by (v + p) of a polynomial vanishing at v = -p:
  // divides this - eval(-p), which is always exactly divisible.
  VPoly div_exact_vp(const Rat& p) const;

  // Coefficientwise normal form against an ideal.
  VPoly nf(const QIdeal& I) const;

  VPoly substitute(const std::map<int, QPoly>& sub) const;
};

struct VMatrix {
  std::array<std::array<VPoly, 3>, 3> m;

  static VMatrix zero(int nvars);
  static VMatrix identity(int nvars);

  VPoly& operator()(int i, int k) { return m[i][k]; }
  const VPoly& operator()(int i, int k) const { return m[i][k]; }

  friend VMatrix operator+(const VMatrix& a, const VMatrix& b);
  friend VMatrix operator-(const VMatrix& a, const VMatrix& b);
  friend VMatrix operator*(const VMatrix& a, const VMatrix& b);
  bool operator==(const VMatrix& o) const { return m == o.m; }

  VMatrix adjugate() const;
  VPoly det() const;
  VMatrix transpose() const;
  VMatrix nf(const QIdeal& I) const;
  VMatrix substitute(const std::map<int, QPoly>& sub) const;
  VMatrix scaled(const QPoly& c) const;

  // Entrywise evaluation at v = -p.
  std::array<std::array<QPoly, 3>, 3> eval_minus_p(const Rat& p) const;
};

// det * Id == adjugate * M, used as a self-check.
bool adjugate_identity_holds(const VMatrix& M);

}  // namespace kisin3::series
