#pragma once

#include <array>
#include <optional>
#include <vector>

#include "kisin3/rational.hpp"
#include "kisin3/smallperm.hpp"

namespace kisin3::series {

// Truncated power series in u with exact rational coefficients, indexed by
// u-degree <= trunc. Models elements of the rigid-analytic disc ring at a
// fixed u-adic working precision; p-adic valuations of coefficients are exact.
class USeries {
 public:
  std::vector<Rat> c;  // size trunc+1
  int trunc = 0;

  USeries() = default;
  USeries(int trunc_, Rat c0 = Rat(0)) : c(trunc_ + 1, Rat(0)), trunc(trunc_) {
    c[0] = std::move(c0);
  }
  static USeries monomial(int trunc, int deg, const Rat& coeff) {
    USeries r(trunc);
    if (deg <= trunc) r.c[deg] = coeff;
    return r;
  }

  bool is_zero() const {
    for (const auto& x : c)
      if (x != 0) return false;
    return true;
  }

  friend USeries operator+(const USeries& a, const USeries& b);
  friend USeries operator-(const USeries& a, const USeries& b);
  friend USeries operator*(const USeries& a, const USeries& b);
  USeries operator-() const;
  USeries scaled(const Rat& r) const;

  // u * d/du
  USeries theta() const;
  // u -> u^p (terms beyond the truncation are dropped)
  USeries frobenius(long p) const;
  // multiplicative inverse; requires a nonzero constant term
  USeries inverse() const;

  // smallest degree with nonzero coefficient (trunc+1 if zero at precision)
  int u_valuation() const;
  // min p-adic valuation over nonzero coefficients; nullopt if zero
  std::optional<long> min_p_valuation(const Int& p) const;

  // Interprets the series as a polynomial in v = u^e and evaluates at v = -p.
  // Requires every nonzero degree to be a multiple of e.
  Rat eval_v_minus_p(int e, const Rat& p) const;
};

struct UMatrix {
  std::array<std::array<USeries, 3>, 3> m;

  static UMatrix zero(int trunc);
  static UMatrix identity(int trunc);

  USeries& operator()(int i, int k) { return m[i][k]; }
  const USeries& operator()(int i, int k) const { return m[i][k]; }

  friend UMatrix operator+(const UMatrix& a, const UMatrix& b);
  friend UMatrix operator-(const UMatrix& a, const UMatrix& b);
  friend UMatrix operator*(const UMatrix& a, const UMatrix& b);
  UMatrix scaled(const USeries& s) const;
  UMatrix scaled(const Rat& r) const;
  UMatrix theta() const;
  UMatrix frobenius(long p) const;
  UMatrix inverse() const;  // via adjugate / det

  int u_valuation() const;  // min over entries
};

// Conjugation with orientation: s * diag(u^{b_s(1)}, u^{b_s(2)}, u^{b_s(3)}) *
// M * diag(...)^{-1} * s^{-1} with b_k = exps[k]. Entries whose u-exponent
// would go negative must vanish; throws otherwise.
UMatrix ad_conjugate(const UMatrix& M, const Perm3& s, const std::array<long, 3>& exps);
UMatrix ad_conjugate_inverse(const UMatrix& M, const Perm3& s,
                             const std::array<long, 3>& exps);

// lambda = prod_{n >= 0, e*p^n <= trunc} phi^n(E(u)/p), E(u) = u^e + p.
USeries lambda_truncated(long p, int e, int trunc);

}  // namespace kisin3::series
