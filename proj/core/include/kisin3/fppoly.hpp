#pragma once

#include <array>
#include <optional>
#include <random>
#include <vector>

#include "kisin3/smallperm.hpp"
#include "kisin3/weyl.hpp"

namespace kisin3::modp {

// Polynomial over F_p truncated at v^trunc (exclusive); arithmetic is exact in
// F_p[v]/(v^trunc). Used for Iwahori eliminations where only valuations below
// the truncation matter.
class TPoly {
 public:
  long p = 0;
  int trunc = 0;
  std::vector<long> c;  // size trunc, c[i] = coefficient of v^i

  TPoly() = default;
  TPoly(long p_, int trunc_) : p(p_), trunc(trunc_), c(trunc_, 0) {}
  static TPoly monomial(long p, int trunc, int deg, long coeff);

  bool is_zero() const;
  int valuation() const;  // trunc if zero
  long leading_unit() const { return c[valuation()]; }

  friend TPoly operator+(const TPoly& a, const TPoly& b);
  friend TPoly operator-(const TPoly& a, const TPoly& b);
  friend TPoly operator*(const TPoly& a, const TPoly& b);
  TPoly operator-() const;
  TPoly shifted(int k) const;  // * v^k, k >= 0
  // inverse of a unit (valuation 0) in F_p[v]/(v^trunc)
  TPoly inverse_unit() const;
  bool operator==(const TPoly& o) const { return p == o.p && c == o.c; }
};

struct TMat {
  std::array<std::array<TPoly, 3>, 3> m;

  static TMat zero(long p, int trunc);
  static TMat identity(long p, int trunc);
  friend TMat operator*(const TMat& a, const TMat& b);
  TPoly& operator()(int i, int k) { return m[i][k]; }
  const TPoly& operator()(int i, int k) const { return m[i][k]; }
  bool operator==(const TMat& o) const { return m == o.m; }
};

// Monomial matrix realizing an affine Weyl element over F_p (unit entries 1).
TMat weyl_matrix(const weyl::AffineWeylElt& w, long p, int trunc);

// Random element of the Iwahori (upper triangular mod v, polynomial entries of
// degree <= maxdeg, unit diagonal constant terms).
TMat random_iwahori(std::mt19937& rng, long p, int trunc, int maxdeg);

// Random element of the pro-v radical Iw_1 (unipotent upper mod v).
TMat random_iwahori1(std::mt19937& rng, long p, int trunc, int maxdeg);

// The Iwahori double coset of an invertible M over F_p((v)): the unique
// monomial pattern w with M in Iw * w * Iw. Computed by Iwahori-equivariant
// elimination; throws on singular input.
weyl::AffineWeylElt double_coset_of(const TMat& M);

// Entry support pattern of the canonical mod-p form of a shape: for each
// (i,k) the list of allowed v-degrees, with pivots flagged.
struct ShapePattern {
  // allowed[i][k] = sorted v-degrees allowed at entry (i,k)
  std::array<std::array<std::vector<int>, 3>, 3> allowed;
  std::array<std::array<bool, 3>, 3> pivot{};  // true at the monomial positions

  bool matches(const TMat& M) const;
};

// Pattern of the canonical representative for any element of Adm(2,1,0),
// obtained from the nine tabulated ones by delta-conjugation.
ShapePattern shape_pattern(const weyl::AffineWeylElt& w);

// Reduces M in Iw * w * Iw to its canonical representative by pro-v Iwahori
// row operations (left multiplication by Iw_1 only). Returns the reduced
// matrix; throws if the iteration fails to converge, which signals that M is
// not in the expected coset.
TMat canonical_form(const TMat& M, const weyl::AffineWeylElt& w);

}  // namespace kisin3::modp
