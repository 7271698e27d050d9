#pragma once

#include <string>
#include <vector>

#include "kisin3/groebner.hpp"
#include "kisin3/vpoly.hpp"
#include "kisin3/weyl.hpp"

namespace kisin3::shapes {

using poly::MonomialOrder;
using poly::QIdeal;
using poly::QPoly;
using series::VMatrix;
using series::VPoly;

// Numeric specialization of the parameters: the prime p, e = p^f - 1 (f = 1
// throughout the explicit computations) and the oriented exponents a > b > c.
// Two independent specializations guard the checks against accidental
// vanishing of parameter combinations.
struct Params {
  long p, e, a, b, c;

  static Params first() { return {101, 100, 65, 38, 11}; }
  static Params second() { return {211, 210, 140, 83, 19}; }

  Rat rp() const { return Rat(p); }
  Rat re() const { return Rat(e); }
};

enum class VarKind { Plain, Star, Prime, StarInverse };

struct ShapeVar {
  std::string name;
  VarKind kind = VarKind::Plain;
  int inverse_of = -1;  // StarInverse: index of the paired star variable
};

// Universal deformation data of one of the nine representative shapes:
// the entry template with height and determinant conditions imposed, the
// relation ideal, and the tabulated degree bounds.
struct ShapeTemplate {
  std::string word;
  weyl::AffineWeylElt elt;
  std::vector<ShapeVar> vars;
  VMatrix universal;
  std::vector<QPoly> relations;      // includes star * inverse - 1 relations
  MonomialOrder order;

  struct Bound {
    bool zero = true;       // entry identically 0
    int max_deg = -1;       // maximal v-degree
    bool unit = false;      // leading coefficient a unit
    bool v_divisible = false;
  };
  Bound bounds[3][3];

  int nvars() const { return static_cast<int>(vars.size()); }
  int var(const std::string& name) const;
  QPoly vp(const std::string& name) const;  // variable as a polynomial
  QIdeal ideal() const { return QIdeal(relations, order); }

  // substitution star -> unit value, plain/prime -> 0 (the generic residue
  // point used for unit checks); inverse variables get the matching inverse.
  std::vector<Rat> residue_point(unsigned seed, long p) const;
};

const std::vector<std::string>& representative_words();

// Build the Table-4 data for one representative shape at a specialization.
ShapeTemplate make_shape(const std::string& word, const Params& par);

}  // namespace kisin3::shapes
