#pragma once

#include <string>
#include <vector>

#include "kisin3/fppoly.hpp"
#include "kisin3/shapes.hpp"

namespace kisin3::kisin {

using shapes::Params;
using shapes::ShapeTemplate;

struct CheckReport {
  bool pass = true;
  std::vector<std::string> failures;

  void fail(std::string what) {
    pass = false;
    failures.push_back(std::move(what));
  }
};

// Table-4 height/determinant verification for one representative shape:
// every 2x2 minor, after removing its v-content, vanishes at v = -p modulo
// the relation ideal, and det / P(v)^3 is a unit modulo the ideal.
CheckReport verify_height_det(const ShapeTemplate& sh, const Params& par);

// Reduction of the universal matrix modulo the maximal ideal (stars to their
// residues, everything else to 0) matches the tabulated mod-p pattern, and
// the degree bounds of the third column hold.
CheckReport verify_template_shape(const ShapeTemplate& sh, const Params& par);

// Cyclic symmetry at the monomial point: realizing w as a monomial matrix,
// conjugation by delta lands on the realization of delta w delta^{-1}.
bool cyclic_symmetry_holds(const weyl::AffineWeylElt& w, long q);

// Randomized search for a second lattice with the same etale phi-module:
// perturbs the standard lattice of the given shape by random Iwahori elements
// and checks that lattices of the same shape data coincide. Probabilistic.
bool kisin_variety_uniqueness_check(const weyl::AffineWeylElt& w, long q, int trials,
                                    unsigned seed);

}  // namespace kisin3::kisin
