#pragma once

#include <array>
#include <vector>

#include "kisin3/rational.hpp"
#include "kisin3/smallperm.hpp"

namespace kisin3::tame {

// A tame inertial type for GL3, encoded by the prime p, the residue degree f
// of the base field, the niveau r in {1,2,3}, and three f-tuples a_k with
// entries in {0..p-1}. For r = 1 the attached characters are
// eta_k = omega_f^{-a_k^(0)}; for r in {2,3} the tuples parametrize the base
// change to the unramified extension of degree r as in the displayed types.
struct TameType {
  long p = 0;
  int f = 1;
  int niveau = 1;
  std::array<std::vector<int>, 3> a;  // a[k][j], 0 <= j < f

  TameType() = default;
  TameType(long p_, int f_, int niveau_, std::array<std::vector<int>, 3> a_);

  // a_k^{(j)} = sum_i a_{k, -j+i mod f} p^i
  Int a_upper(int k, int j) const;

  bool principal_series() const { return niveau == 1; }
};

struct Orientation {
  std::vector<Perm3> s;  // one permutation per embedding
};

// Largest n with n <= |a_{i,j} - a_{k,j}| <= p-1-n for all pairs and all j
// (0 if the characters are not pairwise distinct at some embedding).
int genericity_level(const TameType& t);

// The unique orientation: a_{s_j(1)}^{(j)} >= a_{s_j(2)}^{(j)} >= a_{s_j(3)}^{(j)}.
// Throws unless the type is weakly generic (level >= 3), where uniqueness holds.
Orientation orientation(const TameType& t);

// Base change to the unramified extension of degree r = niveau: the niveau-1
// type over K' with f' = f*r whose tuples read off the associated characters.
// Identity for niveau 1.
TameType base_change(const TameType& t);

// The orientation of base_change(t) predicted from orientation(t):
// s'_{j+if} = s_tau^{i+1} o s_j with s_tau = (23) for r=2 and (123) for r=3.
Orientation base_change_orientation(const TameType& t);

}  // namespace kisin3::tame
