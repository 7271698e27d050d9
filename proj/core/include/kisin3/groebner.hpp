#pragma once

#include <optional>
#include <vector>

#include "kisin3/mpoly.hpp"

namespace kisin3::poly {

// Remainder of multivariate division of f by the list basis (not required to
// be a Groebner basis; canonical when it is one).
template <class K>
MPoly<K> normal_form(MPoly<K> f, const std::vector<MPoly<K>>& basis,
                     const MonomialOrder& ord) {
  MPoly<K> rem(f.nvars);
  while (!f.is_zero()) {
    auto [lm, lc] = f.leading(ord);
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      auto [glm, glc] = g.leading(ord);
      if (mono_divides(glm, lm)) {
        f = f - g.mul_term(mono_div(lm, glm), lc * coeff_inv(glc));
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.add_term(lm, lc);
      MPoly<K> lt(f.nvars);
      lt.add_term(lm, lc);
      f = f - lt;
    }
  }
  return rem;
}

// Buchberger with the normal selection strategy (minimal lcm degree, ties by
// the monomial order then by pair indices). Output is the reduced Groebner
// basis: monic, no leading monomial divides another, all tails reduced.
template <class K>
std::vector<MPoly<K>> buchberger(std::vector<MPoly<K>> gens, const MonomialOrder& ord) {
  std::vector<MPoly<K>> basis;
  for (auto& g : gens)
    if (!g.is_zero()) basis.push_back(g);
  if (basis.empty()) return basis;

  struct Pair {
    size_t i, j;
    Mono lcm;
    int deg;
  };
  std::vector<Pair> pairs;
  auto push_pairs = [&](size_t upto) {
    for (size_t i = 0; i < upto; ++i) {
      Mono l = mono_lcm(basis[i].leading(ord).first, basis[upto].leading(ord).first);
      pairs.push_back({i, upto, l, mono_degree(l)});
    }
  };
  for (size_t j = 1; j < basis.size(); ++j) push_pairs(j);

  while (!pairs.empty()) {
    size_t best = 0;
    for (size_t k = 1; k < pairs.size(); ++k) {
      const Pair &a = pairs[k], &b = pairs[best];
      if (a.deg != b.deg ? a.deg < b.deg
                         : (a.lcm != b.lcm ? ord.less(a.lcm, b.lcm)
                                           : std::tie(a.i, a.j) < std::tie(b.i, b.j)))
        best = k;
    }
    Pair pr = pairs[best];
    pairs.erase(pairs.begin() + best);

    auto [lmi, lci] = basis[pr.i].leading(ord);
    auto [lmj, lcj] = basis[pr.j].leading(ord);
    // Buchberger's first criterion: coprime leading monomials.
    if (mono_mul(lmi, lmj) == pr.lcm) continue;

    MPoly<K> s = basis[pr.i].mul_term(mono_div(pr.lcm, lmi), coeff_inv(lci)) -
                 basis[pr.j].mul_term(mono_div(pr.lcm, lmj), coeff_inv(lcj));
    MPoly<K> r = normal_form(s, basis, ord);
    if (!r.is_zero()) {
      basis.push_back(r);
      push_pairs(basis.size() - 1);
    }
  }

  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::vector<MPoly<K>> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    Mono lm = basis[i].leading(ord).first;
    bool redundant = false;
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      Mono lmj = basis[j].leading(ord).first;
      if (mono_divides(lmj, lm) && (lmj != lm || j < i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // Reduce tails and make monic.
  std::vector<MPoly<K>> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MPoly<K>> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    MPoly<K> r = normal_form(minimal[i], others, ord);
    if (!r.is_zero()) reduced.push_back(r.scaled(coeff_inv(r.leading(ord).second)));
  }
  // Canonical output order: decreasing leading monomial.
  std::sort(reduced.begin(), reduced.end(), [&](const MPoly<K>& a, const MPoly<K>& b) {
    return ord.less(b.leading(ord).first, a.leading(ord).first);
  });
  return reduced;
}

// A finitely generated ideal with a fixed monomial order; the reduced Groebner
// basis is computed on demand and cached.
template <class K>
class PolyIdeal {
 public:
  std::vector<MPoly<K>> gens;
  MonomialOrder ord;

  PolyIdeal() = default;
  PolyIdeal(std::vector<MPoly<K>> g, MonomialOrder o) : gens(std::move(g)), ord(std::move(o)) {}

  const std::vector<MPoly<K>>& groebner() const {
    if (!gb_) gb_ = buchberger(gens, ord);
    return *gb_;
  }
  MPoly<K> nf(const MPoly<K>& f) const { return normal_form(f, groebner(), ord); }
  bool contains(const MPoly<K>& f) const { return nf(f).is_zero(); }
  bool is_proper() const {
    for (const auto& g : groebner())
      if (g.is_constant() && !g.is_zero()) return false;
    return true;
  }

  bool initial_ideal_squarefree() const {
    for (const auto& g : groebner())
      if (!mono_is_squarefree(g.leading(ord).first)) return false;
    return true;
  }

  // Dimension of the initial monomial ideal: the largest set of variables S
  // such that no leading monomial is supported inside S.
  int dimension() const;

 private:
  mutable std::optional<std::vector<MPoly<K>>> gb_;
};

template <class K>
int PolyIdeal<K>::dimension() const {
  const auto& gb = groebner();
  int n = gens.empty() ? (gb.empty() ? 0 : gb[0].nvars) : gens[0].nvars;
  std::vector<Mono> lms;
  for (const auto& g : gb) lms.push_back(g.leading(ord).first);
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (const auto& lm : lms) {
      bool inside = true;
      for (int v = 0; v < n; ++v)
        if (lm[v] > 0 && !(mask >> v & 1)) {
          inside = false;
          break;
        }
      if (inside) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

template <class K>
bool ideal_equal(const PolyIdeal<K>& a, const PolyIdeal<K>& b) {
  for (const auto& g : a.gens)
    if (!b.contains(g)) return false;
  for (const auto& g : b.gens)
    if (!a.contains(g)) return false;
  return true;
}

// Intersection via the standard single-tag elimination: I cap J =
// (t*I + (1-t)*J) cap K[x]. The auxiliary variable is appended at index n.
template <class K>
PolyIdeal<K> intersect(const PolyIdeal<K>& a, const PolyIdeal<K>& b) {
  int n = a.gens.at(0).nvars;
  auto lift = [&](const MPoly<K>& f, bool with_t, bool with_one_minus_t) {
    MPoly<K> r(n + 1);
    for (const auto& [m, c] : f.terms) {
      Mono mm = m;
      mm.push_back(0);
      if (with_t) {
        Mono mt = mm;
        mt[n] = 1;
        r.add_term(mt, c);
      }
      if (with_one_minus_t) {
        r.add_term(mm, c);
        Mono mt = mm;
        mt[n] = 1;
        r.add_term(mt, -c);
      }
    }
    return r;
  };
  std::vector<MPoly<K>> gens;
  for (const auto& g : a.gens) gens.push_back(lift(g, true, false));
  for (const auto& g : b.gens) gens.push_back(lift(g, false, true));
  // Elimination order: t first, then the original ranking.
  std::vector<int> rank{n};
  for (int v : a.ord.rank) rank.push_back(v);
  PolyIdeal<K> big(gens, MonomialOrder::lex_ranked(rank));
  std::vector<MPoly<K>> kept;
  for (const auto& g : big.groebner()) {
    if (g.degree_in(n) > 0) continue;
    MPoly<K> f(n);
    for (const auto& [m, c] : g.terms) {
      Mono mm(m.begin(), m.end() - 1);
      f.add_term(mm, c);
    }
    kept.push_back(f);
  }
  return PolyIdeal<K>(kept, a.ord);
}

// Rank of the matrix of linear parts of the generators at the origin.
template <class K>
int jacobian_rank_at_origin(const PolyIdeal<K>& I) {
  int n = I.gens.at(0).nvars;
  std::vector<std::vector<K>> rows;
  for (const auto& g : I.gens) {
    std::vector<K> row(n, K{});
    bool nontrivial = false;
    for (const auto& [m, c] : g.terms)
      if (mono_degree(m) == 1)
        for (int v = 0; v < n; ++v)
          if (m[v] == 1) {
            row[v] = c;
            nontrivial = true;
          }
    if (nontrivial) rows.push_back(row);
  }
  // Gaussian elimination.
  int rank = 0;
  for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (size_t r = rank; r < rows.size(); ++r)
      if (!coeff_is_zero(rows[r][col])) {
        piv = static_cast<int>(r);
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    K inv = coeff_inv(rows[rank][col]);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) == rank || coeff_is_zero(rows[r][col])) continue;
      K factor = rows[r][col] * inv;
      for (int cc = 0; cc < n; ++cc) rows[r][cc] = rows[r][cc] - factor * rows[rank][cc];
    }
    ++rank;
  }
  return rank;
}

using QIdeal = PolyIdeal<Rat>;
using FpIdeal = PolyIdeal<Fp>;

}  // namespace kisin3::poly
