#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <type_traits>
#include <vector>

#include "kisin3/fp.hpp"
#include "kisin3/rational.hpp"

namespace kisin3::poly {

// Exponent vector; all monomials of a polynomial have the same length.
using Mono = std::vector<int>;

inline Mono mono_mul(const Mono& a, const Mono& b) {
  Mono r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}
inline bool mono_divides(const Mono& a, const Mono& b) {  // a | b
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}
inline Mono mono_div(const Mono& b, const Mono& a) {  // b / a
  Mono r(b.size());
  for (size_t i = 0; i < b.size(); ++i) r[i] = b[i] - a[i];
  return r;
}
inline Mono mono_lcm(const Mono& a, const Mono& b) {
  Mono r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}
inline int mono_degree(const Mono& a) { return std::accumulate(a.begin(), a.end(), 0); }
inline bool mono_is_squarefree(const Mono& a) {
  for (int e : a)
    if (e > 1) return false;
  return true;
}

// Lex order determined by a ranking of the variables: rank[0] is the most
// significant variable index. The order is part of an ideal's value.
struct MonomialOrder {
  std::vector<int> rank;

  static MonomialOrder lex(int nvars) {
    MonomialOrder o;
    o.rank.resize(nvars);
    std::iota(o.rank.begin(), o.rank.end(), 0);
    return o;
  }
  static MonomialOrder lex_ranked(std::vector<int> ranking) { return {std::move(ranking)}; }

  bool less(const Mono& a, const Mono& b) const {  // a < b
    for (int v : rank)
      if (a[v] != b[v]) return a[v] < b[v];
    return false;
  }
};

template <class K>
inline bool coeff_is_zero(const K& x) {
  if constexpr (std::is_same_v<K, Fp>)
    return x.is_zero();
  else
    return x == 0;
}
template <class K>
inline K coeff_one_like(const K& sample) {
  if constexpr (std::is_same_v<K, Fp>)
    return Fp(1, sample.p);
  else
    return K(1);
}
template <class K>
inline K coeff_inv(const K& x) {
  if constexpr (std::is_same_v<K, Fp>)
    return x.inv();
  else
    return K(1) / x;
}

// Sparse multivariate polynomial over K (Rat or Fp). Terms keyed by plain
// lex on the exponent vector for canonicity; orders for division are external.
template <class K>
class MPoly {
 public:
  std::map<Mono, K> terms;
  int nvars = 0;

  MPoly() = default;
  explicit MPoly(int nv) : nvars(nv) {}

  static MPoly constant(int nv, const K& c) {
    MPoly r(nv);
    if (!coeff_is_zero(c)) r.terms.emplace(Mono(nv, 0), c);
    return r;
  }
  static MPoly variable(int nv, int idx, const K& one) {
    MPoly r(nv);
    Mono m(nv, 0);
    m[idx] = 1;
    r.terms.emplace(std::move(m), one);
    return r;
  }

  bool is_zero() const { return terms.empty(); }
  bool is_constant() const {
    return terms.empty() || (terms.size() == 1 && mono_degree(terms.begin()->first) == 0);
  }
  K constant_term() const {
    auto it = terms.find(Mono(nvars, 0));
    return it == terms.end() ? K{} : it->second;
  }

  void add_term(const Mono& m, const K& c) {
    if (coeff_is_zero(c)) return;
    auto [it, inserted] = terms.emplace(m, c);
    if (!inserted) {
      it->second = it->second + c;
      if (coeff_is_zero(it->second)) terms.erase(it);
    }
  }

  friend MPoly operator+(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    if (r.nvars == 0) r.nvars = b.nvars;
    for (const auto& [m, c] : b.terms) r.add_term(m, c);
    return r;
  }
  friend MPoly operator-(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    if (r.nvars == 0) r.nvars = b.nvars;
    for (const auto& [m, c] : b.terms) r.add_term(m, -c);
    return r;
  }
  MPoly operator-() const {
    MPoly r(nvars);
    for (const auto& [m, c] : terms) r.terms.emplace(m, -c);
    return r;
  }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r(a.nvars ? a.nvars : b.nvars);
    for (const auto& [ma, ca] : a.terms)
      for (const auto& [mb, cb] : b.terms) r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
  }
  MPoly scaled(const K& c) const {
    MPoly r(nvars);
    if (coeff_is_zero(c)) return r;
    for (const auto& [m, co] : terms) r.terms.emplace(m, co * c);
    return r;
  }
  MPoly mul_term(const Mono& m, const K& c) const {
    MPoly r(nvars);
    if (coeff_is_zero(c)) return r;
    for (const auto& [mm, co] : terms) r.terms.emplace(mono_mul(mm, m), co * c);
    return r;
  }
  MPoly pow(int e) const {
    MPoly r = constant(nvars, coeff_one_like(sample_coeff()));
    for (int i = 0; i < e; ++i) r = r * (*this);
    return r;
  }

  bool operator==(const MPoly& o) const { return terms == o.terms; }

  std::pair<Mono, K> leading(const MonomialOrder& ord) const {
    auto best = terms.begin();
    for (auto it = std::next(terms.begin()); it != terms.end(); ++it)
      if (ord.less(best->first, it->first)) best = it;
    return *best;
  }

  int total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms) d = std::max(d, mono_degree(m));
    return d;
  }
  int degree_in(int var) const {
    int d = 0;
    for (const auto& [m, c] : terms) d = std::max(d, m[var]);
    return d;
  }

  K sample_coeff() const {
    if constexpr (std::is_same_v<K, Fp>) {
      for (const auto& [m, c] : terms)
        if (c.p != 0) return c;
      return Fp{0, 0};
    } else {
      return K(0);
    }
  }

  // Parallel substitution var -> polynomial; variables absent from the map
  // are kept.
  MPoly substitute(const std::map<int, MPoly>& sub) const {
    MPoly r(nvars);
    for (const auto& [m, c] : terms) {
      MPoly t = MPoly::constant(nvars, c);
      Mono keep(nvars, 0);
      for (int v = 0; v < nvars; ++v) {
        if (m[v] == 0) continue;
        auto it = sub.find(v);
        if (it == sub.end()) {
          keep[v] = m[v];
          continue;
        }
        for (int e = 0; e < m[v]; ++e) t = t * it->second;
      }
      if (mono_degree(keep) > 0) t = t.mul_term(keep, coeff_one_like(c));
      r = r + t;
    }
    return r;
  }

  K eval(const std::vector<K>& point) const {
    K acc{};
    bool first = true;
    for (const auto& [m, c] : terms) {
      K t = c;
      for (int v = 0; v < nvars; ++v)
        for (int e = 0; e < m[v]; ++e) t = t * point[v];
      if (first) {
        acc = t;
        first = false;
      } else {
        acc = acc + t;
      }
    }
    return acc;
  }
};

using QPoly = MPoly<Rat>;
using FpMPoly = MPoly<Fp>;

std::string to_string(const QPoly& f, const std::vector<std::string>& names);

}  // namespace kisin3::poly
