#include "kisin3/fppoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace kisin3::modp {

using weyl::AffineWeylElt;

TPoly TPoly::monomial(long p, int trunc, int deg, long coeff) {
  TPoly r(p, trunc);
  if (deg < trunc) r.c[deg] = ((coeff % p) + p) % p;
  return r;
}

bool TPoly::is_zero() const {
  for (long x : c)
    if (x) return false;
  return true;
}

int TPoly::valuation() const {
  for (int i = 0; i < trunc; ++i)
    if (c[i]) return i;
  return trunc;
}

TPoly operator+(const TPoly& a, const TPoly& b) {
  TPoly r(a.p, a.trunc);
  for (int i = 0; i < r.trunc; ++i) r.c[i] = (a.c[i] + b.c[i]) % a.p;
  return r;
}

TPoly operator-(const TPoly& a, const TPoly& b) {
  TPoly r(a.p, a.trunc);
  for (int i = 0; i < r.trunc; ++i) r.c[i] = ((a.c[i] - b.c[i]) % a.p + a.p) % a.p;
  return r;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
  TPoly r(a.p, a.trunc);
  for (int i = 0; i < a.trunc; ++i) {
    if (!a.c[i]) continue;
    for (int j = 0; i + j < a.trunc; ++j) {
      if (!b.c[j]) continue;
      r.c[i + j] = (r.c[i + j] + a.c[i] * b.c[j]) % a.p;
    }
  }
  return r;
}

TPoly TPoly::operator-() const {
  TPoly r(p, trunc);
  for (int i = 0; i < trunc; ++i) r.c[i] = (p - c[i]) % p;
  return r;
}

TPoly TPoly::shifted(int k) const {
  TPoly r(p, trunc);
  if (k >= 0) {
    for (int i = 0; i + k < trunc; ++i) r.c[i + k] = c[i];
  } else {
    for (int i = -k; i < trunc; ++i) {
      r.c[i + k] = c[i];
    }
    for (int i = 0; i < -k && i < trunc; ++i)
      if (c[i]) throw std::domain_error("TPoly: negative shift of nonzero low terms");
  }
  return r;
}

TPoly TPoly::inverse_unit() const {
  if (!c[0]) throw std::domain_error("TPoly: not a unit");
  TPoly r(p, trunc);
  // modular inverse of c[0]
  long a = c[0], m = p, x0 = 0, x1 = 1;
  while (a > 1) {
    long q = a / m, t = m;
    m = a % m;
    a = t;
    t = x0;
    x0 = x1 - q * x0;
    x1 = t;
  }
  long inv0 = ((x1 % p) + p) % p;
  r.c[0] = inv0;
  for (int n = 1; n < trunc; ++n) {
    long acc = 0;
    for (int k = 1; k <= n; ++k) acc = (acc + c[k] * r.c[n - k]) % p;
    r.c[n] = (p - (inv0 * acc) % p) % p;
  }
  return r;
}

TMat TMat::zero(long p, int trunc) {
  TMat r;
  for (auto& row : r.m)
    for (auto& e : row) e = TPoly(p, trunc);
  return r;
}

TMat TMat::identity(long p, int trunc) {
  TMat r = zero(p, trunc);
  for (int i = 0; i < 3; ++i) r.m[i][i].c[0] = 1;
  return r;
}

TMat operator*(const TMat& a, const TMat& b) {
  TMat r = TMat::zero(a.m[0][0].p, a.m[0][0].trunc);
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k)
      for (int j = 0; j < 3; ++j) r.m[i][k] = r.m[i][k] + a.m[i][j] * b.m[j][k];
  return r;
}

TMat weyl_matrix(const AffineWeylElt& w, long p, int trunc) {
  TMat r = TMat::zero(p, trunc);
  for (int k = 0; k < 3; ++k) {
    if (w.exps[k] < 0)
      throw std::invalid_argument("weyl_matrix: negative exponent not representable");
    r.m[w.perm(k)][k] = TPoly::monomial(p, trunc, w.exps[k], 1);
  }
  return r;
}

namespace {
TPoly random_tpoly(std::mt19937& rng, long p, int trunc, int mindeg, int maxdeg,
                   bool unit_low) {
  TPoly r(p, trunc);
  std::uniform_int_distribution<long> d(0, p - 1), dunit(1, p - 1);
  for (int i = mindeg; i <= maxdeg && i < trunc; ++i) r.c[i] = d(rng);
  if (unit_low && mindeg < trunc) r.c[mindeg] = dunit(rng);
  return r;
}
}  // namespace

TMat random_iwahori(std::mt19937& rng, long p, int trunc, int maxdeg) {
  TMat r = TMat::zero(p, trunc);
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      if (i == k)
        r.m[i][k] = random_tpoly(rng, p, trunc, 0, maxdeg, true);
      else if (i < k)
        r.m[i][k] = random_tpoly(rng, p, trunc, 0, maxdeg, false);
      else
        r.m[i][k] = random_tpoly(rng, p, trunc, 1, maxdeg, false);
    }
  return r;
}

TMat random_iwahori1(std::mt19937& rng, long p, int trunc, int maxdeg) {
  TMat r = random_iwahori(rng, p, trunc, maxdeg);
  for (int i = 0; i < 3; ++i) {
    r.m[i][i].c[0] = 1;
  }
  return r;
}

namespace {

struct Elimination {
  TMat W;      // quasi-monomial result
  TMat left;   // accumulated row operations
  TMat right;  // accumulated column operations:  W = left * M * right
  Perm3 sigma;               // pivot row of column k is sigma(k)
  std::array<int, 3> exps;   // pivot valuation of column k
};

// Iwahori-equivariant elimination. Every operation multiplies by an Iwahori
// element on the corresponding side: row_i += q*row_j is legal for arbitrary q
// when j > i and for v|q when j < i, and symmetrically for columns.
Elimination eliminate(const TMat& M) {
  long p = M.m[0][0].p;
  int T = M.m[0][0].trunc;
  Elimination E{M, TMat::identity(p, T), TMat::identity(p, T), {}, {0, 0, 0}};
  bool row_used[3] = {false, false, false}, col_used[3] = {false, false, false};
  for (int step = 0; step < 3; ++step) {
    // global minimum valuation over the free submatrix; ties prefer the
    // largest row, then the smallest column, which keeps every clearing
    // operation inside the Iwahori
    int pr = -1, pk = -1, pv = T;
    for (int i = 0; i < 3; ++i) {
      if (row_used[i]) continue;
      for (int k = 0; k < 3; ++k) {
        if (col_used[k]) continue;
        int val = E.W.m[i][k].valuation();
        if (val < pv || (val == pv && (i > pr || (i == pr && k < pk)))) {
          pv = val;
          pr = i;
          pk = k;
        }
      }
    }
    if (pr < 0 || pv >= T)
      throw std::domain_error("eliminate: singular matrix (at working precision)");
    row_used[pr] = true;
    col_used[pk] = true;
    E.sigma.p[pk] = pr;
    E.exps[pk] = pv;
    TPoly pivot_inv = E.W.m[pr][pk].shifted(-pv).inverse_unit();
    // clear the pivot column by row operations
    for (int i = 0; i < 3; ++i) {
      if (i == pr || E.W.m[i][pk].is_zero()) continue;
      TPoly q = -(E.W.m[i][pk].shifted(-pv) * pivot_inv);
      for (int kk = 0; kk < 3; ++kk) {
        E.W.m[i][kk] = E.W.m[i][kk] + q * E.W.m[pr][kk];
        E.left.m[i][kk] = E.left.m[i][kk] + q * E.left.m[pr][kk];
      }
    }
    // clear the pivot row by column operations
    for (int kk = 0; kk < 3; ++kk) {
      if (kk == pk || E.W.m[pr][kk].is_zero()) continue;
      TPoly q = -(E.W.m[pr][kk].shifted(-pv) * pivot_inv);
      for (int i = 0; i < 3; ++i) {
        E.W.m[i][kk] = E.W.m[i][kk] + E.W.m[i][pk] * q;
        E.right.m[i][kk] = E.right.m[i][kk] + E.right.m[i][pk] * q;
      }
    }
  }
  return E;
}

TMat tmat_inverse(const TMat& M) {
  long p = M.m[0][0].p;
  int T = M.m[0][0].trunc;
  auto minor2 = [&](int r0, int r1, int c0, int c1) {
    return M.m[r0][c0] * M.m[r1][c1] - M.m[r0][c1] * M.m[r1][c0];
  };
  TMat adj = TMat::zero(p, T);
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      int r0 = (k + 1) % 3, r1 = (k + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      if (r0 > r1) std::swap(r0, r1);
      if (c0 > c1) std::swap(c0, c1);
      TPoly mn = minor2(r0, r1, c0, c1);
      adj.m[i][k] = ((i + k) % 2 == 0) ? mn : -mn;
    }
  TPoly det = M.m[0][0] * adj.m[0][0] + M.m[1][0] * adj.m[0][1] + M.m[2][0] * adj.m[0][2];
  TPoly dinv = det.inverse_unit();
  TMat r = TMat::zero(p, T);
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) r.m[i][k] = adj.m[i][k] * dinv;
  return r;
}

}  // namespace

AffineWeylElt double_coset_of(const TMat& M) {
  Elimination E = eliminate(M);
  AffineWeylElt w;
  w.perm = E.sigma;
  w.exps = E.exps;
  return w;
}

bool ShapePattern::matches(const TMat& M) const {
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      const TPoly& e = M.m[i][k];
      for (int d = 0; d < e.trunc; ++d) {
        if (!e.c[d]) continue;
        if (std::find(allowed[i][k].begin(), allowed[i][k].end(), d) ==
            allowed[i][k].end())
          return false;
      }
      if (pivot[i][k]) {
        // pivots carry a unit: the tabulated degree must be present
        if (e.is_zero() || e.valuation() != allowed[i][k].front()) return false;
      }
    }
  return true;
}

namespace {

struct RawPattern {
  const char* word;
  // entries: row, col, degrees (1-indexed rows/cols for readability), pivot
  struct E {
    int i, k;
    std::vector<int> degs;
    bool pivot;
  };
  std::vector<E> entries;
};

const std::vector<RawPattern>& base_patterns() {
  static const std::vector<RawPattern> pats = {
      {"abag",
       {{1, 1, {2}, true},
        {2, 1, {2}, false},
        {2, 2, {1}, true},
        {3, 1, {1, 2}, false},
        {3, 2, {1}, false},
        {3, 3, {0}, true}}},
      {"bgag",
       {{1, 1, {1}, true},
        {1, 2, {1}, false},
        {2, 2, {2}, true},
        {3, 1, {1}, false},
        {3, 2, {1, 2}, false},
        {3, 3, {0}, true}}},
      {"bag",
       {{1, 2, {1}, true},
        {2, 1, {2}, true},
        {3, 1, {1, 2}, false},
        {3, 2, {1}, false},
        {3, 3, {0}, true}}},
      {"abg",
       {{1, 1, {2}, true},
        {2, 1, {1, 2}, false},
        {2, 3, {0}, true},
        {3, 1, {2}, false},
        {3, 2, {1}, true}}},
      {"aba",
       {{1, 3, {1}, true},
        {2, 2, {1}, true},
        {2, 3, {1}, false},
        {3, 1, {1}, true},
        {3, 2, {1}, false},
        {3, 3, {1}, false}}},
      {"ab",
       {{1, 3, {1}, true},
        {2, 1, {1}, true},
        {2, 3, {1}, false},
        {3, 2, {1}, true},
        {3, 3, {1}, false}}},
      {"ba",
       {{1, 2, {1}, true},
        {2, 3, {1}, true},
        {3, 1, {1}, true},
        {3, 2, {1}, false},
        {3, 3, {1}, false}}},
      {"a",
       {{1, 2, {1}, true},
        {2, 1, {1}, true},
        {2, 2, {1}, false},
        {3, 3, {1}, true}}},
      {"id", {{1, 1, {1}, true}, {2, 2, {1}, true}, {3, 3, {1}, true}}},
  };
  return pats;
}

ShapePattern pattern_from_raw(const RawPattern& rp) {
  ShapePattern sp;
  for (const auto& e : rp.entries) {
    sp.allowed[e.i - 1][e.k - 1] = e.degs;
    sp.pivot[e.i - 1][e.k - 1] = e.pivot;
  }
  return sp;
}

// pattern of delta * (pattern) * delta^{-1}
ShapePattern conjugate_pattern(const ShapePattern& sp) {
  AffineWeylElt d = AffineWeylElt::delta();
  Perm3 sd = d.perm;
  Perm3 sdi = sd.inverse();
  ShapePattern out;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      int oi = sdi(i), ok = sdi(k);
      int shift = d.exps[oi] - d.exps[ok];
      for (int deg : sp.allowed[oi][ok]) out.allowed[i][k].push_back(deg + shift);
      std::sort(out.allowed[i][k].begin(), out.allowed[i][k].end());
      out.pivot[i][k] = sp.pivot[oi][ok];
    }
  return out;
}

}  // namespace

ShapePattern shape_pattern(const AffineWeylElt& w) {
  const auto& adm = weyl::adm_210();
  if (!adm.contains(w)) throw std::invalid_argument("shape_pattern: not in Adm(2,1,0)");
  for (const auto& rp : base_patterns()) {
    AffineWeylElt base = AffineWeylElt::v_times_identity() * weyl::parse_word(rp.word);
    AffineWeylElt x = base;
    ShapePattern sp = pattern_from_raw(rp);
    for (int j = 0; j < 3; ++j) {
      if (x == w) return sp;
      x = weyl::delta_conjugate(x);
      sp = conjugate_pattern(sp);
    }
  }
  throw std::logic_error("shape_pattern: orbit scan failed");
}

TMat canonical_form(const TMat& M, const AffineWeylElt& w) {
  long p = M.m[0][0].p;
  int T = M.m[0][0].trunc;
  Elimination E = eliminate(M);
  AffineWeylElt found{E.sigma, E.exps};
  if (!(found == w)) throw std::domain_error("canonical_form: input has a different shape");

  // Split off the pro-v Iwahori part of the accumulated left operations:
  // M = left^{-1} W right^{-1}, left^{-1} = J * D with J in Iw_1, D diagonal.
  // Then J^{-1} M = D W right^{-1} lies in w * Iw.
  TMat left_inv = tmat_inverse(E.left);
  TMat F = TMat::zero(p, T);
  {
    // J^{-1} = D_0 * left with D_0 = diag(left_inv)^{-1}... the diagonal of
    // left_inv is a unit series; J = left_inv * D0^{-1} with D0 = diag entries.
    std::array<TPoly, 3> d0;
    for (int i = 0; i < 3; ++i) d0[i] = left_inv.m[i][i];
    // F = D0^{... } : J^{-1} M = D0_diag-correct * left * M
    // J^{-1} = D0 * left where D0 = diag(d0):
    TMat t = TMat::zero(p, T);
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k) t.m[i][k] = d0[i] * E.left.m[i][k];
    F = t * M;
  }

  // F = w * I with I in Iw. Extract I by undoing the monomial factor.
  Perm3 sigma = w.perm;
  TMat I = TMat::zero(p, T);
  for (int a = 0; a < 3; ++a)
    for (int k = 0; k < 3; ++k) I.m[a][k] = F.m[sigma(a)][k].shifted(-w.exps[a]);

  // Reduce I to the representative of its P_w-coset: clear the off-pattern
  // v-terms using the unit diagonal, lowest order first.
  ShapePattern sp = shape_pattern(w);
  auto i_allowed = [&](int a, int k, int d) {
    const auto& degs = sp.allowed[sigma(a)][k];
    return std::find(degs.begin(), degs.end(), d + w.exps[a]) != degs.end();
  };
  for (int guard = 0; guard < 9 * T + 27; ++guard) {
    int bd = T, ba = -1, bk = -1;
    for (int a = 0; a < 3; ++a)
      for (int k = 0; k < 3; ++k)
        for (int d = 0; d < bd; ++d)
          if (I.m[a][k].c[d] && !i_allowed(a, k, d) && d < bd) {
            bd = d;
            ba = a;
            bk = k;
          }
    if (ba < 0) break;
    // subtract q * row bk from row ba with q = coeff * v^bd / I[bk][bk]
    TPoly q =
        -(TPoly::monomial(p, T, bd, I.m[ba][bk].c[bd]) * I.m[bk][bk].inverse_unit());
    for (int kk = 0; kk < 3; ++kk) I.m[ba][kk] = I.m[ba][kk] + q * I.m[bk][kk];
    if (ba == bk) continue;
  }
  for (int a = 0; a < 3; ++a)
    for (int k = 0; k < 3; ++k)
      for (int d = 0; d < T; ++d)
        if (I.m[a][k].c[d] && !i_allowed(a, k, d))
          throw std::domain_error("canonical_form: reduction did not converge");

  // reassemble w * I
  TMat out = TMat::zero(p, T);
  for (int a = 0; a < 3; ++a)
    for (int k = 0; k < 3; ++k) out.m[sigma(a)][k] = I.m[a][k].shifted(w.exps[a]);
  return out;
}

}  // namespace kisin3::modp
