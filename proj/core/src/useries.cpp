#include "kisin3/useries.hpp"

#include <stdexcept>

namespace kisin3::series {

USeries operator+(const USeries& a, const USeries& b) {
  USeries r(std::max(a.trunc, b.trunc));
  for (int i = 0; i <= r.trunc; ++i) {
    if (i <= a.trunc) r.c[i] += a.c[i];
    if (i <= b.trunc) r.c[i] += b.c[i];
  }
  return r;
}

USeries operator-(const USeries& a, const USeries& b) {
  USeries r(std::max(a.trunc, b.trunc));
  for (int i = 0; i <= r.trunc; ++i) {
    if (i <= a.trunc) r.c[i] += a.c[i];
    if (i <= b.trunc) r.c[i] -= b.c[i];
  }
  return r;
}

USeries operator*(const USeries& a, const USeries& b) {
  USeries r(std::max(a.trunc, b.trunc));
  for (int i = 0; i <= a.trunc && i <= r.trunc; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j <= b.trunc && i + j <= r.trunc; ++j) {
      if (b.c[j] == 0) continue;
      r.c[i + j] += a.c[i] * b.c[j];
    }
  }
  return r;
}

USeries USeries::operator-() const {
  USeries r = *this;
  for (auto& x : r.c) x = -x;
  return r;
}

USeries USeries::scaled(const Rat& s) const {
  USeries r = *this;
  for (auto& x : r.c) x *= s;
  return r;
}

USeries USeries::theta() const {
  USeries r(trunc);
  for (int i = 1; i <= trunc; ++i) r.c[i] = c[i] * Rat(i);
  return r;
}

USeries USeries::frobenius(long p) const {
  USeries r(trunc);
  for (int i = 0; i <= trunc; ++i) {
    if (c[i] == 0) continue;
    long deg = i * p;
    if (deg <= trunc) r.c[deg] = c[i];
  }
  return r;
}

USeries USeries::inverse() const {
  if (c.empty() || c[0] == 0) throw std::domain_error("USeries: non-unit");
  USeries r(trunc);
  Rat inv0 = 1 / c[0];
  r.c[0] = inv0;
  for (int n = 1; n <= trunc; ++n) {
    Rat acc(0);
    for (int k = 1; k <= n; ++k) acc += c[k] * r.c[n - k];
    r.c[n] = -inv0 * acc;
  }
  return r;
}

int USeries::u_valuation() const {
  for (int i = 0; i <= trunc; ++i)
    if (c[i] != 0) return i;
  return trunc + 1;
}

std::optional<long> USeries::min_p_valuation(const Int& p) const {
  std::optional<long> best;
  for (const auto& x : c) {
    if (x == 0) continue;
    long v = padic_val(x, p);
    if (!best || v < *best) best = v;
  }
  return best;
}

Rat USeries::eval_v_minus_p(int e, const Rat& p) const {
  Rat acc(0), mp = -p;
  for (int i = 0; i <= trunc; ++i) {
    if (c[i] == 0) continue;
    if (i % e != 0) throw std::domain_error("eval_v_minus_p: exponent not multiple of e");
    Rat pw(1);
    for (int k = 0; k < i / e; ++k) pw *= mp;
    acc += c[i] * pw;
  }
  return acc;
}

UMatrix UMatrix::zero(int trunc) {
  UMatrix r;
  for (auto& row : r.m)
    for (auto& e : row) e = USeries(trunc);
  return r;
}

UMatrix UMatrix::identity(int trunc) {
  UMatrix r = zero(trunc);
  for (int i = 0; i < 3; ++i) r.m[i][i].c[0] = 1;
  return r;
}

UMatrix operator+(const UMatrix& a, const UMatrix& b) {
  UMatrix r;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) r.m[i][k] = a.m[i][k] + b.m[i][k];
  return r;
}

UMatrix operator-(const UMatrix& a, const UMatrix& b) {
  UMatrix r;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) r.m[i][k] = a.m[i][k] - b.m[i][k];
  return r;
}

UMatrix operator*(const UMatrix& a, const UMatrix& b) {
  int t = a.m[0][0].trunc;
  UMatrix r = UMatrix::zero(t);
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k)
      for (int j = 0; j < 3; ++j) r.m[i][k] = r.m[i][k] + a.m[i][j] * b.m[j][k];
  return r;
}

UMatrix UMatrix::scaled(const USeries& s) const {
  UMatrix r;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) r.m[i][k] = m[i][k] * s;
  return r;
}

UMatrix UMatrix::scaled(const Rat& s) const {
  UMatrix r;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) r.m[i][k] = m[i][k].scaled(s);
  return r;
}

UMatrix UMatrix::theta() const {
  UMatrix r;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) r.m[i][k] = m[i][k].theta();
  return r;
}

UMatrix UMatrix::frobenius(long p) const {
  UMatrix r;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) r.m[i][k] = m[i][k].frobenius(p);
  return r;
}

UMatrix UMatrix::inverse() const {
  // adjugate over the series ring, then divide by det
  auto minor2 = [&](int r0, int r1, int c0, int c1) {
    return m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
  };
  UMatrix adj;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      int r0 = (k + 1) % 3, r1 = (k + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      if (r0 > r1) std::swap(r0, r1);
      if (c0 > c1) std::swap(c0, c1);
      USeries mn = minor2(r0, r1, c0, c1);
      adj.m[i][k] = ((i + k) % 2 == 0) ? mn : -mn;
    }
  USeries det = m[0][0] * adj.m[0][0] + m[1][0] * adj.m[0][1] + m[2][0] * adj.m[0][2];
  USeries dinv = det.inverse();
  return adj.scaled(dinv);
}

int UMatrix::u_valuation() const {
  int v = m[0][0].trunc + 1;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) v = std::min(v, m[i][k].u_valuation());
  return v;
}

namespace {
USeries shift_exact(const USeries& s, long k) {
  if (k == 0) return s;
  USeries r(s.trunc);
  if (k > 0) {
    for (int i = 0; i + k <= s.trunc; ++i) r.c[i + k] = s.c[i];
  } else {
    for (int i = static_cast<int>(-k); i <= s.trunc; ++i) r.c[i + k] = s.c[i];
    for (int i = 0; i < static_cast<int>(-k) && i <= s.trunc; ++i)
      if (s.c[i] != 0) throw std::domain_error("ad_conjugate: negative u-exponent");
  }
  return r;
}
}  // namespace

UMatrix ad_conjugate(const UMatrix& M, const Perm3& s, const std::array<long, 3>& exps) {
  Perm3 si = s.inverse();
  UMatrix r;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k)
      r.m[i][k] = shift_exact(M.m[si(i)][si(k)], exps[si(i)] - exps[si(k)]);
  return r;
}

UMatrix ad_conjugate_inverse(const UMatrix& M, const Perm3& s,
                             const std::array<long, 3>& exps) {
  UMatrix r;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k)
      r.m[i][k] = shift_exact(M.m[s(i)][s(k)], exps[k] - exps[i]);
  return r;
}

USeries lambda_truncated(long p, int e, int trunc) {
  USeries acc(trunc, Rat(1));
  for (long n = 0;; ++n) {
    // factor phi^n(E(u)/p) = 1 + u^{e p^n}/p
    long deg = e;
    bool overflow = false;
    for (long i = 0; i < n; ++i) {
      deg *= p;
      if (deg > trunc) {
        overflow = true;
        break;
      }
    }
    if (overflow || deg > trunc) break;
    USeries f(trunc, Rat(1));
    f.c[deg] = Rat(1, p);
    acc = acc * f;
  }
  return acc;
}

}  // namespace kisin3::series
