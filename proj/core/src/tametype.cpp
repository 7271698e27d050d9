#include "kisin3/tametype.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kisin3::tame {

TameType::TameType(long p_, int f_, int niveau_, std::array<std::vector<int>, 3> a_)
    : p(p_), f(f_), niveau(niveau_), a(std::move(a_)) {
  if (p <= 3) throw std::invalid_argument("TameType: requires p > 3");
  if (f < 1) throw std::invalid_argument("TameType: f >= 1");
  if (niveau < 1 || niveau > 3) throw std::invalid_argument("TameType: niveau in {1,2,3}");
  for (int k = 0; k < 3; ++k) {
    if (static_cast<int>(a[k].size()) != f)
      throw std::invalid_argument("TameType: tuple length != f");
    for (int x : a[k])
      if (x < 0 || x > p - 1) throw std::invalid_argument("TameType: entry outside [0, p-1]");
  }
}

Int TameType::a_upper(int k, int j) const {
  Int acc = 0, pw = 1;
  for (int i = 0; i < f; ++i) {
    int idx = ((i - j) % f + f) % f;
    acc += Int(a[k][idx]) * pw;
    pw *= p;
  }
  return acc;
}

int genericity_level(const TameType& t) {
  long best = (t.p - 1) / 2;
  for (int j = 0; j < t.f; ++j) {
    for (int i = 0; i < 3; ++i) {
      for (int k = i + 1; k < 3; ++k) {
        long d = std::abs(static_cast<long>(t.a[i][j]) - t.a[k][j]);
        best = std::min({best, d, t.p - 1 - d});
      }
    }
  }
  return static_cast<int>(std::max(best, 0L));
}

Orientation orientation(const TameType& t) {
  if (genericity_level(t) < 3)
    throw std::domain_error("orientation: type not weakly generic");
  Orientation o;
  for (int j = 0; j < t.f; ++j) {
    std::array<Int, 3> val{t.a_upper(0, j), t.a_upper(1, j), t.a_upper(2, j)};
    Perm3 s;
    std::iota(s.p.begin(), s.p.end(), 0);
    std::sort(s.p.begin(), s.p.end(), [&](int x, int y) { return val[x] > val[y]; });
    if (val[s.p[0]] == val[s.p[1]] || val[s.p[1]] == val[s.p[2]])
      throw std::domain_error("orientation: ties in a^{(j)}");
    o.s.push_back(s);
  }
  return o;
}

TameType base_change(const TameType& t) {
  if (t.niveau == 1) return t;
  const int r = t.niveau, fp = t.f * r;
  Int pf = pow_int(Int(t.p), t.f);
  Int mod = pow_int(Int(t.p), fp) - 1;
  std::array<Int, 3> E;
  Int a0 = t.a_upper(0, 0), a1 = t.a_upper(1, 0), a2 = t.a_upper(2, 0);
  if (r == 2) {
    E = {a0 * (1 + pf), a1 + pf * a2, a2 + pf * a1};
  } else {
    E = {a0 + pf * a1 + pf * pf * a2, a1 + pf * a2 + pf * pf * a0,
         a2 + pf * a0 + pf * pf * a1};
  }
  std::array<std::vector<int>, 3> ap;
  for (int k = 0; k < 3; ++k) {
    Int e = E[k] % mod;
    ap[k].resize(fp);
    for (int i = 0; i < fp; ++i) {
      Int digit = e % t.p;
      ap[k][i] = static_cast<int>(digit.get_si());
      e /= t.p;
    }
  }
  return TameType(t.p, fp, 1, ap);
}

Orientation base_change_orientation(const TameType& t) {
  if (t.niveau == 1) return orientation(t);
  Orientation base = orientation(t);
  Perm3 s_tau = t.niveau == 2 ? Perm3::transposition(1, 2) : Perm3::cycle012();
  Orientation o;
  o.s.resize(t.f * t.niveau);
  for (int i = 0; i < t.niveau; ++i) {
    Perm3 pw = Perm3::identity();
    for (int m = 0; m <= i; ++m) pw = pw * s_tau;
    for (int j = 0; j < t.f; ++j) o.s[j + i * t.f] = pw * base.s[j];
  }
  return o;
}

}  // namespace kisin3::tame
