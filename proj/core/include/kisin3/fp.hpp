#pragma once

#include <cstdint>
#include <stdexcept>

namespace kisin3 {

// Element of the prime field F_p, p a (small) prime carried with the value.
struct Fp {
  long v = 0;
  long p = 0;  // 0 marks an exact zero usable with any modulus

  Fp() = default;
  Fp(long value, long prime) : v(((value % prime) + prime) % prime), p(prime) {}

  static Fp zero() { return {}; }
  bool is_zero() const { return v == 0; }

  friend long merge_mod(const Fp& a, const Fp& b) {
    if (a.p == 0) return b.p;
    if (b.p == 0) return a.p;
    if (a.p != b.p) throw std::invalid_argument("Fp: modulus mismatch");
    return a.p;
  }
  friend Fp operator+(const Fp& a, const Fp& b) {
    long m = merge_mod(a, b);
    if (m == 0) return {};
    return Fp(a.v + b.v, m);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    long m = merge_mod(a, b);
    if (m == 0) return {};
    return Fp(a.v - b.v, m);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    long m = merge_mod(a, b);
    if (m == 0) return {};
    return Fp(a.v * b.v, m);
  }
  Fp operator-() const { return p == 0 ? Fp{} : Fp(-v, p); }
  Fp inv() const {
    if (v == 0) throw std::domain_error("Fp: inverse of zero");
    // extended Euclid
    long a = v, m = p, x0 = 0, x1 = 1;
    while (a > 1) {
      long q = a / m;
      long t = m;
      m = a % m;
      a = t;
      t = x0;
      x0 = x1 - q * x0;
      x1 = t;
    }
    return Fp(x1, p);
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inv(); }
  bool operator==(const Fp& o) const {
    if (v == 0 && o.v == 0) return true;
    return merge_mod(*this, o) != 0 && v == o.v;
  }
};

}  // namespace kisin3
