#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace kisin3 {

using Int = mpz_class;
using Rat = mpq_class;

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// p-adic valuation of a nonzero rational; throws on 0.
inline long padic_val(const Rat& x, const Int& p) {
  if (x == 0) throw std::invalid_argument("padic_val of zero");
  long v = 0;
  Int num = x.get_num(), den = x.get_den(), q, r;
  for (;;) {
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
    if (r != 0) break;
    num = q;
    ++v;
  }
  for (;;) {
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    if (r != 0) break;
    den = q;
    --v;
  }
  return v;
}

// Residue of x mod p; requires the denominator to be prime to p.
inline Int residue_mod(const Rat& x, const Int& p) {
  Int num = x.get_num() % p, den = x.get_den() % p, inv;
  if (num < 0) num += p;
  if (den < 0) den += p;
  if (den == 0) throw std::domain_error("residue_mod: denominator divisible by p");
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
    throw std::domain_error("residue_mod: denominator not invertible");
  return (num * inv) % p;
}

}  // namespace kisin3
