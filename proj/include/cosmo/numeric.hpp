// Exact arbitrary-precision number types and small integer helpers.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cosmo {

using Int = mpz_class;
using Rat = mpq_class;

// mpq_class(num, den) does not reduce to lowest terms on its own.
inline Rat make_rat(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Int int_pow(const Int& base, unsigned long k) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), k);
    return r;
}

inline Int pow2(unsigned long k) { return int_pow(2, k); }

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// binomial(n, k) for possibly-negative n is never needed here; this variant
// returns 0 when n < k, matching the Ehrhart summation convention.
inline Int binomial_or_zero(long n, unsigned long k) {
    if (n < 0 || static_cast<unsigned long>(n) < k) return 0;
    return binomial(static_cast<unsigned long>(n), k);
}

}  // namespace cosmo
