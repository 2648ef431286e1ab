#pragma once

#include <gmpxx.h>

#include <string>

namespace sgao {

// Exact nonnegative counts.  GMP's C++ wrapper gives us value semantics and
// operator overloading; everything downstream assumes arbitrary precision.
using BigCount = mpz_class;

inline BigCount big_pow(const BigCount& base, unsigned long exp) {
    BigCount r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline BigCount big_factorial(unsigned long n) {
    BigCount r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline BigCount big_binomial(unsigned long n, unsigned long k) {
    BigCount r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline std::string to_decimal(const BigCount& x) { return x.get_str(10); }

// Parses a base-10 integer, ignoring ',' and '_' separators so values can be
// pasted from formatted tables.
BigCount parse_big(const std::string& text);

// 4069278 -> "4,069,278".  Used by table printers.
std::string with_thousands(const BigCount& x);

}  // namespace sgao
