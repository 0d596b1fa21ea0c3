#ifndef SLMOMENT_BIGINT_HPP
#define SLMOMENT_BIGINT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "slmoment/field.hpp"

namespace slmoment {

/// Arbitrary-precision signed integer used for every count and moment.
using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt big(std::int64_t v) {
    BigInt out;
    mpz_set_si(out.get_mpz_t(), static_cast<long>(v));
    return out;
}

inline BigInt big_u(std::uint64_t v) {
    BigInt out;
    mpz_set_ui(out.get_mpz_t(), static_cast<unsigned long>(v));
    return out;
}

inline BigInt pow(const BigInt& base, unsigned long e) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

/// binom(n, k), zero when k > n or either argument is negative.
inline BigInt binomial(const BigInt& n, const BigInt& k) {
    if (sgn(k) < 0 || sgn(n) < 0 || k > n) return 0;
    BigInt out;
    mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k.get_ui());
    return out;
}

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

inline BigInt factorial(unsigned long n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

/// num / den, throwing invariant_violation unless the division is exact.
inline BigInt exact_div(const BigInt& num, const BigInt& den, const char* what) {
    if (sgn(den) == 0 || !mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw invariant_violation(std::string("inexact division: ") + what);
    BigInt out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

inline std::uint64_t to_u64(const BigInt& v) {
    if (sgn(v) < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64)
        throw usage_error("value " + v.get_str() + " does not fit in 64 bits");
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof out, 0, 0, v.get_mpz_t());
    return out;
}

}  // namespace slmoment

#endif  // SLMOMENT_BIGINT_HPP
