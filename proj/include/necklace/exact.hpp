#pragma once

/**
 * @file exact.hpp
 * @brief Exact scalars: arbitrary precision integers and reduced rationals.
 *
 * Both are thin aliases over GMP's C++ classes. mpq_class keeps every value
 * canonical (gcd(num, den) = 1, den > 0) as long as constructions from a
 * raw numerator/denominator pair go through make_rational().
 */

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "necklace/errors.hpp"

namespace necklace {

using BigInteger = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const BigInteger& num, const BigInteger& den) {
    if (den == 0) throw InputError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const BigInteger& v) { return v.get_str(); }

/// "p/q" in lowest terms, or "p" when the denominator is 1.
inline std::string to_string(const Rational& v) { return v.get_str(); }

/// C(m, k); zero when k > m.
inline BigInteger binomial(std::uint64_t m, std::uint64_t k) {
    BigInteger out;
    mpz_bin_uiui(out.get_mpz_t(), m, k);
    return out;
}

/// C(m, k) for a big top argument; zero when k > m or m < 0.
inline BigInteger binomial(const BigInteger& m, std::uint64_t k) {
    if (m < 0) return 0;
    BigInteger out;
    mpz_bin_ui(out.get_mpz_t(), m.get_mpz_t(), k);
    return out;
}

inline BigInteger factorial(std::uint64_t m) {
    BigInteger out;
    mpz_fac_ui(out.get_mpz_t(), m);
    return out;
}

inline bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

/// Parses a decimal integer; throws InputError on junk.
inline BigInteger parse_integer(const std::string& text) {
    BigInteger v;
    if (text.empty() || v.set_str(text, 10) != 0) {
        throw InputError("not an integer: '" + text + "'");
    }
    return v;
}

}  // namespace necklace
