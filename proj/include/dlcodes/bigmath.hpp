#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "errors.hpp"

namespace dlcodes {

using BigInt = mpz_class;
using Rational = mpq_class;

// Standard binomial coefficient, requires 0 <= k <= m.
inline BigInt binomial(long m, long k) {
    if (k < 0 || m < 0 || k > m)
        throw precondition_error("binomial: need 0 <= k <= m");
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(m),
                 static_cast<unsigned long>(k));
    return out;
}

// Binomial coefficient under the extended convention used throughout the
// bound formulas: C(m,0) = 1 for every integer m (negative included), and
// C(m,k) = 0 for all other out-of-range (m,k).
inline BigInt binomial_ext(long m, long k) {
    if (k == 0) return 1;
    if (k < 0 || m < 0 || k > m) return 0;
    return binomial(m, k);
}

// Falling product [m]_t = m(m-1)...(m-t).  Note: t+1 factors.
inline BigInt falling_product(long m, long t) {
    if (t < 0) throw precondition_error("falling_product: t >= 0 required");
    BigInt out = 1;
    for (long i = 0; i <= t; ++i) out *= BigInt(m - i);
    return out;
}

// base^e for non-negative integer exponent.
inline Rational rational_pow(const Rational& base, long e) {
    if (e < 0) throw precondition_error("rational_pow: e >= 0 required");
    Rational out = 1;
    Rational b = base;
    for (; e > 0; e >>= 1) {
        if (e & 1) out *= b;
        b *= b;
    }
    out.canonicalize();
    return out;
}

inline BigInt integer_pow(const BigInt& base, unsigned long e) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

// Parses "3", "0.5", "1/3", "-0.25" into an exact rational.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw parse_error("empty rational literal");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        try {
            Rational r(text);
            r.canonicalize();
            return r;
        } catch (const std::invalid_argument&) {
            throw parse_error("bad rational literal: " + text);
        }
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) {
        try {
            return Rational(BigInt(text));
        } catch (const std::invalid_argument&) {
            throw parse_error("bad integer literal: " + text);
        }
    }
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::size_t frac_len = text.size() - dot - 1;
    if (frac_len == 0 || digits.empty())
        throw parse_error("bad decimal literal: " + text);
    try {
        Rational r(BigInt(digits), integer_pow(10, frac_len));
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw parse_error("bad decimal literal: " + text);
    }
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

} // namespace dlcodes
