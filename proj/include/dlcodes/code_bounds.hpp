#pragma once

#include <mpfr.h>

#include <algorithm>

#include "bigmath.hpp"
#include "errors.hpp"

namespace dlcodes {

// Number of q-ary length-m sequences with exactly r runs:
// C(m-1, r-1) q (q-1)^{r-1}.  Out-of-range r gives 0.
inline BigInt count_sequences_with_runs(long m, long q, long r) {
    if (r < 1 || r > m) return 0;
    return binomial(m - 1, r - 1) * q * integer_pow(q - 1, static_cast<unsigned long>(r - 1));
}

// nu(u) = (u+2)(u+3) / (u(u-5)+9).
inline Rational nu_1d1t(long u) {
    if (u < 4) throw precondition_error("nu(u) requires u >= 4");
    return Rational((u + 2) * (u + 3), u * (u - 5) + 9);
}

// nu(t,u) = [u+t+2]_t / ((u+2-2t)(u-6t-1)^t).
inline Rational nu_1dtt(long t, long u) {
    if (t < 1 || u < 10 * t + 2) throw precondition_error("nu(t,u) requires t >= 1, u >= 10t+2");
    Rational out(falling_product(u + t + 2, t));
    out /= Rational(BigInt(u + 2 - 2 * t) * integer_pow(u - 6 * t - 1, t));
    out.canonicalize();
    return out;
}

inline long r_threshold_sdtt(long s, long t) { return std::max(4 * s + 2 * t + 1, 6 * t + 2); }

// nu(s,t,u) = [u+2s+2t+1]_{s+t-1} / ((u-s-t+1)^s (u+s-t)^t).
inline Rational nu_sdtt(long s, long t, long u) {
    if (s < 1 || t < 1 || u < r_threshold_sdtt(s, t) - 1)
        throw precondition_error("nu(s,t,u) requires s,t >= 1, u >= r_{s,t}-1");
    Rational out(falling_product(u + 2 * s + 2 * t + 1, s + t - 1));
    out /= Rational(integer_pow(u - s - t + 1, s) * integer_pow(u + s - t, t));
    out.canonicalize();
    return out;
}

namespace detail {

inline BigInt qpow(long q, long e) { return integer_pow(q, static_cast<unsigned long>(e)); }

// sum_{r=0}^{hi} C(m, r) (q-1)^r
inline BigInt binom_qsum(long m, long q, long hi) {
    BigInt out = 0;
    for (long r = 0; r <= hi; ++r)
        out += binomial_ext(m, r) * qpow(q - 1, r);
    return out;
}

} // namespace detail

// The three lambda remainders.  Each is the full weight-census sum truncated
// at run count u+1, minus the main term's partial tail; the bound theorems
// hold once lambda(n) <= eps * main(n).
inline Rational lambda_1d1t(long q, long u, long n) {
    if (q < 2 || u < 4) throw precondition_error("lambda: q >= 2, u >= 4 required");
    if (n < u + 3) throw precondition_error("lambda: n too small");
    Rational out(BigInt(q) * detail::binom_qsum(n - 2, q, 3));
    for (long r = 4; r <= u; ++r)
        out += Rational(BigInt(q) * binomial_ext(n - 2, r) * detail::qpow(q - 1, r),
                        BigInt((r - 1) * (r - 6) + 9));
    out -= nu_1d1t(u) * Rational(BigInt(q) * detail::binom_qsum(n, q, u + 2),
                                 BigInt(n) * (n - 1) * (q - 1) * (q - 1));
    out.canonicalize();
    return out;
}

inline Rational lambda_1dtt(long q, long t, long u, long n) {
    if (q < 2 || t < 1 || u < 10 * t + 2)
        throw precondition_error("lambda: q >= 2, t >= 1, u >= 10t+2 required");
    if (n < u + t + 3) throw precondition_error("lambda: n too small");
    Rational out(BigInt(q) * detail::binom_qsum(n - 2, q, 10 * t + 1));
    const BigInt fourt = integer_pow(4 * t, static_cast<unsigned long>(t));
    const BigInt nfall = falling_product(n + t - 1, t);
    for (long r = 10 * t + 2; r <= u; ++r)
        out += Rational(BigInt(q) * fourt * falling_product(r + t + 1, t) *
                            detail::qpow(q - 1, r) * binomial_ext(n + t - 1, r + t + 1),
                        nfall * (r + 1 - 2 * t) * integer_pow(r - 6 * t - 2, t));
    out -= nu_1dtt(t, u) * Rational(BigInt(q) * fourt * detail::binom_qsum(n + t - 1, q, u + t + 1),
                                    nfall * integer_pow(q - 1, t + 1));
    out.canonicalize();
    return out;
}

inline Rational lambda_sdtt(long q, long s, long t, long u, long n) {
    const long rst = r_threshold_sdtt(s, t);
    if (q < 2 || s < 1 || t < 1 || u < rst - 1)
        throw precondition_error("lambda: q >= 2, s,t >= 1, u >= r_{s,t}-1 required");
    if (n < u + s + t + 2) throw precondition_error("lambda: n too small");
    Rational out(BigInt(q) * detail::binom_qsum(n - s - 1, q, rst - 2));
    const BigInt pre = BigInt(q) * integer_pow(2 * s, static_cast<unsigned long>(s)) *
                       integer_pow(4 * t, static_cast<unsigned long>(t));
    for (long r = rst - 1; r <= u; ++r)
        out += Rational(pre * detail::qpow(q - 1, r) * binomial_ext(n - s - 1, r),
                        integer_pow(r - 2 * s - 2 * t, s) * integer_pow(r - 1 - 2 * t, t));
    out -= nu_sdtt(s, t, u) * Rational(pre * detail::binom_qsum(n + t - 1, q, u + s + t),
                                       falling_product(n + t - 1, s + t - 1) *
                                           integer_pow(q - 1, s + t));
    out.canonicalize();
    return out;
}

// A code-size upper bound of the form coefficient * base^exponent / denominator,
// with the exponential kept symbolic so very large n stays representable.
struct BoundValue {
    Rational coefficient = 0;  // the constant in front of q^n / D(n)
    BigInt denominator = 1;    // D(n), the polynomial part, evaluated
    long base = 2;             // q
    long exponent = 0;         // n
    bool valid = false;        // hypothesis / threshold satisfied at this n
    long threshold = 0;        // smallest admissible n when one is defined
    Rational summand1 = 0;     // block bound only: the two bracket terms
    Rational summand2 = 0;

    Rational value() const {
        Rational v = coefficient * Rational(integer_pow(base, static_cast<unsigned long>(exponent)),
                                            denominator);
        v.canonicalize();
        return v;
    }
};

namespace detail {

// Smallest n0 such that lambda(n) <= eps * M0 * q^n / D(n) for every n >= n0.
// The scan is certified by the polynomial envelope
// lambda(n) * D(n) <= (u+1) q (q-1)^u n^u * 2^degD n^degD,
// which is eventually dominated by eps * M0 * q^n.
template <class Lambda, class Denom>
long threshold_scan(long q, long u, long deg_d, const Rational& eps, const Rational& m0,
                    long n_start, Lambda&& lambda, Denom&& denom) {
    if (!(eps > 0 && eps < 1)) throw precondition_error("threshold: 0 < eps < 1 required");
    const long K = u + deg_d;
    const Rational envelope_c =
        Rational(BigInt(u + 1) * q * detail::qpow(q - 1, u) * detail::qpow(2, deg_d));
    long candidate = -1;
    for (long n = n_start; n < n_start + 200000; ++n) {
        const BigInt qn = detail::qpow(q, n);
        const bool ok = lambda(n) * Rational(denom(n)) <= eps * m0 * Rational(qn);
        if (!ok) {
            candidate = -1;
            continue;
        }
        if (candidate < 0) candidate = n;
        if (n >= 2 * K + 2 &&
            envelope_c * Rational(integer_pow(n, static_cast<unsigned long>(K))) <=
                eps * m0 * Rational(qn))
            return candidate;
    }
    throw budget_error("threshold scan did not converge within 200000 lengths");
}

} // namespace detail

inline long threshold_1d1t(long q, long u, const Rational& eps) {
    return detail::threshold_scan(
        q, u, 2, eps, nu_1d1t(u) * Rational(q, (q - 1) * (q - 1)), std::max<long>(u + 3, 3),
        [&](long n) { return lambda_1d1t(q, u, n); },
        [](long n) { return BigInt(n) * (n - 1); });
}

inline long threshold_1dtt(long q, long t, long u, const Rational& eps) {
    const Rational m0 = Rational(integer_pow(4 * q * t, static_cast<unsigned long>(t))) *
                        nu_1dtt(t, u) / Rational(detail::qpow(q - 1, t + 1));
    return detail::threshold_scan(
        q, u, t + 1, eps, m0, std::max<long>(u + t + 3, 2 * t + 2),
        [&](long n) { return lambda_1dtt(q, t, u, n); },
        [&](long n) { return falling_product(n + t - 1, t); });
}

inline long threshold_sdtt(long q, long s, long t, long u, const Rational& eps) {
    const Rational m0 = Rational(integer_pow(2 * s, static_cast<unsigned long>(s)) *
                                 integer_pow(4 * q * t, static_cast<unsigned long>(t))) *
                        nu_sdtt(s, t, u) / Rational(detail::qpow(q - 1, s + t));
    return detail::threshold_scan(
        q, u, s + t, eps, m0, std::max<long>(u + s + t + 2, 2 * t + 2),
        [&](long n) { return lambda_sdtt(q, s, t, u, n); },
        [&](long n) { return falling_product(n + t - 1, s + t - 1); });
}

// (1+eps) nu(u) q / (q-1)^2 * q^n / (n(n-1)); valid for n past the threshold.
inline BoundValue bound_1d1t(long q, long u, const Rational& eps, long n) {
    if (!(eps > 0 && eps < 1)) throw precondition_error("bound: 0 < eps < 1 required");
    BoundValue b;
    b.coefficient = (1 + eps) * nu_1d1t(u) * Rational(q, (q - 1) * (q - 1));
    b.coefficient.canonicalize();
    b.denominator = BigInt(n) * (n - 1);
    b.base = q;
    b.exponent = n;
    b.threshold = threshold_1d1t(q, u, eps);
    b.valid = n >= b.threshold;
    return b;
}

inline BoundValue bound_1dtt(long q, long t, long u, const Rational& eps, long n) {
    if (!(eps > 0 && eps < 1)) throw precondition_error("bound: 0 < eps < 1 required");
    BoundValue b;
    b.coefficient = (1 + eps) * Rational(integer_pow(4 * q * t, static_cast<unsigned long>(t))) *
                    nu_1dtt(t, u) / Rational(detail::qpow(q - 1, t + 1));
    b.coefficient.canonicalize();
    b.denominator = falling_product(n + t - 1, t);
    b.base = q;
    b.exponent = n;
    b.threshold = threshold_1dtt(q, t, u, eps);
    b.valid = n >= b.threshold;
    return b;
}

inline BoundValue bound_sdtt(long q, long s, long t, long u, const Rational& eps, long n) {
    if (!(eps > 0 && eps < 1)) throw precondition_error("bound: 0 < eps < 1 required");
    BoundValue b;
    b.coefficient = (1 + eps) *
                    Rational(integer_pow(2 * s, static_cast<unsigned long>(s)) *
                             integer_pow(4 * q * t, static_cast<unsigned long>(t))) *
                    nu_sdtt(s, t, u) / Rational(detail::qpow(q - 1, s + t));
    b.coefficient.canonicalize();
    b.denominator = falling_product(n + t - 1, s + t - 1);
    b.base = q;
    b.exponent = n;
    b.threshold = threshold_sdtt(q, s, t, u, eps);
    b.valid = n >= b.threshold;
    return b;
}

namespace detail {

// Directed-rounding check of (1 - eps q/(q-1))^{s+t} (1 - b/n)^{s+t} >= mu
// with eps = sqrt(4(s+t+1) log n / (n log q)).  Returns true only when the
// inequality certainly holds.
inline bool block_hypothesis_holds(long q, long s, long t, long b, long n, const Rational& mu) {
    const long st = s + t;
    bool ok = false;
    mpfr_t ln_n, ln_q, eps, tmp, lhs;
    mpfr_inits2(128, ln_n, ln_q, eps, tmp, lhs, static_cast<mpfr_ptr>(nullptr));
    // eps rounded up at every step
    mpfr_set_si(tmp, n, MPFR_RNDU);
    mpfr_log(ln_n, tmp, MPFR_RNDU);
    mpfr_set_si(tmp, q, MPFR_RNDD);
    mpfr_log(ln_q, tmp, MPFR_RNDD);
    mpfr_mul_si(eps, ln_n, 4 * (st + 1), MPFR_RNDU);
    mpfr_div(eps, eps, ln_q, MPFR_RNDU);
    mpfr_div_si(eps, eps, n, MPFR_RNDU);
    mpfr_sqrt(eps, eps, MPFR_RNDU);
    // lhs rounded down: (1 - eps q/(q-1))^{st} (1 - b/n)^{st}
    mpfr_mul_si(tmp, eps, q, MPFR_RNDU);
    mpfr_div_si(tmp, tmp, q - 1, MPFR_RNDU);
    mpfr_si_sub(lhs, 1, tmp, MPFR_RNDD);
    if (mpfr_sgn(lhs) > 0) {
        mpfr_pow_si(lhs, lhs, st, MPFR_RNDD);
        mpfr_set_si(tmp, n - b, MPFR_RNDD);
        mpfr_div_si(tmp, tmp, n, MPFR_RNDD);
        mpfr_pow_si(tmp, tmp, st, MPFR_RNDD);
        mpfr_mul(lhs, lhs, tmp, MPFR_RNDD);
        ok = mpfr_cmp_q(lhs, mu.get_mpq_t()) >= 0;
    }
    mpfr_clears(ln_n, ln_q, eps, tmp, lhs, static_cast<mpfr_ptr>(nullptr));
    return ok;
}

} // namespace detail

// Block-channel bound ((2s)^s(4t)^t(bq)^{s+t} / (mu q^{sb} (q-1)^{s+t})
// + 1.21^{(s+t+1)b}/n) * q^n / n^{s+t}.
inline BoundValue block_bound(long q, long s, long t, long b, long n, const Rational& mu) {
    if (!(mu > 0 && mu < 1)) throw precondition_error("block bound: 0 < mu < 1 required");
    if (n < (s + 2) * b) throw precondition_error("block bound requires n >= (s+2)b");
    BoundValue out;
    out.summand1 = Rational(integer_pow(2 * s, static_cast<unsigned long>(s)) *
                            integer_pow(4 * t, static_cast<unsigned long>(t)) *
                            integer_pow(b * q, static_cast<unsigned long>(s + t))) /
                   (mu * Rational(detail::qpow(q, s * b) * detail::qpow(q - 1, s + t)));
    out.summand1.canonicalize();
    out.summand2 = rational_pow(Rational(121, 100), (s + t + 1) * b) / Rational(n);
    out.summand2.canonicalize();
    out.coefficient = out.summand1 + out.summand2;
    out.denominator = integer_pow(n, static_cast<unsigned long>(s + t));
    out.base = q;
    out.exponent = n;
    out.valid = detail::block_hypothesis_holds(q, s, t, b, n, mu);
    return out;
}

// log2(q^n / upper) with outward rounding; a display quantity only.
struct RedundancyBits {
    double lo = 0;
    double hi = 0;
};

inline RedundancyBits redundancy_lower(long q, long n, const Rational& upper) {
    if (!(upper > 0)) throw precondition_error("redundancy: upper bound must be positive");
    RedundancyBits out;
    mpfr_t lq, lu, res;
    mpfr_inits2(128, lq, lu, res, static_cast<mpfr_ptr>(nullptr));
    for (int dir = 0; dir < 2; ++dir) {
        const mpfr_rnd_t down = dir ? MPFR_RNDU : MPFR_RNDD;
        const mpfr_rnd_t up = dir ? MPFR_RNDD : MPFR_RNDU;
        mpfr_set_si(lq, q, down);
        mpfr_log2(lq, lq, down);
        mpfr_mul_si(lq, lq, n, down);
        mpfr_set_q(lu, upper.get_mpq_t(), up);
        mpfr_log2(lu, lu, up);
        mpfr_sub(res, lq, lu, down);
        if (dir == 0)
            out.lo = mpfr_get_d(res, MPFR_RNDD);
        else
            out.hi = mpfr_get_d(res, MPFR_RNDU);
    }
    mpfr_clears(lq, lu, res, static_cast<mpfr_ptr>(nullptr));
    return out;
}

} // namespace dlcodes
