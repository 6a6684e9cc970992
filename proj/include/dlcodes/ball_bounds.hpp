#pragma once

#include "bigmath.hpp"
#include "sequence.hpp"

namespace dlcodes {

// Lower/upper bracket for a ball size, with the exact value when one is
// known.  Crude lower bounds are rationals and are deliberately not floored.
struct SizeBounds {
    Rational lower = 0;           // best structured lower bound
    Rational lower_crude = 0;     // crude product-form lower bound
    BigInt upper = 0;
    bool lower_applicable = false;
    bool lower_crude_applicable = false;
    bool has_exact = false;
    BigInt exact = 0;
};

namespace detail {

// ((num)/(c*k))^k with the "zero errors -> factor 1" convention.
inline Rational conv_pow(long num, long c, long k) {
    if (k == 0) return 1;
    return rational_pow(Rational(num, c * k), k);
}

} // namespace detail

// |B_{1,1}(x)| = r^2 - 4 r1' - r1'' - r1_side - r1_pair - r2_in - r1_rot.
// The r1_rot term corrects an overcount on alphabets with q >= 3: each
// length-1 double run with a_i = a_{i+3}, a_i != a_{i+2} makes two
// deletion-transposition balls share one extra word (witness: 0120 over
// {0,1,2} has 11 reachable words, not 12).
inline BigInt b11_size_exact(const RunStats& st) {
    if (st.n < 2) throw precondition_error("exact B_{1,1} size requires n >= 2");
    return BigInt(st.r) * st.r - 4 * st.r1_prime - st.r1_dprime - st.r1_side - st.r1_pair -
           st.r2_in - st.r1_rot;
}

// Piecewise lower bound on |B_{1,1}(x)| by the number of interior
// length-1 runs with equal neighbors.
inline BigInt b11_size_lower(const RunStats& st) {
    if (st.n < 2) throw precondition_error("B_{1,1} lower bound requires n >= 2");
    const long r = st.r;
    if (st.r1_prime == 0) return std::max(r * (r - 1) - st.r1_rot, 1L);
    if (st.r1_prime == 1) return std::max(r * (r - 2) - st.r1_rot, 1L);
    return std::max(r * (r - 5) + 9 - st.r1_rot, 1L);
}

// Lower bound on the number of words reachable by exactly t simultaneous
// transpositions: sum_i C(fl(r/2), i) C(fl(r/2)-2i-1, t-i).
inline BigInt simultaneous_trans_lower(long r, long t) {
    if (t < 0) throw precondition_error("t must be non-negative");
    if (r < 2 * t + 1) throw precondition_error("simultaneous bound requires r >= 2t+1");
    const long fl = r / 2;
    BigInt out = 0;
    for (long i = 0; i <= t; ++i) out += binomial_ext(fl, i) * binomial_ext(fl - 2 * i - 1, t - i);
    return out;
}

// The simplified companions C(fl(r/2), t) and ((r-1)/2t)^t.
inline BigInt simultaneous_trans_lower_binomial(long r, long t) {
    if (r < 2 * t + 1) throw precondition_error("simultaneous bound requires r >= 2t+1");
    return binomial_ext(r / 2, t);
}

inline Rational simultaneous_trans_lower_crude(long r, long t) {
    if (r < 2 * t + 1) throw precondition_error("simultaneous bound requires r >= 2t+1");
    return detail::conv_pow(r - 1, 2, t);
}

// C(r-s+1, s) <= sum_i C(r-s, i) <= |D_s(x)| <= C(r+s-1, s).
inline SizeBounds deletion_ball_bounds(long r, long s) {
    if (s < 0) throw precondition_error("s must be non-negative");
    SizeBounds b;
    BigInt lo = 0;
    for (long i = 0; i <= s; ++i) lo += binomial_ext(r - s, i);
    b.lower = Rational(lo);
    b.lower_crude = Rational(binomial_ext(r - s + 1, s));
    b.upper = binomial_ext(r + s - 1, s);
    b.lower_applicable = true;
    b.lower_crude_applicable = true;
    return b;
}

// r ((r-4t-3)/4t)^t <= r sum_i C(m,i)C(m-2i-1,t-i) <= |B_{1,t}| <= r^2 prod(r+2i),
// with m = fl((r-4t-1)/4); lower bounds need r >= 8t+3.
inline SizeBounds b1t_bounds(long r, long t) {
    if (t < 1) throw precondition_error("b1t bounds require t >= 1");
    SizeBounds b;
    BigInt up = BigInt(r) * r;
    for (long i = 1; i <= t - 1; ++i) up *= (r + 2 * i);
    b.upper = up;
    if (r >= 8 * t + 3) {
        const long m = (r - 4 * t - 1) / 4;
        BigInt sum = 0;
        for (long i = 0; i <= t; ++i)
            sum += binomial_ext(m, i) * binomial_ext(m - 2 * i - 1, t - i);
        b.lower = Rational(BigInt(r) * sum);
        b.lower_crude = Rational(r) * detail::conv_pow(r - 4 * t - 3, 4, t);
        b.lower_applicable = true;
        b.lower_crude_applicable = true;
    }
    return b;
}

// Upper C(r+s-1,s) prod_{i<t}(r+2i); structured lower (r >= 4t+2)
// sum_i C(fl(r/2)-s, i) * sum_j C(cl((r-2)/4), j) C(cl((r-2)/4)-2j-1, t-j);
// crude lower (r >= max{4s+1, 4t+2}) ((r-1-2s)/2s)^s ((r-2)/4t)^t.
inline SizeBounds bst_bounds(long r, long s, long t) {
    if (s < 0 || t < 0) throw precondition_error("counts must be non-negative");
    SizeBounds b;
    BigInt up = binomial_ext(r + s - 1, s);
    for (long i = 0; i <= t - 1; ++i) up *= (r + 2 * i);
    b.upper = up;
    if (s == 0 && t == 0) {
        b.lower = b.lower_crude = 1;
        b.lower_applicable = b.lower_crude_applicable = true;
        return b;
    }
    if (r >= 4 * t + 2) {
        const long c = (r - 2 + 3) / 4;  // cl((r-2)/4)
        BigInt del_sum = 0;
        for (long i = 0; i <= s; ++i) del_sum += binomial_ext(r / 2 - s, i);
        BigInt tr_sum = 0;
        for (long j = 0; j <= t; ++j)
            tr_sum += binomial_ext(c, j) * binomial_ext(c - 2 * j - 1, t - j);
        b.lower = Rational(del_sum * tr_sum);
        b.lower_applicable = true;
    }
    if (r >= std::max(4 * s + 1, 4 * t + 2)) {
        b.lower_crude = detail::conv_pow(r - 1 - 2 * s, 2, s) * detail::conv_pow(r - 2, 4, t);
        b.lower_crude_applicable = true;
    }
    return b;
}

// |B^{(q)}_{0,sI,0,0}| = sum_i C(n+sI, i)(q-1)^i; center-independent.
inline BigInt insertion_ball_size(long n, long q, long s_ins) {
    if (n < 0 || s_ins < 0) throw precondition_error("insertion ball size: bad arguments");
    BigInt out = 0;
    for (long i = 0; i <= s_ins; ++i)
        out += binomial_ext(n + s_ins, i) * integer_pow(q - 1, static_cast<unsigned long>(i));
    return out;
}

// |B^{(q)}_{0,0,0,tS}| = sum_i C(n, i)(q-1)^i.
inline BigInt substitution_ball_size(long n, long q, long t_sub) {
    if (n < 0 || t_sub < 0) throw precondition_error("substitution ball size: bad arguments");
    BigInt out = 0;
    for (long i = 0; i <= t_sub; ++i)
        out += binomial_ext(n, i) * integer_pow(q - 1, static_cast<unsigned long>(i));
    return out;
}

// Crude product lower bound for the four-error ball; requires
// r >= max{8sD+3, 8tT+7} and n >= max{8sI+3, 4tS+3}.
inline Rational damerau_ball_lower(long n, long r, long q, long s_del, long s_ins, long t_trans,
                                   long t_sub) {
    if (r < std::max(8 * s_del + 3, 8 * t_trans + 7))
        throw precondition_error("damerau lower bound requires r >= max{8sD+3, 8tT+7}");
    if (n < std::max(8 * s_ins + 3, 4 * t_sub + 3))
        throw precondition_error("damerau lower bound requires n >= max{8sI+3, 4tS+3}");
    return rational_pow(q - 1, s_ins + t_sub) * detail::conv_pow(n - 3 - 4 * s_ins, 4, s_ins) *
           detail::conv_pow(n - 3, 4, t_sub) * detail::conv_pow(r - 3 - 4 * s_del, 4, s_del) *
           detail::conv_pow(r - 7, 8, t_trans);
}

// The binomial-product form from the same construction (sharper).
inline Rational damerau_ball_lower_binomial(long n, long r, long q, long s_del, long s_ins,
                                            long t_trans, long t_sub) {
    if (r < std::max(8 * s_del + 3, 8 * t_trans + 7))
        throw precondition_error("damerau lower bound requires r >= max{8sD+3, 8tT+7}");
    if (n < std::max(8 * s_ins + 3, 4 * t_sub + 3))
        throw precondition_error("damerau lower bound requires n >= max{8sI+3, 4tS+3}");
    const long n4 = n / 4, r4 = r / 4;
    BigInt ins = 0, sub = 0, del = 0;
    for (long i = 0; i <= s_ins; ++i)
        ins += binomial_ext(n4 + s_ins, i) * integer_pow(q - 1, static_cast<unsigned long>(i));
    for (long i = 0; i <= t_sub; ++i)
        sub += binomial_ext(n4, i) * integer_pow(q - 1, static_cast<unsigned long>(i));
    for (long i = 0; i <= s_del; ++i) del += binomial_ext(r4 - s_del, i);
    return Rational(ins * sub * del) * detail::conv_pow(r4 - 1, 2, t_trans);
}

// Crude lower bound for the asymmetric-shift ball (q = 2); requires
// r >= max{4s+1, 8t+ + 2}.
inline Rational asymmetric_ball_lower(long r, long s, long t_plus, long t_minus) {
    if (r < std::max(4 * s + 1, 8 * t_plus + 2))
        throw precondition_error("asymmetric lower bound requires r >= max{4s+1, 8t+ +2}");
    return detail::conv_pow(r - 1 - 2 * s, 2, s) * detail::conv_pow(r - 2, 4, t_plus) *
           detail::conv_pow(r - 2 - 8 * t_plus, 4, t_minus);
}

// Binomial form of the same bound, with r1 read as fl(r/2).
inline Rational asymmetric_ball_lower_binomial(long r, long s, long t_plus, long t_minus) {
    if (r < std::max(4 * s + 1, 8 * t_plus + 2))
        throw precondition_error("asymmetric lower bound requires r >= max{4s+1, 8t+ +2}");
    const long r1 = r / 2;
    const long h = ((r + 1) / 2) / 2;  // fl(cl(r/2)/2)
    BigInt del = 0;
    for (long i = 0; i <= s; ++i) del += binomial_ext(r1 - s, i);
    return Rational(del * binomial_ext(h, t_plus) * binomial_ext(h - 2 * t_plus, t_minus));
}

} // namespace dlcodes
