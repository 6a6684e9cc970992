#pragma once

#include <optional>
#include <random>
#include <string>

#include "balls.hpp"
#include "bigmath.hpp"
#include "channel.hpp"
#include "code_bounds.hpp"
#include "sequence.hpp"

namespace dlcodes {

enum class WeightKind { W_1D1T, W_1DTT, W_SDTT, W_EXTENDED, W_ASYMMETRIC };

inline std::string to_string(WeightKind k) {
    switch (k) {
        case WeightKind::W_1D1T: return "w-1d1t";
        case WeightKind::W_1DTT: return "w-1dtt";
        case WeightKind::W_SDTT: return "w-sdtt";
        case WeightKind::W_EXTENDED: return "w-extended";
        case WeightKind::W_ASYMMETRIC: return "w-asymmetric";
    }
    return "?";
}

inline WeightKind parse_weight_kind(const std::string& s) {
    if (s == "w-1d1t") return WeightKind::W_1D1T;
    if (s == "w-1dtt") return WeightKind::W_1DTT;
    if (s == "w-sdtt") return WeightKind::W_SDTT;
    if (s == "w-extended") return WeightKind::W_EXTENDED;
    if (s == "w-asymmetric") return WeightKind::W_ASYMMETRIC;
    throw parse_error("unknown weight scheme '" + s + "'");
}

// A rule y -> w_y that depends on y only through its run count (and, for the
// four-error scheme, the center length n).  `scale` != 1 produces the
// deliberately broken negative-control variant.
struct WeightScheme {
    WeightKind kind = WeightKind::W_1D1T;
    ChannelSpec channel;  // the channel this certificate covers
    long q = 2;
    long n = 0;  // center length; used by the n-dependent factor
    Rational scale = 1;

    long threshold() const {
        switch (kind) {
            case WeightKind::W_1D1T: return 4;
            case WeightKind::W_1DTT: return 10 * channel.t + 2;
            case WeightKind::W_SDTT: return r_threshold_sdtt(channel.s, channel.t) - 1;
            case WeightKind::W_EXTENDED:
                return std::max(8 * channel.s_del + 3, 8 * channel.t_trans + 7) +
                       2 * channel.s_ins + 2 * channel.t_sub + 2 * channel.t_trans - 1;
            case WeightKind::W_ASYMMETRIC:
                return std::max(4 * channel.s + 1, 8 * channel.t_plus + 2) + 2 * channel.t_plus +
                       2 * channel.t_minus - 1;
        }
        return 0;
    }

    // Weight of a member with r runs: 1 below the threshold, otherwise the
    // reciprocal of the channel's ball-size lower bound at that run count.
    // The reciprocal is clamped at 1 so the weight never exceeds 1 even where
    // the product form degenerates (a zero factor can occur right at the
    // asymmetric threshold); raising a weight only helps the covering side.
    Rational weight(long r) const {
        Rational denom = 1;
        if (r > threshold()) {
            switch (kind) {
                case WeightKind::W_1D1T:
                    denom = Rational((r - 2) * (r - 7) + 9);
                    break;
                case WeightKind::W_1DTT: {
                    const long t = channel.t;
                    denom = Rational(r - 2 * t) * rational_pow(Rational(r - 6 * t - 3, 4 * t), t);
                    break;
                }
                case WeightKind::W_SDTT: {
                    const long s = channel.s, t = channel.t;
                    denom = rational_pow(Rational(r - 2 * s - 2 * t - 1, 2 * s), s) *
                            rational_pow(Rational(r - 2 * t - 2, 4 * t), t);
                    break;
                }
                case WeightKind::W_EXTENDED: {
                    const long sD = channel.s_del, sI = channel.s_ins;
                    const long tT = channel.t_trans, tS = channel.t_sub;
                    const long rs = r - 2 * sI - 2 * tS - 2 * tT;
                    denom = rational_pow(q - 1, sI + tS);
                    if (sI > 0) denom *= rational_pow(Rational(n - 3 - 4 * sI, 4 * sI), sI);
                    if (tS > 0) denom *= rational_pow(Rational(n - 3, 4 * tS), tS);
                    if (sD > 0) denom *= rational_pow(Rational(rs - 3 - 4 * sD, 4 * sD), sD);
                    if (tT > 0) denom *= rational_pow(Rational(rs - 7, 8 * tT), tT);
                    break;
                }
                case WeightKind::W_ASYMMETRIC: {
                    const long s = channel.s, tp = channel.t_plus, tm = channel.t_minus;
                    const long rs = r - 2 * tp - 2 * tm;
                    if (s > 0) denom *= rational_pow(Rational(rs - 1 - 2 * s, 2 * s), s);
                    if (tp > 0) denom *= rational_pow(Rational(rs - 2, 4 * tp), tp);
                    if (tm > 0) denom *= rational_pow(Rational(rs - 2 - 8 * tp, 4 * tm), tm);
                    break;
                }
            }
        }
        Rational w = denom <= 1 ? Rational(1) : 1 / denom;
        w *= scale;
        w.canonicalize();
        return w;
    }
};

inline WeightScheme make_weight_scheme(WeightKind kind, const ChannelSpec& channel, long n,
                                       long q) {
    WeightScheme s;
    s.kind = kind;
    s.channel = channel;
    s.n = n;
    s.q = q;
    switch (kind) {
        case WeightKind::W_1D1T:
            if (channel.kind != ChannelKind::DelTrans || channel.s != 1 || channel.t != 1)
                throw precondition_error("w-1d1t requires the (s=1, t=1) del-trans channel");
            break;
        case WeightKind::W_1DTT:
            if (channel.kind != ChannelKind::DelTrans || channel.s != 1 || channel.t < 1)
                throw precondition_error("w-1dtt requires the (s=1, t>=1) del-trans channel");
            break;
        case WeightKind::W_SDTT:
            if (channel.kind != ChannelKind::DelTrans || channel.s < 1 || channel.t < 1)
                throw precondition_error("w-sdtt requires the (s,t >= 1) del-trans channel");
            break;
        case WeightKind::W_EXTENDED:
            if (channel.kind != ChannelKind::Damerau)
                throw precondition_error("w-extended requires the damerau channel");
            break;
        case WeightKind::W_ASYMMETRIC:
            if (channel.kind != ChannelKind::Asymmetric)
                throw precondition_error("w-asymmetric requires the asymmetric channel");
            break;
    }
    return s;
}

// Covering-constraint verification report: min over centers x of
// sum_{y in B(x)} w_y, with a witness attaining it, plus the total weight
// (a valid code-size upper bound whenever feasible).
struct CertificateReport {
    ChannelSpec channel;
    long n = 0;
    long q = 2;
    WeightKind kind = WeightKind::W_1D1T;
    Rational min_cover = 0;
    Rational total = 0;
    bool feasible = false;
    std::optional<Sequence> witness;
    long centers_checked = 0;
};

struct CheckMode {
    bool exhaustive = true;
    long samples = 0;
    std::uint64_t seed = 0;

    static CheckMode Exhaustive() { return {true, 0, 0}; }
    static CheckMode Sample(long k, std::uint64_t seed) { return {false, k, seed}; }
};

namespace detail {

inline bool next_word(std::vector<std::uint8_t>& w, int q) {
    for (std::size_t i = w.size(); i-- > 0;) {
        if (w[i] + 1 < q) {
            ++w[i];
            std::fill(w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end(), 0);
            return true;
        }
        w[i] = 0;
    }
    return false;
}

} // namespace detail

// sum_y w_y over all members y, in closed form over the run-count census.
inline Rational certificate_bound(const WeightScheme& scheme) {
    const long m = scheme.channel.member_length(static_cast<int>(scheme.n));
    if (m < 0) throw precondition_error("channel removes more symbols than the length provides");
    if (m == 0) return scheme.weight(0);
    Rational total = 0;
    for (long r = 1; r <= m; ++r)
        total += Rational(count_sequences_with_runs(m, scheme.q, r)) * scheme.weight(r);
    total.canonicalize();
    return total;
}

inline Rational cover_sum(const WeightScheme& scheme, const Sequence& x) {
    const Ball ball = enumerate_ball(x, scheme.channel);
    Rational sum = 0;
    for (const auto& y : ball.members) sum += scheme.weight(run_count(y));
    sum.canonicalize();
    return sum;
}

inline CertificateReport certificate_check(const WeightScheme& scheme, const CheckMode& mode) {
    CertificateReport rep;
    rep.channel = scheme.channel;
    rep.n = scheme.n;
    rep.q = scheme.q;
    rep.kind = scheme.kind;
    rep.total = certificate_bound(scheme);
    bool first = true;
    auto consider = [&](const Sequence& x) {
        const Rational sum = cover_sum(scheme, x);
        ++rep.centers_checked;
        if (first || sum < rep.min_cover) {
            rep.min_cover = sum;
            rep.witness = x;
            first = false;
        }
    };
    if (mode.exhaustive) {
        std::vector<std::uint8_t> w(static_cast<std::size_t>(scheme.n), 0);
        do {
            consider(Sequence(w, static_cast<int>(scheme.q)));
        } while (detail::next_word(w, static_cast<int>(scheme.q)));
    } else {
        std::mt19937_64 rng(mode.seed);
        std::uniform_int_distribution<int> dist(0, static_cast<int>(scheme.q) - 1);
        for (long i = 0; i < mode.samples; ++i) {
            std::vector<std::uint8_t> w(static_cast<std::size_t>(scheme.n));
            for (auto& c : w) c = static_cast<std::uint8_t>(dist(rng));
            consider(Sequence(w, static_cast<int>(scheme.q)));
        }
    }
    rep.feasible = !first && rep.min_cover >= 1;
    return rep;
}

} // namespace dlcodes
