#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include <dlcodes/certificates.hpp>
#include <dlcodes/code_bounds.hpp>

#include "oracles.hpp"

using namespace dlcodes;

TEST_CASE("run census counts every word exactly once") {
    CHECK(count_sequences_with_runs(1, 2, 1) == 2);
    CHECK(count_sequences_with_runs(4, 2, 2) == 6);
    CHECK(count_sequences_with_runs(4, 2, 5) == 0);
    CHECK(count_sequences_with_runs(3, 3, 3) == 12);
    for (long q : {2L, 3L, 4L})
        for (long m = 1; m <= 20; ++m) {
            BigInt total = 0;
            for (long r = 1; r <= m; ++r) total += count_sequences_with_runs(m, q, r);
            REQUIRE(total == integer_pow(q, static_cast<unsigned long>(m)));
        }
    // and the census agrees with direct run counting at small m
    for (long m = 1; m <= 8; ++m) {
        std::vector<long> hist(static_cast<std::size_t>(m) + 1, 0);
        for (const auto& x : oracle::all_words(static_cast<int>(m), 3))
            ++hist[static_cast<std::size_t>(run_count(x))];
        for (long r = 1; r <= m; ++r)
            REQUIRE(count_sequences_with_runs(m, 3, r) == hist[static_cast<std::size_t>(r)]);
    }
}

TEST_CASE("nu coefficients") {
    CHECK(nu_1d1t(4) == Rational(42, 5));
    CHECK_THROWS_AS(nu_1d1t(3), precondition_error);
    CHECK(falling_product(15, 1) == 210);
    CHECK(r_threshold_sdtt(1, 1) == 8);
    CHECK(nu_1dtt(1, 12) == Rational(7, 2));
    CHECK_THROWS_AS(nu_1dtt(1, 11), precondition_error);
    CHECK(nu_sdtt(1, 1, 7) == Rational(22, 7));  // [12]_1 / (6*7)
    CHECK_THROWS_AS(nu_sdtt(1, 1, 6), precondition_error);
}

TEST_CASE("run-count weights") {
    const ChannelSpec dt11 = ChannelSpec::del_trans(1, 1);
    const WeightScheme w11 = make_weight_scheme(WeightKind::W_1D1T, dt11, 10, 2);
    CHECK(w11.weight(5) == Rational(1, 3));
    CHECK(w11.weight(4) == Rational(1));
    CHECK(w11.weight(1) == Rational(1));
    const WeightScheme wsdtt = make_weight_scheme(WeightKind::W_SDTT, dt11, 14, 2);
    CHECK(wsdtt.weight(12) == Rational(1, 7));
    // pairing errors
    CHECK_THROWS_AS(make_weight_scheme(WeightKind::W_1D1T, ChannelSpec::del_trans(1, 2), 10, 2),
                    precondition_error);
    CHECK_THROWS_AS(make_weight_scheme(WeightKind::W_EXTENDED, dt11, 10, 2), precondition_error);
    CHECK_THROWS_AS(make_weight_scheme(WeightKind::W_ASYMMETRIC, dt11, 10, 2),
                    precondition_error);
}

namespace {

Rational brute_total(const WeightScheme& scheme) {
    const long m = scheme.channel.member_length(static_cast<int>(scheme.n));
    Rational total = 0;
    for (const auto& y : oracle::all_words(static_cast<int>(m), static_cast<int>(scheme.q)))
        total += scheme.weight(run_count(y));
    total.canonicalize();
    return total;
}

struct SchemeCase {
    WeightKind kind;
    ChannelSpec channel;
};

std::vector<SchemeCase> scheme_cases() {
    return {
        {WeightKind::W_1D1T, ChannelSpec::del_trans(1, 1)},
        {WeightKind::W_1DTT, ChannelSpec::del_trans(1, 1)},
        {WeightKind::W_SDTT, ChannelSpec::del_trans(1, 1)},
        {WeightKind::W_EXTENDED, ChannelSpec::damerau(1, 0, 0, 0)},
        {WeightKind::W_ASYMMETRIC, ChannelSpec::asymmetric(1, 0, 0)},
        {WeightKind::W_ASYMMETRIC, ChannelSpec::asymmetric(1, 1, 1)},
    };
}

} // namespace

TEST_CASE("closed-form weight totals match brute force") {
    CHECK(certificate_bound(make_weight_scheme(WeightKind::W_1D1T,
                                               ChannelSpec::del_trans(1, 1), 8, 2)) ==
          Rational(4348, 45));
    for (const auto& sc : scheme_cases())
        for (long n = 2; n <= 12; ++n)
            REQUIRE(certificate_bound(make_weight_scheme(sc.kind, sc.channel, n, 2)) ==
                    brute_total(make_weight_scheme(sc.kind, sc.channel, n, 2)));
}

TEST_CASE("covering certificates are feasible at desk scale") {
    for (const auto& sc : scheme_cases())
        for (long n = 2; n <= 12; ++n) {
            const WeightScheme scheme = make_weight_scheme(sc.kind, sc.channel, n, 2);
            const CertificateReport rep = certificate_check(scheme, CheckMode::Exhaustive());
            REQUIRE(rep.feasible);
            REQUIRE(rep.min_cover >= 1);
            REQUIRE(rep.witness.has_value());
            REQUIRE(rep.centers_checked == (1L << n));
            // the witness attains the reported minimum
            REQUIRE(cover_sum(scheme, *rep.witness) == rep.min_cover);
        }
}

TEST_CASE("halved weights break the covering constraint") {
    WeightScheme scheme =
        make_weight_scheme(WeightKind::W_1D1T, ChannelSpec::del_trans(1, 1), 8, 2);
    scheme.scale = Rational(1, 2);
    // a singleton-ball center now sums to 1/2 < 1
    const CertificateReport rep = certificate_check(scheme, CheckMode::Exhaustive());
    CHECK_FALSE(rep.feasible);
    CHECK(rep.min_cover < 1);
    REQUIRE(rep.witness.has_value());
    CHECK(cover_sum(scheme, *rep.witness) == rep.min_cover);
    // sampled mode is deterministic under a fixed seed
    const CertificateReport s1 = certificate_check(scheme, CheckMode::Sample(64, 7));
    const CertificateReport s2 = certificate_check(scheme, CheckMode::Sample(64, 7));
    CHECK(s1.min_cover == s2.min_cover);
    CHECK(s1.centers_checked == 64);
}

TEST_CASE("one-deletion-one-transposition bound") {
    const BoundValue b = bound_1d1t(2, 4, Rational(1, 2), 10);
    CHECK(b.coefficient == Rational(126, 5));
    CHECK(b.denominator == 90);
    CHECK(b.threshold == 7);
    CHECK(b.valid);
    CHECK(b.value() == Rational(126, 5) * Rational(1024, 90));
    CHECK_FALSE(bound_1d1t(2, 4, Rational(1, 2), 5).valid);
    CHECK_THROWS_AS(bound_1d1t(2, 4, Rational(2), 10), precondition_error);
    // pointwise certificate of the threshold: the remainder stays below its
    // budget for a stretch of lengths past the threshold
    const Rational m0 = nu_1d1t(4) * Rational(2, 1);
    for (long n = 7; n <= 40; ++n)
        REQUIRE(lambda_1d1t(2, 4, n) * Rational(BigInt(n) * (n - 1)) <=
                Rational(1, 2) * m0 * Rational(integer_pow(2, static_cast<unsigned long>(n))));
}

TEST_CASE("one-deletion-t-transposition and s-deletion-t-transposition bounds") {
    const long n0 = threshold_1dtt(2, 1, 12, Rational(1, 2));
    CHECK(n0 >= 16);
    const BoundValue b = bound_1dtt(2, 1, 12, Rational(1, 2), n0);
    CHECK(b.valid);
    CHECK(b.denominator == falling_product(n0, 1));
    CHECK(b.coefficient == Rational(3, 2) * Rational(8) * nu_1dtt(1, 12) / Rational(1));
    CHECK_FALSE(bound_1dtt(2, 1, 12, Rational(1, 2), n0 - 1).valid);

    const long n1 = threshold_sdtt(2, 1, 1, 8, Rational(1, 2));
    const BoundValue c = bound_sdtt(2, 1, 1, 8, Rational(1, 2), n1);
    CHECK(c.valid);
    CHECK(c.denominator == falling_product(n1, 1));
    CHECK_FALSE(bound_sdtt(2, 1, 1, 8, Rational(1, 2), n1 - 1).valid);
    // the lambda consistency behind both thresholds, spot-checked pointwise
    const Rational m1 = Rational(8) * nu_1dtt(1, 12) / Rational(1);
    for (long n = n0; n <= n0 + 10; ++n)
        REQUIRE(lambda_1dtt(2, 1, 12, n) * Rational(falling_product(n, 1)) <=
                Rational(1, 2) * m1 * Rational(integer_pow(2, static_cast<unsigned long>(n))));
    const Rational m2 = Rational(2 * 8) * nu_sdtt(1, 1, 8) / Rational(1);
    for (long n = n1; n <= n1 + 10; ++n)
        REQUIRE(lambda_sdtt(2, 1, 1, 8, n) * Rational(falling_product(n, 1)) <=
                Rational(1, 2) * m2 * Rational(integer_pow(2, static_cast<unsigned long>(n))));
}

TEST_CASE("block-channel bound") {
    const BoundValue b = block_bound(2, 1, 1, 2, 100, Rational(1, 2));
    CHECK(b.summand1 == Rational(64));
    CHECK(b.summand2 == rational_pow(Rational(121, 100), 6) / Rational(100));
    CHECK(b.coefficient == b.summand1 + b.summand2);
    CHECK(b.denominator == 10000);
    CHECK_FALSE(b.valid);  // the epsilon hypothesis fails at n = 100
    CHECK(block_bound(2, 1, 1, 2, 1000000, Rational(1, 2)).valid);
    CHECK_THROWS_AS(block_bound(2, 1, 1, 2, 100, Rational(2)), precondition_error);
    CHECK_THROWS_AS(block_bound(2, 1, 1, 2, 5, Rational(1, 2)), precondition_error);
    // a smaller mu only weakens the hypothesis requirement
    CHECK(block_bound(2, 1, 1, 2, 1000000, Rational(1, 4)).valid);
    CHECK(block_bound(2, 1, 1, 2, 1000000, Rational(1, 4)).summand1 == Rational(128));
}

TEST_CASE("redundancy intervals") {
    // upper bound equal to the whole space leaves zero redundancy
    const RedundancyBits zero = redundancy_lower(2, 5, Rational(32));
    CHECK(zero.lo <= 0.0);
    CHECK(zero.hi >= 0.0);
    CHECK(zero.hi - zero.lo < 1e-9);
    // Two-log-n asymptotics of the 1-deletion-1-transposition bound
    const long n = 10000;
    const BoundValue b = bound_1d1t(2, 4, Rational(1, 2), n);
    REQUIRE(b.valid);
    const RedundancyBits red = redundancy_lower(2, n, b.value());
    const double expect = std::log2(static_cast<double>(n) * (n - 1)) - std::log2(126.0 / 5.0);
    CHECK(red.lo <= expect + 1e-6);
    CHECK(red.hi >= expect - 1e-6);
    CHECK(red.hi - red.lo < 1e-6);
    CHECK(std::abs(expect - (2 * std::log2(static_cast<double>(n)) - std::log2(126.0 / 5.0))) <
          0.001);
}
