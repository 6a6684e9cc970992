#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include <dlcodes/ball_bounds.hpp>
#include <dlcodes/balls.hpp>

#include "oracles.hpp"

using namespace dlcodes;

namespace {

Sequence seq(const std::string& text, int q) { return parse_sequence(text, q); }

Sequence alternating(int n) {
    std::vector<std::uint8_t> w;
    for (int i = 0; i < n; ++i) w.push_back(static_cast<std::uint8_t>(i % 2));
    return Sequence(w, 2);
}

} // namespace

TEST_CASE("extended binomials and falling products") {
    CHECK(binomial_ext(5, 2) == 10);
    CHECK(binomial_ext(-3, 0) == 1);  // C(m,0) = 1 for every integer m
    CHECK(binomial_ext(0, 0) == 1);
    CHECK(binomial_ext(-3, 1) == 0);
    CHECK(binomial_ext(2, 5) == 0);
    CHECK(binomial_ext(2, -1) == 0);
    CHECK(falling_product(5, 2) == 60);   // 5*4*3, t+1 factors
    CHECK(falling_product(7, 0) == 7);
    CHECK(falling_product(3, 3) == 0);
}

TEST_CASE("exact size of the 1-deletion-1-transposition ball") {
    CHECK(b11_size_exact(run_stats(seq("0201001", 3))) == 23);
    CHECK(b11_size_lower(run_stats(seq("0201001", 3))) == 15);
    CHECK(b11_size_exact(run_stats(seq("00", 2))) == 1);
    CHECK(b11_size_lower(run_stats(seq("00", 2))) == 1);
    CHECK(b11_size_exact(run_stats(seq("01", 2))) == 2);
    CHECK(b11_size_lower(run_stats(seq("010", 2))) == 3);
    CHECK(b11_size_exact(run_stats(seq("0120", 3))) == 11);
    CHECK_THROWS_AS(b11_size_exact(run_stats(seq("0", 2))), precondition_error);
}

TEST_CASE("exact formula equals enumeration for every word at desk scale") {
    for (int q : {2, 3}) {
        const int n_max = q == 2 ? 12 : 9;
        for (int n = 2; n <= n_max; ++n)
            for (const auto& x : oracle::all_words(n, q)) {
                const RunStats st = run_stats(x);
                const BigInt exact = b11_size_exact(st);
                REQUIRE(exact == del_trans_ball(x, 1, 1).size());
                REQUIRE(b11_size_lower(st) <= exact);
                if (st.r >= 3) REQUIRE(exact >= BigInt(st.r) * (st.r - 5) + 9);
            }
    }
}

TEST_CASE("simultaneous transposition lower bound") {
    CHECK(simultaneous_trans_lower(6, 2) == 4);
    CHECK(simultaneous_trans_lower(3, 1) == 1);
    CHECK(simultaneous_trans_lower(5, 0) == 1);
    CHECK(simultaneous_trans_lower_binomial(6, 2) == 3);
    CHECK(simultaneous_trans_lower_crude(9, 2) == Rational(4));
    CHECK_THROWS_AS(simultaneous_trans_lower(4, 2), precondition_error);
}

TEST_CASE("simultaneous bound holds for non-overlapping pair placement") {
    // The counting argument places t disjoint transposable pairs, so the
    // bound applies to the gap >= 2 rule; the strict gap > 2 rule can fall
    // below it.
    for (int q : {2, 3}) {
        const int n_max = q == 2 ? 10 : 8;
        for (int n = 2; n <= n_max; ++n)
            for (const auto& x : oracle::all_words(n, q)) {
                const long r = run_count(x);
                for (int t : {1, 2}) {
                    if (r < 2 * t + 1) continue;
                    const BigInt lo = simultaneous_trans_lower(r, t);
                    const auto sz =
                        transposition_ball_simultaneous(x, t, GapRule::Disjoint).size();
                    REQUIRE(lo <= BigInt(static_cast<long>(sz)));
                    REQUIRE(simultaneous_trans_lower_binomial(r, t) <= lo);
                }
            }
    }
    // strict-rule counterexample: r = 6, t = 2 gives bound 4 but only 3 words
    const Sequence x = seq("010101", 2);
    CHECK(simultaneous_trans_lower(6, 2) == 4);
    CHECK(transposition_ball_simultaneous(x, 2, GapRule::Strict).size() == 3);
    CHECK(transposition_ball_simultaneous(x, 2, GapRule::Disjoint).size() >= 4);
}

TEST_CASE("deletion ball bounds") {
    const SizeBounds b = deletion_ball_bounds(4, 2);
    CHECK(b.lower == Rational(4));
    CHECK(b.upper == 10);
    CHECK(deletion_ball_bounds(2, 1).lower == Rational(2));
    CHECK(deletion_ball_bounds(2, 1).upper == 2);  // tight on 0011
    for (int q : {2, 3}) {
        const int n_max = q == 2 ? 10 : 8;
        for (int n = 1; n <= n_max; ++n)
            for (const auto& x : oracle::all_words(n, q))
                for (int s : {1, 2}) {
                    if (s > n) continue;
                    const long r = run_count(x);
                    const SizeBounds d = deletion_ball_bounds(r, s);
                    const BigInt sz(static_cast<long>(deletion_ball(x, s).size()));
                    REQUIRE(d.lower <= Rational(sz));
                    REQUIRE(sz <= d.upper);
                    REQUIRE(d.lower_crude <= d.lower);
                }
    }
}

TEST_CASE("1-deletion t-transposition bounds") {
    const SizeBounds ex = b1t_bounds(6, 1);
    CHECK(ex.upper == 36);
    CHECK_FALSE(ex.lower_applicable);  // needs r >= 11
    const SizeBounds lo = b1t_bounds(11, 1);
    CHECK(lo.lower_crude == Rational(11));
    CHECK(lo.lower_applicable);
    for (int n = 2; n <= 14; ++n)
        for (const auto& x : oracle::all_words(n, 2)) {
            const long r = run_count(x);
            const SizeBounds b = b1t_bounds(r, 1);
            const BigInt sz(static_cast<long>(del_trans_ball(x, 1, 1).size()));
            REQUIRE(sz <= b.upper);
            if (b.lower_applicable) {
                REQUIRE(b.lower <= Rational(sz));
                REQUIRE(b.lower_crude <= Rational(sz));
            }
        }
}

TEST_CASE("s-deletion t-transposition bounds") {
    const SizeBounds b66 = bst_bounds(6, 1, 1);
    CHECK(b66.upper == 36);
    const SizeBounds b10 = bst_bounds(10, 1, 1);
    CHECK(b10.lower_crude == Rational(7));
    const SizeBounds b00 = bst_bounds(5, 0, 0);
    CHECK(b00.lower == Rational(1));
    CHECK(b00.upper == 1);
    for (int n = 2; n <= 12; ++n)
        for (const auto& x : oracle::all_words(n, 2)) {
            const long r = run_count(x);
            const SizeBounds b = bst_bounds(r, 1, 1);
            const BigInt sz(static_cast<long>(del_trans_ball(x, 1, 1).size()));
            REQUIRE(sz <= b.upper);
            if (b.lower_applicable) REQUIRE(b.lower <= Rational(sz));
            if (b.lower_crude_applicable) REQUIRE(b.lower_crude <= Rational(sz));
        }
    // deeper budgets at moderate length
    for (int n = 2; n <= 10; ++n)
        for (const auto& x : oracle::all_words(n, 2))
            for (int s : {1, 2})
                for (int t : {1, 2}) {
                    if (s > n) continue;
                    const long r = run_count(x);
                    const SizeBounds b = bst_bounds(r, s, t);
                    const BigInt sz(static_cast<long>(del_trans_ball(x, s, t).size()));
                    REQUIRE(sz <= b.upper);
                    if (b.lower_applicable) REQUIRE(b.lower <= Rational(sz));
                    if (b.lower_crude_applicable) REQUIRE(b.lower_crude <= Rational(sz));
                }
}

TEST_CASE("insertion and substitution ball sizes") {
    CHECK(insertion_ball_size(2, 2, 1) == 4);
    CHECK(insertion_ball_size(3, 3, 1) == 9);
    CHECK(substitution_ball_size(2, 2, 1) == 3);
    CHECK(substitution_ball_size(4, 2, 2) == 11);
    for (int q : {2, 3})
        for (int n = 1; n <= 6; ++n)
            for (const auto& x : oracle::all_words(n, q))
                for (int e : {1, 2}) {
                    REQUIRE(BigInt(static_cast<long>(damerau_ball(x, 0, e, 0, 0).size())) ==
                            insertion_ball_size(n, q, e));
                    REQUIRE(BigInt(static_cast<long>(damerau_ball(x, 0, 0, 0, e).size())) ==
                            substitution_ball_size(n, q, e));
                }
}

TEST_CASE("four-error ball lower bounds") {
    CHECK(damerau_ball_lower(19, 15, 2, 1, 0, 0, 0) == Rational(2));
    CHECK(damerau_ball_lower(19, 15, 2, 0, 0, 1, 0) == Rational(1));
    CHECK_THROWS_AS(damerau_ball_lower(19, 10, 2, 1, 0, 0, 0), precondition_error);
    CHECK_THROWS_AS(damerau_ball_lower(6, 15, 2, 0, 1, 0, 0), precondition_error);
    for (int n = 11; n <= 13; ++n)
        for (const auto& x : oracle::all_words(n, 2)) {
            const long r = run_count(x);
            const struct {
                int sd, si, tt, ts;
            } combos[] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {1, 0, 0, 1}, {0, 1, 0, 1}};
            for (const auto& c : combos) {
                if (r < std::max(8 * c.sd + 3, 8 * c.tt + 7)) continue;
                if (n < std::max(8 * c.si + 3, 4 * c.ts + 3)) continue;
                const Rational sz(
                    BigInt(static_cast<long>(damerau_ball(x, c.sd, c.si, c.tt, c.ts).size())));
                REQUIRE(damerau_ball_lower(n, r, 2, c.sd, c.si, c.tt, c.ts) <= sz);
                REQUIRE(damerau_ball_lower_binomial(n, r, 2, c.sd, c.si, c.tt, c.ts) <= sz);
            }
        }
    // a transposition budget needs r >= 15; check one witness directly
    const Sequence w = alternating(15);
    const Rational tsz(BigInt(static_cast<long>(damerau_ball(w, 0, 0, 1, 0).size())));
    CHECK(damerau_ball_lower(15, 15, 2, 0, 0, 1, 0) <= tsz);
    CHECK(damerau_ball_lower_binomial(15, 15, 2, 0, 0, 1, 0) <= tsz);
}

TEST_CASE("asymmetric shift ball lower bounds") {
    CHECK(asymmetric_ball_lower(10, 0, 1, 0) == Rational(2));
    CHECK(asymmetric_ball_lower(10, 0, 0, 1) == Rational(2));
    CHECK_THROWS_AS(asymmetric_ball_lower(8, 0, 1, 0), precondition_error);
    for (int n = 2; n <= 10; ++n)
        for (const auto& x : oracle::all_words(n, 2)) {
            const long r = run_count(x);
            for (int s : {0, 1})
                for (int tp : {0, 1})
                    for (int tm : {0, 1}) {
                        if (s > n) continue;
                        if (r < std::max(4 * s + 1, 8 * tp + 2)) continue;
                        const Rational sz(BigInt(
                            static_cast<long>(asymmetric_ball(x, s, tp, tm).size())));
                        REQUIRE(asymmetric_ball_lower(r, s, tp, tm) <= sz);
                        REQUIRE(asymmetric_ball_lower_binomial(r, s, tp, tm) <= sz);
                    }
        }
}

TEST_CASE("corrupted words gain at most two runs per transposition") {
    for (int q : {2, 3}) {
        const int n_max = q == 2 ? 9 : 7;
        for (int n = 2; n <= n_max; ++n)
            for (const auto& x : oracle::all_words(n, q))
                for (int s : {1, 2})
                    for (int t : {1, 2}) {
                        if (s >= n) continue;
                        for (const auto& y : del_trans_ball(x, s, t).members)
                            REQUIRE(run_count(y) <= run_count(x) + 2 * t);
                    }
    }
}
