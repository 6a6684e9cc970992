#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include <dlcodes/sequence.hpp>

#include "oracles.hpp"

using namespace dlcodes;

namespace {

Sequence seq(const std::string& text, int q) { return parse_sequence(text, q); }

} // namespace

TEST_CASE("sequence text format round-trips") {
    CHECK(format_sequence(seq("0201001", 3)) == "0201001");
    CHECK(format_sequence(seq("", 2)) == "");
    const Sequence big = parse_sequence("0,11,3", 12);
    CHECK(big.symbols == std::vector<std::uint8_t>{0, 11, 3});
    CHECK(format_sequence(big) == "0,11,3");
    CHECK_THROWS_AS(parse_sequence("012", 2), precondition_error);
    CHECK_THROWS_AS(parse_sequence("0a1", 2), parse_error);
    CHECK_THROWS_AS(parse_sequence("1,,2", 12), parse_error);
}

TEST_CASE("single adjacent transpositions") {
    CHECK(transpose_at(seq("01021", 3), 4) == seq("01012", 3));
    CHECK(transpose_at(seq("01012", 3), 3) == seq("01102", 3));
    CHECK_THROWS_AS(transpose_at(seq("00", 2), 1), precondition_error);
    CHECK_THROWS_AS(transpose_at(seq("01", 2), 2), precondition_error);
}

TEST_CASE("simultaneous transpositions") {
    CHECK(transpose_simultaneous(seq("01021", 3), {1, 4}, GapRule::Strict) == seq("10012", 3));
    CHECK(transpose_simultaneous(seq("01021", 3), {}, GapRule::Strict) == seq("01021", 3));
    // gap 2 is legal under Disjoint but not under Strict
    CHECK_THROWS_AS(transpose_simultaneous(seq("010101", 2), {1, 3}, GapRule::Strict),
                    precondition_error);
    CHECK_NOTHROW(transpose_simultaneous(seq("010101", 2), {1, 3}, GapRule::Disjoint));
}

TEST_CASE("run decomposition reconstructs and stats partition runs") {
    for (int q : {2, 3}) {
        const int n_max = q == 2 ? 12 : 9;
        for (int n = 1; n <= n_max; ++n) {
            for (const auto& x : oracle::all_words(n, q)) {
                const RunDecomposition d = run_decompose(x);
                REQUIRE(reconstruct(d, q) == x);
                REQUIRE(d.run_count() == run_count(x));
                const RunStats st = run_stats(x);
                REQUIRE(st.r == st.r_ge2 + st.r1_prime + st.r1_dprime + st.r1_side);
                REQUIRE(st.r1_pair <= std::max(st.r1_prime - 1, 0));
                REQUIRE(st.r1_rot <= st.r1_dprime);
                if (q == 2) REQUIRE(st.r1_rot == 0);
            }
        }
    }
}

TEST_CASE("run statistics of the worked example") {
    const RunStats st = run_stats(seq("0201001", 3));
    CHECK(st.n == 7);
    CHECK(st.r == 6);
    CHECK(st.r1_prime == 2);
    CHECK(st.r1_dprime == 1);
    CHECK(st.r1_side == 2);
    CHECK(st.r1_pair == 1);
    CHECK(st.r2_in == 1);
    CHECK(st.r1_rot == 0);
}

TEST_CASE("rotation windows need three symbols") {
    // 0120: deleting run 1 gives 120, deleting run 4 gives 012; their
    // single-transposition balls share exactly {102}.
    const RunStats st = run_stats(seq("0120", 3));
    CHECK(st.r1_rot == 1);
    CHECK(run_stats(seq("0110", 2)).r1_rot == 0);
}

TEST_CASE("run statistics on short sequences are vacuous") {
    const RunStats a = run_stats(seq("00", 2));
    CHECK(a.r == 1);
    CHECK(a.r_ge2 == 1);
    CHECK((a.r1_prime == 0 && a.r1_pair == 0 && a.r2_in == 0));
    const RunStats b = run_stats(seq("01", 2));
    CHECK(b.r == 2);
    CHECK(b.r1_side == 2);
    CHECK_THROWS_AS(run_stats(Sequence({}, 2)), precondition_error);
}

TEST_CASE("transposition is an involution") {
    for (const auto& x : oracle::all_words(7, 3))
        for (int k = 1; k < x.size(); ++k)
            if (can_transpose_at(x, k)) REQUIRE(transpose_at(transpose_at(x, k), k) == x);
}

TEST_CASE("deleting from runs i < j yields Hamming distance j - i") {
    for (int q : {2, 3}) {
        const int n_max = q == 2 ? 10 : 8;
        for (int n = 2; n <= n_max; ++n) {
            for (const auto& x : oracle::all_words(n, q)) {
                const int r = run_count(x);
                for (int i = 1; i <= r; ++i)
                    for (int j = i + 1; j <= r; ++j)
                        REQUIRE(hamming(delete_from_run(x, i), delete_from_run(x, j)) == j - i);
            }
        }
    }
}

namespace {

void legal_tuples(const Sequence& x, int t, int min_gap, int from, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == t) {
        out.push_back(cur);
        return;
    }
    for (int k = from; k < x.size(); ++k) {
        if (!can_transpose_at(x, k)) continue;
        cur.push_back(k);
        legal_tuples(x, t, min_gap, k + min_gap, cur, out);
        cur.pop_back();
    }
}

} // namespace

TEST_CASE("strict-gap simultaneous transpositions are injective in the positions") {
    for (int n = 2; n <= 9; ++n) {
        for (const auto& x : oracle::all_words(n, 3)) {
            for (int t = 1; t <= (n + 1) / 3; ++t) {
                std::vector<std::vector<int>> tuples;
                std::vector<int> cur;
                legal_tuples(x, t, 3, 1, cur, tuples);
                std::set<Sequence> images;
                for (const auto& tup : tuples)
                    REQUIRE(images.insert(transpose_simultaneous(x, tup, GapRule::Strict)).second);
            }
        }
    }
}

TEST_CASE("distinct strict tuples on 010101 give distinct outputs") {
    const Sequence x = seq("010101", 2);
    std::vector<std::vector<int>> tuples;
    std::vector<int> cur;
    legal_tuples(x, 2, 3, 1, cur, tuples);
    std::set<Sequence> images;
    for (const auto& tup : tuples) images.insert(transpose_simultaneous(x, tup, GapRule::Strict));
    CHECK(images.size() == tuples.size());
}
