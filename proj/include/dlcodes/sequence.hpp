#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace dlcodes {

// A finite word over the alphabet {0, ..., q-1}.  The empty word is valid.
struct Sequence {
    int q = 2;
    std::vector<std::uint8_t> symbols;

    Sequence() = default;

    Sequence(std::vector<std::uint8_t> syms, int alphabet) : q(alphabet), symbols(std::move(syms)) {
        if (q < 2) throw precondition_error("alphabet size must be >= 2");
        for (auto s : symbols)
            if (s >= q)
                throw precondition_error("symbol " + std::to_string(int(s)) +
                                         " >= alphabet size " + std::to_string(q));
    }

    int size() const { return static_cast<int>(symbols.size()); }
    bool empty() const { return symbols.empty(); }

    // 1-based access, matching the position conventions of the public API.
    std::uint8_t at1(int i) const { return symbols.at(static_cast<std::size_t>(i) - 1); }

    // Ordering is lexicographic by symbols; used for canonical ball ordering.
    friend bool operator==(const Sequence& a, const Sequence& b) {
        return a.q == b.q && a.symbols == b.symbols;
    }
    friend bool operator<(const Sequence& a, const Sequence& b) { return a.symbols < b.symbols; }
};

inline std::string format_sequence(const Sequence& x) {
    std::string out;
    if (x.q <= 10) {
        for (auto s : x.symbols) out.push_back(static_cast<char>('0' + s));
    } else {
        for (std::size_t i = 0; i < x.symbols.size(); ++i) {
            if (i) out.push_back(',');
            out += std::to_string(int(x.symbols[i]));
        }
    }
    return out;
}

// Text format: for q <= 10 a digit string, for q > 10 comma-separated
// decimal indices.  Empty text is the empty word.
inline Sequence parse_sequence(const std::string& text, int q) {
    if (q < 2) throw precondition_error("alphabet size must be >= 2");
    std::vector<std::uint8_t> syms;
    if (q <= 10) {
        syms.reserve(text.size());
        for (char c : text) {
            if (c < '0' || c > '9') throw parse_error(std::string("bad symbol character '") + c + "'");
            int v = c - '0';
            if (v >= q)
                throw precondition_error("symbol " + std::to_string(v) + " >= alphabet size " +
                                         std::to_string(q));
            syms.push_back(static_cast<std::uint8_t>(v));
        }
    } else if (!text.empty()) {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto comma = text.find(',', pos);
            std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
                throw parse_error("bad symbol token '" + tok + "'");
            int v = std::stoi(tok);
            if (v >= q)
                throw precondition_error("symbol " + std::to_string(v) + " >= alphabet size " +
                                         std::to_string(q));
            syms.push_back(static_cast<std::uint8_t>(v));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    return Sequence(std::move(syms), q);
}

// Maximal runs a_1^{l_1} ... a_r^{l_r} of a non-empty word.
struct RunDecomposition {
    std::vector<std::uint8_t> run_symbols;
    std::vector<int> run_lengths;

    int run_count() const { return static_cast<int>(run_symbols.size()); }
};

inline RunDecomposition run_decompose(const Sequence& x) {
    if (x.empty()) throw precondition_error("run decomposition of the empty word is undefined");
    RunDecomposition d;
    for (int i = 0; i < x.size(); ++i) {
        if (i == 0 || x.symbols[i] != x.symbols[i - 1]) {
            d.run_symbols.push_back(x.symbols[i]);
            d.run_lengths.push_back(1);
        } else {
            ++d.run_lengths.back();
        }
    }
    return d;
}

inline int run_count(const Sequence& x) {
    if (x.empty()) return 0;
    int r = 1;
    for (int i = 1; i < x.size(); ++i)
        if (x.symbols[i] != x.symbols[i - 1]) ++r;
    return r;
}

inline Sequence reconstruct(const RunDecomposition& d, int q) {
    std::vector<std::uint8_t> syms;
    for (std::size_t i = 0; i < d.run_symbols.size(); ++i)
        syms.insert(syms.end(), static_cast<std::size_t>(d.run_lengths[i]), d.run_symbols[i]);
    return Sequence(std::move(syms), q);
}

// The six run statistics driving the exact |B_{1,1}| formula, plus r and n.
// All index conventions are 1-based over the run decomposition.
struct RunStats {
    int n = 0;
    int r = 0;
    int r1_prime = 0;   // interior length-1 runs with equal neighbors
    int r1_dprime = 0;  // interior length-1 runs with unequal neighbors
    int r1_side = 0;    // boundary length-1 runs
    int r_ge2 = 0;      // runs of length >= 2
    int r1_pair = 0;    // i <= r-4 with l_{i+1}=l_{i+3}=1, a_i=a_{i+2}=a_{i+4}
    int r2_in = 0;      // i <= r-2 with l_{i+1}=2, a_i=a_{i+2}
    // i <= r-3 with l_{i+1}=l_{i+2}=1, a_i=a_{i+3}, a_i!=a_{i+2}.  Such a
    // window makes the single-transposition balls of the deletions from runs
    // i and i+3 meet in one word (a 3-rotation); it needs three distinct
    // symbols, so it vanishes on binary alphabets.
    int r1_rot = 0;
};

inline RunStats run_stats(const Sequence& x) {
    if (x.empty()) throw precondition_error("run statistics of the empty word are undefined");
    const RunDecomposition d = run_decompose(x);
    const int r = d.run_count();
    const auto& a = d.run_symbols;
    const auto& l = d.run_lengths;
    RunStats st;
    st.n = x.size();
    st.r = r;
    for (int i = 1; i <= r; ++i) {
        if (l[i - 1] >= 2) ++st.r_ge2;
        if (l[i - 1] == 1) {
            if (i == 1 || i == r) {
                ++st.r1_side;
            } else if (a[i - 2] == a[i]) {
                ++st.r1_prime;
            } else {
                ++st.r1_dprime;
            }
        }
    }
    for (int i = 1; i <= r - 4; ++i)
        if (l[i] == 1 && l[i + 2] == 1 && a[i - 1] == a[i + 1] && a[i + 1] == a[i + 3]) ++st.r1_pair;
    for (int i = 1; i <= r - 2; ++i)
        if (l[i] == 2 && a[i - 1] == a[i + 1]) ++st.r2_in;
    for (int i = 1; i <= r - 3; ++i)
        if (l[i] == 1 && l[i + 1] == 1 && a[i - 1] == a[i + 2] && a[i - 1] != a[i + 1])
            ++st.r1_rot;
    return st;
}

inline int hamming(const Sequence& x, const Sequence& y) {
    if (x.size() != y.size()) throw precondition_error("hamming: length mismatch");
    if (x.q != y.q) throw precondition_error("hamming: alphabet mismatch");
    int d = 0;
    for (int i = 0; i < x.size(); ++i)
        if (x.symbols[i] != y.symbols[i]) ++d;
    return d;
}

inline bool can_transpose_at(const Sequence& x, int k) {
    return k >= 1 && k < x.size() && x.symbols[k - 1] != x.symbols[k];
}

// Adjacent transposition at 1-based position k: swaps x_k and x_{k+1}.
inline Sequence transpose_at(const Sequence& x, int k) {
    if (k < 1 || k >= x.size())
        throw precondition_error("transposition position " + std::to_string(k) + " out of range");
    if (x.symbols[k - 1] == x.symbols[k])
        throw precondition_error("illegal transposition: equal symbols at position " +
                                 std::to_string(k));
    Sequence y = x;
    std::swap(y.symbols[k - 1], y.symbols[k]);
    return y;
}

// Gap rule for simultaneous transpositions at positions k_1 < ... < k_t.
// Strict requires k_{i+1} - k_i > 2; Disjoint only requires the swapped
// pairs to be non-overlapping, k_{i+1} - k_i >= 2.
enum class GapRule { Strict, Disjoint };

inline Sequence transpose_simultaneous(const Sequence& x, const std::vector<int>& positions,
                                       GapRule rule) {
    const int min_gap = (rule == GapRule::Strict) ? 3 : 2;
    for (std::size_t i = 0; i + 1 < positions.size(); ++i)
        if (positions[i + 1] - positions[i] < min_gap)
            throw precondition_error("gap rule violated between positions " +
                                     std::to_string(positions[i]) + " and " +
                                     std::to_string(positions[i + 1]));
    for (int k : positions)
        if (!can_transpose_at(x, k))
            throw precondition_error("illegal simultaneous transposition at position " +
                                     std::to_string(k));
    Sequence y = x;
    for (int k : positions) std::swap(y.symbols[k - 1], y.symbols[k]);
    return y;
}

// x^(i): delete one symbol from the i-th run (1-based).
inline Sequence delete_from_run(const Sequence& x, int i) {
    const RunDecomposition d = run_decompose(x);
    if (i < 1 || i > d.run_count())
        throw precondition_error("run index " + std::to_string(i) + " out of range");
    int pos = 0;  // 0-based position of the first symbol of run i
    for (int j = 0; j < i - 1; ++j) pos += d.run_lengths[j];
    Sequence y = x;
    y.symbols.erase(y.symbols.begin() + pos);
    return y;
}

} // namespace dlcodes
