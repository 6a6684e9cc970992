#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "channel.hpp"
#include "sequence.hpp"

namespace dlcodes {

// A duplicate-free, lexicographically sorted error ball.
struct Ball {
    Sequence center;
    ChannelSpec channel;
    std::vector<Sequence> members;

    int size() const { return static_cast<int>(members.size()); }

    bool contains(const Sequence& y) const {
        return std::binary_search(members.begin(), members.end(), y);
    }
};

namespace detail {

using Word = std::vector<std::uint8_t>;
using WordSet = std::set<Word>;

inline WordSet stage_delete(const WordSet& in) {
    WordSet out;
    for (const auto& w : in)
        for (std::size_t i = 0; i < w.size(); ++i) {
            Word v = w;
            v.erase(v.begin() + i);
            out.insert(std::move(v));
        }
    return out;
}

inline WordSet stage_insert(const WordSet& in, int q) {
    WordSet out;
    for (const auto& w : in)
        for (std::size_t i = 0; i <= w.size(); ++i)
            for (int a = 0; a < q; ++a) {
                Word v = w;
                v.insert(v.begin() + i, static_cast<std::uint8_t>(a));
                out.insert(std::move(v));
            }
    return out;
}

inline WordSet stage_substitute(const WordSet& in, int q) {
    WordSet out;
    for (const auto& w : in)
        for (std::size_t i = 0; i < w.size(); ++i)
            for (int a = 0; a < q; ++a) {
                if (a == w[i]) continue;
                Word v = w;
                v[i] = static_cast<std::uint8_t>(a);
                out.insert(std::move(v));
            }
    return out;
}

inline WordSet stage_transpose(const WordSet& in) {
    WordSet out;
    for (const auto& w : in)
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i] == w[i + 1]) continue;
            Word v = w;
            std::swap(v[i], v[i + 1]);
            out.insert(std::move(v));
        }
    return out;
}

// T_{<=t} applied to a set: union of exact transposition stages.
inline WordSet transpose_upto(const WordSet& in, int t) {
    WordSet out = in;
    WordSet frontier = in;
    for (int i = 0; i < t; ++i) {
        frontier = stage_transpose(frontier);
        out.insert(frontier.begin(), frontier.end());
    }
    return out;
}

inline WordSet delete_exact(const WordSet& in, int s) {
    WordSet out = in;
    for (int i = 0; i < s; ++i) out = stage_delete(out);
    return out;
}

inline WordSet substitute_upto(const WordSet& in, int t, int q) {
    WordSet out = in;
    WordSet frontier = in;
    for (int i = 0; i < t; ++i) {
        frontier = stage_substitute(frontier, q);
        out.insert(frontier.begin(), frontier.end());
    }
    return out;
}

// One b-block transposition: swap adjacent length-b substrings.
inline WordSet stage_block_transpose(const WordSet& in, int b) {
    WordSet out;
    for (const auto& w : in) {
        const int m = static_cast<int>(w.size());
        for (int i = 0; i + 2 * b <= m; ++i) {
            Word v = w;
            std::swap_ranges(v.begin() + i, v.begin() + i + b, v.begin() + i + b);
            out.insert(std::move(v));
        }
    }
    return out;
}

inline WordSet block_transpose_upto(const WordSet& in, int t, int b) {
    WordSet out = in;
    WordSet frontier = in;
    for (int i = 0; i < t; ++i) {
        frontier = stage_block_transpose(frontier, b);
        out.insert(frontier.begin(), frontier.end());
    }
    return out;
}

// Deletion of s mutually disjoint length-b intervals of the original word.
inline void block_delete_rec(const Word& w, int b, int s, int next_start, std::vector<int>& starts,
                             WordSet& out) {
    if (s == 0) {
        Word v;
        v.reserve(w.size() - starts.size() * b);
        std::size_t si = 0;
        for (std::size_t i = 0; i < w.size();) {
            if (si < starts.size() && static_cast<int>(i) == starts[si]) {
                i += static_cast<std::size_t>(b);
                ++si;
            } else {
                v.push_back(w[i]);
                ++i;
            }
        }
        out.insert(std::move(v));
        return;
    }
    for (int i = next_start; i + s * b <= static_cast<int>(w.size()); ++i) {
        starts.push_back(i);
        block_delete_rec(w, b, s - 1, i + b, starts, out);
        starts.pop_back();
    }
}

inline WordSet block_delete_exact(const WordSet& in, int s, int b) {
    if (s == 0) return in;
    WordSet out;
    std::vector<int> starts;
    for (const auto& w : in) block_delete_rec(w, b, s, 0, starts, out);
    return out;
}

// Sequential 0-right / 0-left shifts with per-type budgets (binary only).
inline WordSet shift_ball(const WordSet& in, int t_plus, int t_minus) {
    struct State {
        Word w;
        int up, um;
        bool operator<(const State& o) const {
            if (w != o.w) return w < o.w;
            if (up != o.up) return up < o.up;
            return um < o.um;
        }
    };
    std::set<State> seen;
    std::vector<State> queue;
    WordSet out;
    for (const auto& w : in) {
        State st{w, 0, 0};
        if (seen.insert(st).second) queue.push_back(st);
        out.insert(w);
    }
    while (!queue.empty()) {
        State st = queue.back();
        queue.pop_back();
        for (std::size_t i = 0; i + 1 < st.w.size(); ++i) {
            const bool right = st.w[i] == 0 && st.w[i + 1] == 1;  // 01 -> 10
            const bool left = st.w[i] == 1 && st.w[i + 1] == 0;   // 10 -> 01
            if (right && st.up < t_plus) {
                State nx = st;
                std::swap(nx.w[i], nx.w[i + 1]);
                ++nx.up;
                out.insert(nx.w);
                if (seen.insert(nx).second) queue.push_back(nx);
            }
            if (left && st.um < t_minus) {
                State nx = st;
                std::swap(nx.w[i], nx.w[i + 1]);
                ++nx.um;
                out.insert(nx.w);
                if (seen.insert(nx).second) queue.push_back(nx);
            }
        }
    }
    return out;
}

inline Ball make_ball(const Sequence& center, const ChannelSpec& spec, const WordSet& words) {
    Ball b;
    b.center = center;
    b.channel = spec;
    b.members.reserve(words.size());
    for (const auto& w : words) b.members.push_back(Sequence(w, center.q));
    return b;
}

} // namespace detail

// D_s(x): all subsequences of length n-s.
inline Ball deletion_ball(const Sequence& x, int s) {
    if (s < 0 || s > x.size()) throw precondition_error("deletion count out of range");
    auto words = detail::delete_exact({x.symbols}, s);
    return detail::make_ball(x, ChannelSpec::del_trans(s, 0), words);
}

// T_{<=t}(x): at most t sequential transpositions.
inline Ball transposition_ball_upto(const Sequence& x, int t) {
    if (t < 0) throw precondition_error("transposition count must be non-negative");
    auto words = detail::transpose_upto({x.symbols}, t);
    return detail::make_ball(x, ChannelSpec::del_trans(0, t), words);
}

// T_t(x): exactly t sequential transpositions.
inline Ball transposition_ball_exact(const Sequence& x, int t) {
    if (t < 0) throw precondition_error("transposition count must be non-negative");
    detail::WordSet frontier{x.symbols};
    for (int i = 0; i < t; ++i) frontier = detail::stage_transpose(frontier);
    return detail::make_ball(x, ChannelSpec::del_trans(0, t), frontier);
}

// T'_t(x): exactly t simultaneous transpositions under the given gap rule.
inline Ball transposition_ball_simultaneous(const Sequence& x, int t, GapRule rule) {
    if (t < 0) throw precondition_error("transposition count must be non-negative");
    const int min_gap = (rule == GapRule::Strict) ? 3 : 2;
    detail::WordSet words;
    std::vector<int> positions;
    auto rec = [&](auto&& self, int next, int remaining) -> void {
        if (remaining == 0) {
            words.insert(transpose_simultaneous(x, positions, rule).symbols);
            return;
        }
        for (int k = next; k <= x.size() - 1; ++k) {
            if (!can_transpose_at(x, k)) continue;
            positions.push_back(k);
            self(self, k + min_gap, remaining - 1);
            positions.pop_back();
        }
    };
    rec(rec, 1, t);
    return detail::make_ball(x, ChannelSpec::del_trans(0, t), words);
}

// B_{s,t}(x), computed canonically as T_{<=t}(D_s(x)).
inline Ball del_trans_ball(const Sequence& x, int s, int t) {
    ChannelSpec spec = ChannelSpec::del_trans(s, t);
    spec.validate(x.size(), x.q);
    auto words = detail::transpose_upto(detail::delete_exact({x.symbols}, s), t);
    return detail::make_ball(x, spec, words);
}

// D_s(T_{<=t}(x)); the opposite composition order, kept for order-exchange tests.
inline Ball trans_then_del_ball(const Sequence& x, int s, int t) {
    ChannelSpec spec = ChannelSpec::del_trans(s, t);
    spec.validate(x.size(), x.q);
    auto words = detail::delete_exact(detail::transpose_upto({x.symbols}, t), s);
    return detail::make_ball(x, spec, words);
}

// B_s^{t+,t-}(x): s deletions, then at most t+ 0-right and t- 0-left shifts.
inline Ball asymmetric_ball(const Sequence& x, int s, int t_plus, int t_minus) {
    ChannelSpec spec = ChannelSpec::asymmetric(s, t_plus, t_minus);
    spec.validate(x.size(), x.q);
    auto words = detail::shift_ball(detail::delete_exact({x.symbols}, s), t_plus, t_minus);
    return detail::make_ball(x, spec, words);
}

// B^b_{s,t}(x): s disjoint b-block deletions, then at most t sequential
// b-block transpositions.
inline Ball block_ball(const Sequence& x, int s, int t, int b) {
    ChannelSpec spec = ChannelSpec::block(s, t, b);
    spec.validate(x.size(), x.q);
    auto words = detail::block_transpose_upto(detail::block_delete_exact({x.symbols}, s, b), t, b);
    return detail::make_ball(x, spec, words);
}

// B^{(q)}_{sD,sI,tT,tS}(x): deletions, then insertions, then substitutions,
// then transpositions, each stage exhaustive.
inline Ball damerau_ball(const Sequence& x, int s_del, int s_ins, int t_trans, int t_sub) {
    ChannelSpec spec = ChannelSpec::damerau(s_del, s_ins, t_trans, t_sub);
    spec.validate(x.size(), x.q);
    detail::WordSet words = detail::delete_exact({x.symbols}, s_del);
    for (int i = 0; i < s_ins; ++i) words = detail::stage_insert(words, x.q);
    words = detail::substitute_upto(words, t_sub, x.q);
    words = detail::transpose_upto(words, t_trans);
    return detail::make_ball(x, spec, words);
}

inline Ball enumerate_ball(const Sequence& x, const ChannelSpec& spec) {
    spec.validate(x.size(), x.q);
    switch (spec.kind) {
        case ChannelKind::DelTrans: return del_trans_ball(x, spec.s, spec.t);
        case ChannelKind::Asymmetric: return asymmetric_ball(x, spec.s, spec.t_plus, spec.t_minus);
        case ChannelKind::Block: return block_ball(x, spec.s, spec.t, spec.b);
        case ChannelKind::Damerau:
            return damerau_ball(x, spec.s_del, spec.s_ins, spec.t_trans, spec.t_sub);
    }
    throw error("unknown channel kind");
}

// The b x (n/b) column-major array representation of x.
struct BlockArray {
    int b = 1;
    int cols = 0;
    int q = 2;
    std::vector<std::uint8_t> data;  // row-major, b rows of `cols` entries

    std::uint8_t entry(int i, int j) const {  // 1-based
        return data[static_cast<std::size_t>(i - 1) * cols + (j - 1)];
    }
};

inline BlockArray block_array(const Sequence& x, int b) {
    if (b < 1 || x.size() % b != 0)
        throw precondition_error("block length must divide the sequence length");
    BlockArray a;
    a.b = b;
    a.cols = x.size() / b;
    a.q = x.q;
    a.data.resize(x.symbols.size());
    for (int j = 1; j <= a.cols; ++j)
        for (int i = 1; i <= b; ++i)
            a.data[static_cast<std::size_t>(i - 1) * a.cols + (j - 1)] =
                x.symbols[static_cast<std::size_t>((j - 1) * b + i - 1)];
    return a;
}

inline Sequence block_array_row(const BlockArray& a, int i) {
    if (i < 1 || i > a.b) throw precondition_error("row index out of range");
    std::vector<std::uint8_t> syms(a.data.begin() + static_cast<std::size_t>(i - 1) * a.cols,
                                   a.data.begin() + static_cast<std::size_t>(i) * a.cols);
    return Sequence(std::move(syms), a.q);
}

// One random legal edit path through the channel.  The draw is uniform over
// paths, not over ball members; deterministic for a fixed seed.
inline Sequence sample_corruption(const Sequence& x, const ChannelSpec& spec, std::uint64_t seed) {
    spec.validate(x.size(), x.q);
    std::mt19937_64 rng(seed);
    auto uniform = [&](int lo, int hi) {  // inclusive
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    detail::Word w = x.symbols;
    auto delete_random = [&](int count) {
        for (int i = 0; i < count; ++i) w.erase(w.begin() + uniform(0, int(w.size()) - 1));
    };
    auto transpose_random_upto = [&](int budget, auto legal) {
        int k = uniform(0, budget);
        for (int i = 0; i < k; ++i) {
            std::vector<int> pos;
            for (int j = 0; j + 1 < int(w.size()); ++j)
                if (legal(w[j], w[j + 1])) pos.push_back(j);
            if (pos.empty()) break;
            int j = pos[static_cast<std::size_t>(uniform(0, int(pos.size()) - 1))];
            std::swap(w[j], w[j + 1]);
        }
    };
    switch (spec.kind) {
        case ChannelKind::DelTrans:
            delete_random(spec.s);
            transpose_random_upto(spec.t, [](std::uint8_t a, std::uint8_t b) { return a != b; });
            break;
        case ChannelKind::Asymmetric:
            delete_random(spec.s);
            transpose_random_upto(spec.t_plus,
                                  [](std::uint8_t a, std::uint8_t b) { return a == 0 && b == 1; });
            transpose_random_upto(spec.t_minus,
                                  [](std::uint8_t a, std::uint8_t b) { return a == 1 && b == 0; });
            break;
        case ChannelKind::Block: {
            // Rejection-sample s disjoint interval starts.
            const int m = int(w.size());
            if (spec.s > 0) {
                std::vector<int> starts;
                for (;;) {
                    starts.clear();
                    for (int i = 0; i < spec.s; ++i) starts.push_back(uniform(0, m - spec.b));
                    std::sort(starts.begin(), starts.end());
                    bool ok = true;
                    for (std::size_t i = 0; i + 1 < starts.size(); ++i)
                        if (starts[i + 1] - starts[i] < spec.b) ok = false;
                    if (ok) break;
                }
                detail::Word v;
                std::size_t si = 0;
                for (int i = 0; i < m;) {
                    if (si < starts.size() && i == starts[si]) {
                        i += spec.b;
                        ++si;
                    } else {
                        v.push_back(w[static_cast<std::size_t>(i)]);
                        ++i;
                    }
                }
                w = std::move(v);
            }
            int k = uniform(0, spec.t);
            for (int i = 0; i < k; ++i) {
                const int last = int(w.size()) - 2 * spec.b;
                if (last < 0) break;
                int j = uniform(0, last);
                std::swap_ranges(w.begin() + j, w.begin() + j + spec.b, w.begin() + j + spec.b);
            }
            break;
        }
        case ChannelKind::Damerau: {
            delete_random(spec.s_del);
            for (int i = 0; i < spec.s_ins; ++i) {
                int pos = uniform(0, int(w.size()));
                int a = uniform(0, x.q - 1);
                w.insert(w.begin() + pos, static_cast<std::uint8_t>(a));
            }
            int ks = uniform(0, spec.t_sub);
            for (int i = 0; i < ks && !w.empty(); ++i) {
                int pos = uniform(0, int(w.size()) - 1);
                int a = uniform(0, x.q - 2);
                if (a >= w[static_cast<std::size_t>(pos)]) ++a;
                w[static_cast<std::size_t>(pos)] = static_cast<std::uint8_t>(a);
            }
            transpose_random_upto(spec.t_trans,
                                  [](std::uint8_t a, std::uint8_t b) { return a != b; });
            break;
        }
    }
    return Sequence(std::move(w), x.q);
}

} // namespace dlcodes
