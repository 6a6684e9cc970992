#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "balls.hpp"
#include "channel.hpp"
#include "errors.hpp"
#include "sequence.hpp"

namespace dlcodes {

namespace detail {

inline std::uint64_t encode_word(const std::vector<std::uint8_t>& w, int q) {
    std::uint64_t v = 0;
    for (auto c : w) v = v * static_cast<std::uint64_t>(q) + c;
    return v;
}

inline std::vector<std::uint8_t> decode_word(std::uint64_t v, int q, int n) {
    std::vector<std::uint8_t> w(static_cast<std::size_t>(n));
    for (int i = n; i-- > 0;) {
        w[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v % q);
        v /= static_cast<std::uint64_t>(q);
    }
    return w;
}

// Fixed-width row-major bit matrix.
struct BitMatrix {
    std::size_t n = 0;
    std::size_t words = 0;
    std::vector<std::uint64_t> bits;

    void init(std::size_t size) {
        n = size;
        words = (size + 63) / 64;
        bits.assign(n * words, 0);
    }
    void set(std::size_t i, std::size_t j) { bits[i * words + j / 64] |= 1ULL << (j % 64); }
    bool get(std::size_t i, std::size_t j) const {
        return (bits[i * words + j / 64] >> (j % 64)) & 1ULL;
    }
    const std::uint64_t* row(std::size_t i) const { return bits.data() + i * words; }
};

} // namespace detail

// Vertices are all of Sigma_q^n; an edge joins two centers whose error balls
// intersect.  Codes for the channel are exactly the independent sets.
struct ConflictGraph {
    int n = 0;
    int q = 2;
    ChannelSpec channel;
    std::size_t vertex_count = 0;
    detail::BitMatrix adj;

    bool adjacent(std::size_t i, std::size_t j) const { return adj.get(i, j); }

    Sequence vertex(std::size_t i) const {
        return Sequence(detail::decode_word(i, q, n), q);
    }
};

// Builds adjacency through an inverted index corrupted word -> centers, so the
// cost is linear in the total ball mass rather than quadratic in q^n.
inline ConflictGraph conflict_graph(int n, int q, const ChannelSpec& channel,
                                    std::uint64_t vertex_budget = 1ULL << 16) {
    ChannelSpec c = channel;
    c.validate(n, q);
    std::uint64_t count = 1;
    for (int i = 0; i < n; ++i) {
        count *= static_cast<std::uint64_t>(q);
        if (count > vertex_budget) throw budget_error("conflict graph vertex budget exceeded");
    }
    ConflictGraph g;
    g.n = n;
    g.q = q;
    g.channel = c;
    g.vertex_count = count;
    g.adj.init(count);
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> index;
    for (std::uint64_t x = 0; x < count; ++x) {
        const Ball ball = enumerate_ball(Sequence(detail::decode_word(x, q, n), q), c);
        for (const auto& y : ball.members)
            index[detail::encode_word(y.symbols, q)].push_back(static_cast<std::uint32_t>(x));
    }
    for (const auto& [word, centers] : index) {
        (void)word;
        for (std::size_t i = 0; i < centers.size(); ++i)
            for (std::size_t j = i + 1; j < centers.size(); ++j) {
                g.adj.set(centers[i], centers[j]);
                g.adj.set(centers[j], centers[i]);
            }
    }
    return g;
}

struct Code {
    int n = 0;
    int q = 2;
    ChannelSpec channel;
    std::vector<Sequence> codewords;  // sorted

    int size() const { return static_cast<int>(codewords.size()); }
};

struct SearchResult {
    Code code;
    bool optimal = false;
};

namespace detail {

// Kernelization for maximum independent set, on the conflict graph itself:
//  - isolated vertices are always selected;
//  - a pendant vertex is selected and its sole neighbor discarded;
//  - a vertex u adjacent to v with N[v] subset of N[u] is discarded
//    (any solution using u can swap u for v).
// Returns the forced selections and the surviving vertex set.
struct Kernel {
    std::vector<std::uint32_t> forced;
    std::vector<std::uint32_t> alive;  // ascending
};

inline Kernel reduce_for_mis(const ConflictGraph& g) {
    const std::size_t n = g.vertex_count;
    const std::size_t words = g.adj.words;
    std::vector<std::uint64_t> alive(words, 0);
    for (std::size_t i = 0; i < n; ++i) alive[i / 64] |= 1ULL << (i % 64);
    auto test = [&](const std::vector<std::uint64_t>& b, std::size_t i) {
        return (b[i / 64] >> (i % 64)) & 1ULL;
    };
    auto clear = [&](std::vector<std::uint64_t>& b, std::size_t i) {
        b[i / 64] &= ~(1ULL << (i % 64));
    };
    Kernel k;
    std::vector<std::uint64_t> nu(words), nv(words);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t u = 0; u < n; ++u) {
            if (!test(alive, u)) continue;
            const std::uint64_t* row = g.adj.row(u);
            std::size_t deg = 0, nb = 0;
            for (std::size_t w = 0; w < words; ++w) {
                nu[w] = row[w] & alive[w];
                deg += static_cast<std::size_t>(__builtin_popcountll(nu[w]));
            }
            if (deg == 0) {
                k.forced.push_back(static_cast<std::uint32_t>(u));
                clear(alive, u);
                changed = true;
                continue;
            }
            if (deg == 1) {
                for (std::size_t w = 0; w < words; ++w)
                    if (nu[w]) nb = w * 64 + static_cast<std::size_t>(__builtin_ctzll(nu[w]));
                k.forced.push_back(static_cast<std::uint32_t>(u));
                clear(alive, u);
                clear(alive, nb);
                changed = true;
                continue;
            }
            // domination: discard u if some live neighbor v has N[v] subset N[u]
            nu[u / 64] |= 1ULL << (u % 64);  // closed neighborhood
            bool dropped = false;
            for (std::size_t w = 0; w < words && !dropped; ++w) {
                std::uint64_t bits = row[w] & alive[w];
                while (bits) {
                    const std::size_t v =
                        w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
                    bits &= bits - 1;
                    const std::uint64_t* rv = g.adj.row(v);
                    bool subset = true;
                    bool proper = false;
                    for (std::size_t w2 = 0; w2 < words; ++w2) {
                        std::uint64_t cv = rv[w2] & alive[w2];
                        if (w2 == v / 64) cv |= 1ULL << (v % 64);
                        if (cv & ~nu[w2]) {
                            subset = false;
                            break;
                        }
                        if (nu[w2] & ~cv) proper = true;
                    }
                    // On exact ties keep the smaller index for determinism.
                    if (subset && (proper || v < u)) {
                        clear(alive, u);
                        dropped = true;
                        changed = true;
                        break;
                    }
                }
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        if (test(alive, i)) k.alive.push_back(static_cast<std::uint32_t>(i));
    return k;
}

// Maximum clique in the complement graph (= maximum independent set in the
// conflict graph) by branch and bound with greedy coloring bounds, run on the
// reduced kernel with vertices renumbered by descending complement degree.
class MaxCliqueSolver {
public:
    MaxCliqueSolver(const ConflictGraph& g, const std::vector<std::uint32_t>& vertices,
                    double budget_seconds)
        : n_(vertices.size()), deadline_(std::chrono::steady_clock::now() +
                                         std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                             std::chrono::duration<double>(budget_seconds))) {
        // complement adjacency restricted to the kernel, original numbering first
        BitMatrix raw;
        raw.init(n_);
        std::vector<std::size_t> degree(n_, 0);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if (i != j && !g.adjacent(vertices[i], vertices[j])) {
                    raw.set(i, j);
                    ++degree[i];
                }
        // renumber by descending complement degree (stable, so deterministic)
        std::vector<std::size_t> order(n_);
        for (std::size_t i = 0; i < n_; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });
        label_.resize(n_);
        std::vector<std::size_t> pos(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            label_[i] = vertices[order[i]];
            pos[order[i]] = i;
        }
        comp_.init(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if (raw.get(i, j)) comp_.set(pos[i], pos[j]);
    }

    // `incumbent_size` seeds the pruning bound; the solver only reports sets
    // strictly larger, so the caller keeps its seed solution otherwise.
    std::pair<std::vector<std::uint32_t>, bool> solve(std::size_t incumbent_size) {
        floor_ = incumbent_size;
        std::vector<std::uint64_t> all(comp_.words, 0);
        for (std::size_t i = 0; i < n_; ++i) all[i / 64] |= 1ULL << (i % 64);
        std::vector<std::uint32_t> current;
        expand(current, all);
        std::vector<std::uint32_t> out;
        for (auto v : best_) out.push_back(label_[v]);
        return {out, !timed_out_};
    }

private:
    std::size_t n_;
    BitMatrix comp_;
    std::vector<std::uint32_t> label_;
    std::size_t floor_ = 0;
    std::vector<std::uint32_t> best_;
    bool timed_out_ = false;
    long steps_ = 0;
    std::chrono::steady_clock::time_point deadline_;

    static bool empty(const std::vector<std::uint64_t>& b) {
        for (auto w : b)
            if (w) return false;
        return true;
    }

    void expand(std::vector<std::uint32_t>& current, std::vector<std::uint64_t>& cand) {
        if (timed_out_) return;
        if ((++steps_ & 1023) == 0 && std::chrono::steady_clock::now() > deadline_) {
            timed_out_ = true;
            return;
        }
        if (empty(cand)) {
            if (current.size() > std::max(best_.size(), floor_)) best_ = current;
            return;
        }
        // Greedy coloring of the candidates; the color number bounds the
        // largest clique extension.
        std::vector<std::uint32_t> order;
        std::vector<int> bound;
        std::vector<std::uint64_t> uncolored = cand;
        int color = 0;
        std::vector<std::uint64_t> avail(comp_.words);
        while (!empty(uncolored)) {
            ++color;
            avail = uncolored;
            while (!empty(avail)) {
                std::size_t v = first_bit(avail);
                clear_bit(avail, v);
                clear_bit(uncolored, v);
                const std::uint64_t* row = comp_.row(v);
                for (std::size_t w = 0; w < comp_.words; ++w) avail[w] &= ~row[w];
                order.push_back(static_cast<std::uint32_t>(v));
                bound.push_back(color);
            }
        }
        for (std::size_t idx = order.size(); idx-- > 0;) {
            if (current.size() + static_cast<std::size_t>(bound[idx]) <=
                std::max(best_.size(), floor_))
                return;
            const std::uint32_t v = order[idx];
            std::vector<std::uint64_t> next(comp_.words);
            const std::uint64_t* row = comp_.row(v);
            for (std::size_t w = 0; w < comp_.words; ++w) next[w] = cand[w] & row[w];
            current.push_back(v);
            expand(current, next);
            current.pop_back();
            if (timed_out_) return;
            clear_bit(cand, v);
        }
    }

    static std::size_t first_bit(const std::vector<std::uint64_t>& b) {
        for (std::size_t w = 0; w < b.size(); ++w)
            if (b[w]) return w * 64 + static_cast<std::size_t>(__builtin_ctzll(b[w]));
        return ~std::size_t(0);
    }
    static void clear_bit(std::vector<std::uint64_t>& b, std::size_t i) {
        b[i / 64] &= ~(1ULL << (i % 64));
    }
};

inline Code make_code(const ConflictGraph& g, std::vector<std::uint32_t> vertices) {
    std::sort(vertices.begin(), vertices.end());
    Code c;
    c.n = g.n;
    c.q = g.q;
    c.channel = g.channel;
    for (auto v : vertices) c.codewords.push_back(g.vertex(v));
    return c;
}

} // namespace detail

inline SearchResult max_code_exact(const ConflictGraph& g, double budget_seconds = 60.0) {
    const detail::Kernel kernel = detail::reduce_for_mis(g);
    // Greedy independent set on the kernel seeds the incumbent.
    std::vector<std::uint32_t> seed;
    for (auto v : kernel.alive) {
        bool ok = true;
        for (auto u : seed)
            if (g.adjacent(u, v)) {
                ok = false;
                break;
            }
        if (ok) seed.push_back(v);
    }
    detail::MaxCliqueSolver solver(g, kernel.alive, budget_seconds);
    auto [vertices, optimal] = solver.solve(seed.size());
    if (vertices.size() < seed.size()) vertices = seed;
    vertices.insert(vertices.end(), kernel.forced.begin(), kernel.forced.end());
    return {detail::make_code(g, std::move(vertices)), optimal};
}

enum class GreedyOrder { Lex, MinDegree };

inline Code max_code_greedy(const ConflictGraph& g, GreedyOrder order) {
    const std::size_t n = g.vertex_count;
    std::vector<std::uint32_t> chosen;
    if (order == GreedyOrder::Lex) {
        for (std::size_t v = 0; v < n; ++v) {
            bool ok = true;
            for (auto u : chosen)
                if (g.adjacent(u, v)) {
                    ok = false;
                    break;
                }
            if (ok) chosen.push_back(static_cast<std::uint32_t>(v));
        }
    } else {
        std::vector<bool> alive(n, true);
        std::size_t remaining = n;
        while (remaining > 0) {
            std::size_t pick = n;
            std::size_t pick_deg = n + 1;
            for (std::size_t v = 0; v < n; ++v) {
                if (!alive[v]) continue;
                std::size_t deg = 0;
                for (std::size_t u = 0; u < n; ++u)
                    if (alive[u] && g.adjacent(v, u)) ++deg;
                if (deg < pick_deg) {
                    pick_deg = deg;
                    pick = v;
                }
            }
            chosen.push_back(static_cast<std::uint32_t>(pick));
            alive[pick] = false;
            --remaining;
            for (std::size_t u = 0; u < n; ++u)
                if (alive[u] && g.adjacent(pick, u)) {
                    alive[u] = false;
                    --remaining;
                }
        }
    }
    return detail::make_code(g, std::move(chosen));
}

// Verdict of a pairwise ball-disjointness check, with an explicit shared
// corrupted word when the code is invalid.
struct VerifyResult {
    bool valid = true;
    std::optional<Sequence> first;
    std::optional<Sequence> second;
    std::optional<Sequence> common;
};

inline VerifyResult verify_code(const Code& code) {
    for (const auto& x : code.codewords)
        if (x.size() != code.n || x.q != code.q)
            throw precondition_error("codeword length/alphabet mismatch");
    std::map<std::vector<std::uint8_t>, std::size_t> index;
    for (std::size_t i = 0; i < code.codewords.size(); ++i) {
        const Ball ball = enumerate_ball(code.codewords[i], code.channel);
        for (const auto& y : ball.members) {
            auto [it, fresh] = index.emplace(y.symbols, i);
            if (!fresh && it->second != i) {
                VerifyResult r;
                r.valid = false;
                r.first = code.codewords[it->second];
                r.second = code.codewords[i];
                r.common = y;
                return r;
            }
        }
    }
    return {};
}

} // namespace dlcodes
