#pragma once

// Test-side oracles, deliberately independent of the library's computation
// paths: Floyd-Warshall instead of BFS, definition-level loops instead of
// cached degrees, and explicit minimizers for the degree-sequence bound.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "mostar/graph.hpp"

namespace oracles {

inline constexpr int kFar = 1 << 28;

inline std::vector<std::vector<int>> fw_distances(const mostar::Graph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> d(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n), kFar));
    for (int i = 0; i < n; ++i) d[i][i] = 0;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && g.adjacent(u, v)) d[u][v] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (d[i][k] < kFar && d[k][j] < kFar)
                    d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

inline int degree_by_scan(const mostar::Graph& g, int u) {
    int deg = 0;
    for (int v = 0; v < g.order(); ++v)
        if (v != u && g.adjacent(u, v)) ++deg;
    return deg;
}

inline std::int64_t mostar_oracle(const mostar::Graph& g) {
    const auto d = fw_distances(g);
    std::int64_t total = 0;
    for (int u = 0; u < g.order(); ++u) {
        for (int v = u + 1; v < g.order(); ++v) {
            if (!g.adjacent(u, v)) continue;
            std::int64_t n_uv = 0, n_vu = 0;
            for (int w = 0; w < g.order(); ++w) {
                if (d[w][u] < d[w][v]) ++n_uv;
                if (d[w][v] < d[w][u]) ++n_vu;
            }
            total += n_uv > n_vu ? n_uv - n_vu : n_vu - n_uv;
        }
    }
    return total;
}

inline std::int64_t mostar_star_oracle(const mostar::Graph& g) {
    std::int64_t total = 0;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v))
                total += g.order() - std::min(degree_by_scan(g, u), degree_by_scan(g, v));
    return total;
}

inline std::int64_t irregularity_oracle(const mostar::Graph& g) {
    std::int64_t total = 0;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v))
                total += std::abs(degree_by_scan(g, u) - degree_by_scan(g, v));
    return total;
}

inline std::vector<std::int64_t> sigma_oracle(const mostar::Graph& g) {
    const auto d = fw_distances(g);
    std::vector<std::int64_t> sigma(static_cast<std::size_t>(g.order()), 0);
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v)
            if (d[u][v] < kFar) sigma[static_cast<std::size_t>(u)] += d[u][v];
    return sigma;
}

struct Envelope {
    std::vector<std::int64_t> lo, hi;
    std::int64_t m = 0;
};

inline Envelope envelope(const std::vector<int>& degrees_ascending) {
    const int n = static_cast<int>(degrees_ascending.size());
    Envelope env;
    env.lo.resize(static_cast<std::size_t>(n));
    env.hi.resize(static_cast<std::size_t>(n));
    std::int64_t sum = 0;
    for (int j = 0; j < n; ++j) {
        const std::int64_t i = j + 1;
        const std::int64_t di = degrees_ascending[static_cast<std::size_t>(j)];
        env.lo[static_cast<std::size_t>(j)] = std::max<std::int64_t>(0, di - i + 1);
        env.hi[static_cast<std::size_t>(j)] = std::min<std::int64_t>(di, n - i);
        sum += di;
    }
    env.m = sum / 2;
    return env;
}

// Exact minimum of sum e_i d_i over the integer envelope box with
// sum e_i = m: greedy fill of the cheapest (smallest-degree) positions.
inline std::int64_t degseq_min_cost_greedy(const std::vector<int>& degrees_ascending) {
    const Envelope env = envelope(degrees_ascending);
    std::int64_t cost = 0;
    std::int64_t remaining = env.m;
    for (std::size_t j = 0; j < env.lo.size(); ++j) {
        cost += env.lo[j] * degrees_ascending[j];
        remaining -= env.lo[j];
    }
    for (std::size_t j = 0; j < env.lo.size() && remaining > 0; ++j) {
        const std::int64_t extra = std::min(env.hi[j] - env.lo[j], remaining);
        cost += extra * degrees_ascending[j];
        remaining -= extra;
    }
    assert(remaining == 0);
    return cost;
}

// Brute-force reference for the greedy (small n only).
inline std::int64_t degseq_min_cost_brute(const std::vector<int>& degrees_ascending) {
    const Envelope env = envelope(degrees_ascending);
    const int n = static_cast<int>(degrees_ascending.size());
    std::int64_t best = -1;
    std::vector<std::int64_t> e(static_cast<std::size_t>(n));
    auto recurse = [&](auto&& self, int pos, std::int64_t used, std::int64_t cost) -> void {
        if (pos == n) {
            if (used == env.m && (best < 0 || cost < best)) best = cost;
            return;
        }
        for (std::int64_t v = env.lo[static_cast<std::size_t>(pos)];
             v <= env.hi[static_cast<std::size_t>(pos)]; ++v)
            self(self, pos + 1, used + v,
                 cost + v * degrees_ascending[static_cast<std::size_t>(pos)]);
    };
    recurse(recurse, 0, 0, 0);
    assert(best >= 0);
    return best;
}

// Canonical 64-bit edge mask: minimum over all vertex relabelings. Test-only
// helper for building isomorphism-free corpora of very small graphs.
inline std::uint64_t canonical_mask(const mostar::Graph& g) {
    const int n = g.order();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t mask = 0;
        std::uint64_t bit = 1;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u, bit <<= 1)
                if (g.adjacent(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]))
                    mask |= bit;
        best = std::min(best, mask);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline mostar::Graph random_graph(int n, std::uint64_t seed, double density = 0.5) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    const std::uint64_t threshold =
        static_cast<std::uint64_t>(density * 18446744073709551615.0);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (rng() <= threshold) edges.emplace_back(u, v);
    return mostar::Graph::from_edge_list(n, edges);
}

}  // namespace oracles
