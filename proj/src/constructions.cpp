#include "mostar/constructions.hpp"

#include <cmath>
#include <stdexcept>

namespace mostar {

namespace {

void require_split(const SplitSpec& spec) {
    if (spec.n < 1 || spec.k < 1 || spec.k > spec.n)
        throw std::invalid_argument("split graph requires 1 <= k <= n");
}

void require_materializable(std::int64_t n) {
    if (n > kConstructionMaterializeCap)
        throw std::invalid_argument("order " + std::to_string(n) +
                                    " exceeds materialization cap " +
                                    std::to_string(kConstructionMaterializeCap));
}

}  // namespace

Graph split_graph(const SplitSpec& spec) {
    require_split(spec);
    require_materializable(spec.n);
    const int n = static_cast<int>(spec.n);
    const int k = static_cast<int>(spec.k);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(k) * (k - 1) / 2 +
                  static_cast<std::size_t>(k) * (n - k));
    for (int u = 0; u < k; ++u) {
        for (int v = u + 1; v < k; ++v) edges.emplace_back(u, v);
        for (int v = k; v < n; ++v) edges.emplace_back(u, v);
    }
    return Graph::from_edge_list(n, edges);
}

WideInt split_mostar_closed_form(const SplitSpec& spec) {
    require_split(spec);
    if (spec.k == spec.n) return 0;  // complete graph, no cross edges
    const WideInt k = spec.k;
    const WideInt rest = spec.n - spec.k;
    return k * rest * (rest - 1);
}

WideInt split_mostar_star_closed_form(const SplitSpec& spec) {
    require_split(spec);
    const WideInt k = spec.k;
    const WideInt rest = spec.n - spec.k;
    return k * (k - 1) / 2 + k * rest * rest;
}

NestedSpec nested_spec(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("order must be positive");
    NestedSpec spec;
    spec.n = n;
    std::int64_t level = n;
    while (true) {
        std::int64_t delta = 0;
        if (level > 1) {
            // round half-up
            delta = static_cast<std::int64_t>(std::floor(spec.gamma * static_cast<double>(level) + 0.5));
            delta = std::min(delta, level - 1);
            delta = std::max<std::int64_t>(delta, 0);
        }
        spec.levels.emplace_back(level, delta);
        if (level <= 1) break;
        level = delta;
        if (level < 1) break;
    }
    return spec;
}

Graph nested_graph(const NestedSpec& spec) {
    require_materializable(spec.n);
    const int n = static_cast<int>(spec.n);
    // Level i occupies ids [n - n_i, n - delta_i): the independent part.
    // Everything with a higher id is strictly deeper.
    std::vector<std::pair<int, int>> edges;
    for (const auto& [ni, di] : spec.levels) {
        const int lo = n - static_cast<int>(ni);
        const int mid = n - static_cast<int>(di);
        for (int u = lo; u < mid; ++u)
            for (int v = mid; v < n; ++v) edges.emplace_back(u, v);
    }
    return Graph::from_edge_list(n, edges);
}

WideInt nested_mostar_star(const NestedSpec& spec) {
    WideInt total = 0;
    for (const auto& [ni, di] : spec.levels) {
        const WideInt part = WideInt(ni) - di;
        total += WideInt(di) * part * part;
    }
    return total;
}

}  // namespace mostar
