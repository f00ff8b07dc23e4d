#pragma once

#include <cstdint>
#include <numbers>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mostar/graph.hpp"

namespace mostar {

/// Closed-form evaluators run far beyond the materialization cap; values
/// reach ~0.155 n^3, so they carry 128-bit width.
using WideInt = boost::multiprecision::int128_t;

/// Largest order the generators will materialize as an explicit Graph.
inline constexpr std::int64_t kConstructionMaterializeCap = 10000;

/// Split graph S_{k,n-k}: clique {0..k-1}, independent set {k..n-1}, all
/// k(n-k) cross edges present.
struct SplitSpec {
    std::int64_t n = 1;
    std::int64_t k = 1;
};

Graph split_graph(const SplitSpec& spec);

/// Mo(S_{k,n-k}) = k (n-k) (n-k-1): clique edges are balanced, each cross
/// edge contributes (n-k) - 1.
WideInt split_mostar_closed_form(const SplitSpec& spec);

/// Mo*(S_{k,n-k}) = C(k,2) + k (n-k)^2.
WideInt split_mostar_star_closed_form(const SplitSpec& spec);

/// The nesting ratio (sqrt(3) - 1) / 2.
inline constexpr double kNestingGamma = (std::numbers::sqrt3 - 1.0) / 2.0;

/// Level sizes of the nested complete-multipartite construction:
/// n_0 = n, delta_i = round(gamma * n_i) clamped to [0, n_i - 1] (0 when
/// n_i <= 1), n_{i+1} = delta_i, stopping once n_i <= 1.
struct NestedSpec {
    std::int64_t n = 1;
    double gamma = kNestingGamma;
    std::vector<std::pair<std::int64_t, std::int64_t>> levels;  // (n_i, delta_i)
};

NestedSpec nested_spec(std::int64_t n);

/// Materializes the nested construction: level i contributes an independent
/// part of n_i - delta_i vertices joined to everything deeper. Deeper
/// levels get higher vertex ids. The complement is a disjoint union of
/// cliques of sizes n_i - delta_i.
Graph nested_graph(const NestedSpec& spec);

/// Mo* of the nested construction via the level recursion
/// sum_i delta_i (n_i - delta_i)^2; O(levels) at any order.
WideInt nested_mostar_star(const NestedSpec& spec);

}  // namespace mostar
