#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mostar/graph.hpp"

namespace mostar {

/// Per-edge distance-unbalance record for an edge uv: n_uv counts the
/// vertices strictly closer to u than to v (hop distance), and
/// mostar_star_term is the edge's contribution n - min(d(u), d(v)) to the
/// degree-based upper bound. Vertices in other components count in
/// neither n_uv nor n_vu.
struct EdgeUnbalance {
    int u = 0;
    int v = 0;
    std::int64_t n_uv = 0;
    std::int64_t n_vu = 0;
    std::int64_t abs_diff = 0;
    std::int64_t mostar_star_term = 0;
};

/// Transmission sigma(v) = sum of hop distances from v, restricted to the
/// component of v. component_restricted flags a disconnected input.
struct TransmissionVector {
    std::vector<std::int64_t> sigma;
    bool component_restricted = false;
};

/// Each unbalanced edge oriented toward its transmission-smaller endpoint;
/// balanced edges stay unoriented. Together the two lists partition E(G).
struct PartialOrientation {
    std::vector<std::pair<int, int>> oriented;    // (tail, head), sigma(head) < sigma(tail)
    std::vector<std::pair<int, int>> unoriented;  // (u, v) with u < v
};

struct AcyclicityResult {
    bool acyclic = true;
    std::vector<int> witness_cycle;  // vertex sequence, closed, empty when acyclic
};

struct IndexReport {
    int n = 0;
    std::int64_t m = 0;
    std::int64_t mo = 0;
    std::int64_t mo_star = 0;
    std::int64_t irr = 0;
    int delta_min = 0;
    int delta_max = 0;
    bool connected = true;
    std::optional<int> diameter;  // empty for disconnected graphs
};

EdgeUnbalance edge_unbalance(const Graph& g, int u, int v);

std::int64_t mostar_index(const Graph& g);
std::int64_t mostar_index(const Graph& g, const DistanceMatrix& dm);

std::int64_t mostar_star(const Graph& g);

/// Independent route to mostar_star: sort vertices by ascending degree
/// (ties by id), count forward edges e_i into the later part of the order,
/// and sum e_i * (n - d_i). Equals mostar_star(g) on every graph.
std::int64_t mostar_star_via_forward_edges(const Graph& g);

TransmissionVector transmissions(const Graph& g);
TransmissionVector transmissions(const Graph& g, const DistanceMatrix& dm);

std::int64_t irregularity(const Graph& g);

PartialOrientation partial_orientation(const Graph& g);
PartialOrientation partial_orientation(const Graph& g, const DistanceMatrix& dm);

/// Treats oriented edges as one-way arcs and unoriented edges as two-way,
/// then rejects any strongly connected component spanned by an oriented
/// edge. Returns a closed witness walk on failure.
AcyclicityResult check_acyclic(const PartialOrientation& po, const Graph& g);

/// Non-adjacent ordered pairs (x, y) with zero outdegree at x and zero
/// indegree at y, degrees counted over oriented edges only.
std::vector<std::pair<int, int>> zero_degree_pairs(const PartialOrientation& po, const Graph& g);

IndexReport full_report(const Graph& g);
IndexReport full_report(const Graph& g, const DistanceMatrix& dm);

}  // namespace mostar
