#include "mostar/indices.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mostar {

namespace {

// Single pass of n BFS runs accumulating, per edge, the signed count
// n_uv - n_vu together with transmissions, diameter, and connectivity.
// Memory stays O(n + m); no distance matrix is materialized.
struct EdgeDiffScan {
    std::vector<std::pair<int, int>> edges;
    std::vector<std::int64_t> diff;   // n_uv - n_vu for edges[i] = (u, v)
    std::vector<std::int64_t> sigma;  // component-restricted transmissions
    bool connected = true;
    int diameter = 0;
};

EdgeDiffScan scan_edge_diffs(const Graph& g) {
    const int n = g.order();
    EdgeDiffScan scan;
    scan.edges = g.edges();
    scan.diff.assign(scan.edges.size(), 0);
    scan.sigma.assign(static_cast<std::size_t>(n), 0);

    std::vector<std::int32_t> dist(static_cast<std::size_t>(n));
    for (int w = 0; w < n; ++w) {
        DistanceRow row = bfs_distances(g, w);
        dist = row.dist;
        std::int64_t sum = 0;
        for (int v = 0; v < n; ++v) {
            if (dist[static_cast<std::size_t>(v)] >= 0)
                sum += dist[static_cast<std::size_t>(v)];
            else
                scan.connected = false;
        }
        scan.sigma[static_cast<std::size_t>(w)] = sum;
        if (scan.connected)
            scan.diameter = std::max(scan.diameter,
                                     static_cast<int>(*std::max_element(dist.begin(), dist.end())));
        for (std::size_t e = 0; e < scan.edges.size(); ++e) {
            const auto [u, v] = scan.edges[e];
            const std::int32_t du = dist[static_cast<std::size_t>(u)];
            const std::int32_t dv = dist[static_cast<std::size_t>(v)];
            if (du < 0) continue;  // w in another component: counts in neither
            if (du < dv)
                ++scan.diff[e];
            else if (dv < du)
                --scan.diff[e];
        }
    }
    return scan;
}

void require_edge(const Graph& g, int u, int v) {
    if (u < 0 || u >= g.order() || v < 0 || v >= g.order() || u == v || !g.adjacent(u, v))
        throw std::invalid_argument("(" + std::to_string(u) + "," + std::to_string(v) +
                                    ") is not an edge of the graph");
}

EdgeUnbalance unbalance_from_distances(const Graph& g, int u, int v,
                                       const std::int32_t* dist_to_u,
                                       const std::int32_t* dist_to_v) {
    EdgeUnbalance r;
    r.u = u;
    r.v = v;
    for (int w = 0; w < g.order(); ++w) {
        const std::int32_t du = dist_to_u[w];
        const std::int32_t dv = dist_to_v[w];
        if (du < 0) continue;
        if (du < dv)
            ++r.n_uv;
        else if (dv < du)
            ++r.n_vu;
    }
    r.abs_diff = std::abs(r.n_uv - r.n_vu);
    r.mostar_star_term = g.order() - std::min(g.degree(u), g.degree(v));
    return r;
}

}  // namespace

EdgeUnbalance edge_unbalance(const Graph& g, int u, int v) {
    require_edge(g, u, v);
    DistanceRow from_u = bfs_distances(g, u);
    DistanceRow from_v = bfs_distances(g, v);
    return unbalance_from_distances(g, u, v, from_u.dist.data(), from_v.dist.data());
}

std::int64_t mostar_index(const Graph& g) {
    EdgeDiffScan scan = scan_edge_diffs(g);
    std::int64_t total = 0;
    for (std::int64_t d : scan.diff) total += std::abs(d);
    return total;
}

std::int64_t mostar_index(const Graph& g, const DistanceMatrix& dm) {
    std::int64_t total = 0;
    const int n = g.order();
    g.for_each_edge([&](int u, int v) {
        std::int64_t diff = 0;
        for (int w = 0; w < n; ++w) {
            const std::int32_t du = dm.at(w, u);
            const std::int32_t dv = dm.at(w, v);
            if (du < 0) continue;
            if (du < dv)
                ++diff;
            else if (dv < du)
                --diff;
        }
        total += std::abs(diff);
    });
    return total;
}

std::int64_t mostar_star(const Graph& g) {
    const int n = g.order();
    std::int64_t total = 0;
    g.for_each_edge([&](int u, int v) { total += n - std::min(g.degree(u), g.degree(v)); });
    return total;
}

std::int64_t mostar_star_via_forward_edges(const Graph& g) {
    const int n = g.order();
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return g.degree(a) != g.degree(b) ? g.degree(a) < g.degree(b) : a < b;
    });
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;

    std::vector<std::int64_t> forward(static_cast<std::size_t>(n), 0);
    g.for_each_edge([&](int u, int v) {
        const int earlier = pos[static_cast<std::size_t>(u)] < pos[static_cast<std::size_t>(v)] ? u : v;
        ++forward[static_cast<std::size_t>(earlier)];
    });
    std::int64_t total = 0;
    for (int u = 0; u < n; ++u)
        total += forward[static_cast<std::size_t>(u)] * (n - g.degree(u));
    return total;
}

TransmissionVector transmissions(const Graph& g) {
    const int n = g.order();
    TransmissionVector tv;
    tv.sigma.assign(static_cast<std::size_t>(n), 0);
    for (int w = 0; w < n; ++w) {
        DistanceRow row = bfs_distances(g, w);
        std::int64_t sum = 0;
        for (int v = 0; v < n; ++v) {
            if (row.reachable(v))
                sum += row.dist[static_cast<std::size_t>(v)];
            else
                tv.component_restricted = true;
        }
        tv.sigma[static_cast<std::size_t>(w)] = sum;
    }
    return tv;
}

TransmissionVector transmissions(const Graph& g, const DistanceMatrix& dm) {
    const int n = g.order();
    TransmissionVector tv;
    tv.sigma.assign(static_cast<std::size_t>(n), 0);
    for (int w = 0; w < n; ++w) {
        std::int64_t sum = 0;
        for (int v = 0; v < n; ++v) {
            const std::int32_t d = dm.at(w, v);
            if (d >= 0)
                sum += d;
            else
                tv.component_restricted = true;
        }
        tv.sigma[static_cast<std::size_t>(w)] = sum;
    }
    return tv;
}

std::int64_t irregularity(const Graph& g) {
    std::int64_t total = 0;
    g.for_each_edge([&](int u, int v) { total += std::abs(g.degree(u) - g.degree(v)); });
    return total;
}

namespace {

PartialOrientation orientation_from_diffs(const std::vector<std::pair<int, int>>& edges,
                                          const std::vector<std::int64_t>& diff) {
    PartialOrientation po;
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const auto [u, v] = edges[e];
        if (diff[e] > 0)
            po.oriented.emplace_back(v, u);  // n_uv > n_vu: orient from v to u
        else if (diff[e] < 0)
            po.oriented.emplace_back(u, v);
        else
            po.unoriented.emplace_back(u, v);
    }
    return po;
}

}  // namespace

PartialOrientation partial_orientation(const Graph& g) {
    EdgeDiffScan scan = scan_edge_diffs(g);
    return orientation_from_diffs(scan.edges, scan.diff);
}

PartialOrientation partial_orientation(const Graph& g, const DistanceMatrix& dm) {
    const int n = g.order();
    std::vector<std::pair<int, int>> edges = g.edges();
    std::vector<std::int64_t> diff(edges.size(), 0);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const auto [u, v] = edges[e];
        for (int w = 0; w < n; ++w) {
            const std::int32_t du = dm.at(w, u);
            const std::int32_t dv = dm.at(w, v);
            if (du < 0) continue;
            if (du < dv)
                ++diff[e];
            else if (dv < du)
                --diff[e];
        }
    }
    return orientation_from_diffs(edges, diff);
}

namespace {

// The orientation lists must partition E(G) exactly.
void require_partition(const PartialOrientation& po, const Graph& g) {
    const std::int64_t listed =
        static_cast<std::int64_t>(po.oriented.size()) + static_cast<std::int64_t>(po.unoriented.size());
    if (listed != g.edge_count())
        throw std::invalid_argument("orientation does not match the graph's edge count");
    std::vector<char> seen(pair_count(g.order()), 0);
    auto mark = [&](int a, int b) {
        if (a < 0 || b < 0 || a >= g.order() || b >= g.order() || a == b || !g.adjacent(a, b))
            throw std::invalid_argument("orientation lists a non-edge");
        const int lo = std::min(a, b);
        const int hi = std::max(a, b);
        const std::uint64_t idx = static_cast<std::uint64_t>(hi) * (hi - 1) / 2 + lo;
        if (seen[idx]) throw std::invalid_argument("orientation lists an edge twice");
        seen[idx] = 1;
    };
    for (const auto& [t, h] : po.oriented) mark(t, h);
    for (const auto& [u, v] : po.unoriented) mark(u, v);
}

struct MixedDigraph {
    std::vector<std::vector<int>> out;

    explicit MixedDigraph(const PartialOrientation& po, int n) : out(static_cast<std::size_t>(n)) {
        for (const auto& [t, h] : po.oriented) out[static_cast<std::size_t>(t)].push_back(h);
        for (const auto& [u, v] : po.unoriented) {
            out[static_cast<std::size_t>(u)].push_back(v);
            out[static_cast<std::size_t>(v)].push_back(u);
        }
    }
};

// Iterative Tarjan over the mixed digraph.
std::vector<int> strongly_connected_components(const MixedDigraph& dg) {
    const int n = static_cast<int>(dg.out.size());
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0), num(static_cast<std::size_t>(n), -1);
    std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
    std::vector<int> stack;
    int counter = 0, comp_count = 0;

    struct Frame {
        int v;
        std::size_t next_child;
    };
    std::vector<Frame> frames;
    for (int root = 0; root < n; ++root) {
        if (num[static_cast<std::size_t>(root)] != -1) continue;
        frames.push_back({root, 0});
        while (!frames.empty()) {
            Frame& f = frames.back();
            const int v = f.v;
            if (f.next_child == 0) {
                num[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = counter++;
                stack.push_back(v);
                on_stack[static_cast<std::size_t>(v)] = 1;
            }
            bool descended = false;
            while (f.next_child < dg.out[static_cast<std::size_t>(v)].size()) {
                const int w = dg.out[static_cast<std::size_t>(v)][f.next_child++];
                if (num[static_cast<std::size_t>(w)] == -1) {
                    frames.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[static_cast<std::size_t>(w)])
                    low[static_cast<std::size_t>(v)] =
                        std::min(low[static_cast<std::size_t>(v)], num[static_cast<std::size_t>(w)]);
            }
            if (descended) continue;
            if (low[static_cast<std::size_t>(v)] == num[static_cast<std::size_t>(v)]) {
                while (true) {
                    const int w = stack.back();
                    stack.pop_back();
                    on_stack[static_cast<std::size_t>(w)] = 0;
                    comp[static_cast<std::size_t>(w)] = comp_count;
                    if (w == v) break;
                }
                ++comp_count;
            }
            frames.pop_back();
            if (!frames.empty()) {
                const int parent = frames.back().v;
                low[static_cast<std::size_t>(parent)] =
                    std::min(low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(v)]);
            }
        }
    }
    return comp;
}

// Shortest directed path from -> to within one SCC of the mixed digraph.
std::vector<int> directed_path(const MixedDigraph& dg, const std::vector<int>& comp, int from,
                               int to) {
    const int n = static_cast<int>(dg.out.size());
    std::vector<int> parent(static_cast<std::size_t>(n), -2);
    std::vector<int> queue{from};
    parent[static_cast<std::size_t>(from)] = -1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int v = queue[head];
        if (v == to) break;
        for (int w : dg.out[static_cast<std::size_t>(v)]) {
            if (comp[static_cast<std::size_t>(w)] != comp[static_cast<std::size_t>(from)]) continue;
            if (parent[static_cast<std::size_t>(w)] != -2) continue;
            parent[static_cast<std::size_t>(w)] = v;
            queue.push_back(w);
        }
    }
    std::vector<int> path;
    for (int v = to; v != -1; v = parent[static_cast<std::size_t>(v)]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

AcyclicityResult check_acyclic(const PartialOrientation& po, const Graph& g) {
    require_partition(po, g);
    AcyclicityResult result;
    MixedDigraph dg(po, g.order());
    const std::vector<int> comp = strongly_connected_components(dg);
    for (const auto& [tail, head] : po.oriented) {
        if (comp[static_cast<std::size_t>(tail)] != comp[static_cast<std::size_t>(head)]) continue;
        result.acyclic = false;
        // closed walk tail -> head -> ... -> tail using the oriented edge first
        result.witness_cycle = directed_path(dg, comp, head, tail);
        result.witness_cycle.insert(result.witness_cycle.begin(), tail);
        return result;
    }
    return result;
}

std::vector<std::pair<int, int>> zero_degree_pairs(const PartialOrientation& po, const Graph& g) {
    require_partition(po, g);
    const int n = g.order();
    std::vector<int> outdeg(static_cast<std::size_t>(n), 0), indeg(static_cast<std::size_t>(n), 0);
    for (const auto& [t, h] : po.oriented) {
        ++outdeg[static_cast<std::size_t>(t)];
        ++indeg[static_cast<std::size_t>(h)];
    }
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < n; ++x) {
        if (outdeg[static_cast<std::size_t>(x)] != 0) continue;
        for (int y = 0; y < n; ++y) {
            if (y == x || indeg[static_cast<std::size_t>(y)] != 0) continue;
            if (g.adjacent(x, y)) continue;
            pairs.emplace_back(x, y);
        }
    }
    return pairs;
}

namespace {

IndexReport report_from_parts(const Graph& g, std::int64_t mo, bool connected, int diameter) {
    IndexReport rep;
    rep.n = g.order();
    rep.m = g.edge_count();
    rep.mo = mo;
    rep.mo_star = mostar_star(g);
    rep.irr = irregularity(g);
    rep.delta_min = g.min_degree();
    rep.delta_max = g.max_degree();
    rep.connected = connected;
    if (connected) rep.diameter = diameter;
    if (rep.mo > rep.mo_star)
        throw std::logic_error("Mo exceeds Mo*: computation bug");
    return rep;
}

}  // namespace

IndexReport full_report(const Graph& g) {
    EdgeDiffScan scan = scan_edge_diffs(g);
    std::int64_t mo = 0;
    for (std::int64_t d : scan.diff) mo += std::abs(d);
    return report_from_parts(g, mo, scan.connected, scan.diameter);
}

IndexReport full_report(const Graph& g, const DistanceMatrix& dm) {
    const int n = g.order();
    bool connected = true;
    int diameter = 0;
    for (int i = 0; i < n && connected; ++i) {
        for (int j = 0; j < n; ++j) {
            const std::int32_t d = dm.at(i, j);
            if (d < 0) {
                connected = false;
                break;
            }
            diameter = std::max(diameter, static_cast<int>(d));
        }
    }
    return report_from_parts(g, mostar_index(g, dm), connected, diameter);
}

}  // namespace mostar
