#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mostar {

/// Immutable simple graph on n vertices. Adjacency is kept as n bitset
/// rows (64-bit words); the degree sequence is cached at construction.
class Graph {
public:
    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    std::int64_t edge_count() const { return m_; }

    bool adjacent(int u, int v) const {
        return (bits_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v >> 6)] >>
                (v & 63)) & 1u;
    }

    int degree(int u) const { return degrees_[static_cast<std::size_t>(u)]; }
    const std::vector<int>& degrees() const { return degrees_; }
    int min_degree() const;
    int max_degree() const;

    /// Words per adjacency row.
    std::size_t row_words() const { return words_; }
    const std::uint64_t* row(int u) const { return bits_.data() + static_cast<std::size_t>(u) * words_; }

    /// Edges as (u, v) with u < v, ordered lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    /// Calls fn(u, v) for every edge with u < v, lexicographic order.
    template <typename Fn>
    void for_each_edge(Fn&& fn) const {
        for (int u = 0; u < n_; ++u) {
            const std::uint64_t* r = row(u);
            for (int w = static_cast<int>(u >> 6); w < static_cast<int>(words_); ++w) {
                std::uint64_t word = r[w];
                if (w == (u >> 6)) word &= ~((static_cast<std::uint64_t>(2) << (u & 63)) - 1);
                while (word) {
                    int v = (w << 6) + __builtin_ctzll(word);
                    fn(u, v);
                    word &= word - 1;
                }
            }
        }
    }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && bits_ == other.bits_;
    }

private:
    Graph(int n);
    void set_edge(int u, int v);
    void finalize();
    void check_invariants() const;

    friend Graph complement(const Graph&);
    friend Graph graph_from_mask(int n, std::uint64_t mask);
    friend Graph parse_graph6(std::string_view line);
    friend class LabeledGraphStream;

    int n_ = 0;
    std::int64_t m_ = 0;
    std::size_t words_ = 1;
    std::vector<std::uint64_t> bits_;
    std::vector<int> degrees_;
};

/// Hop distances from one source vertex. Entries for vertices in other
/// components carry the distinguished marker kUnreachable, never a large
/// sentinel that could slip into sums.
struct DistanceRow {
    static constexpr std::int32_t kUnreachable = -1;

    int source = 0;
    std::vector<std::int32_t> dist;

    bool reachable(int v) const { return dist[static_cast<std::size_t>(v)] >= 0; }
};

DistanceRow bfs_distances(const Graph& g, int source);

/// Row-major n x n matrix of hop distances (kUnreachable across components).
struct DistanceMatrix {
    int n = 0;
    std::vector<std::int32_t> d;

    std::int32_t at(int i, int j) const { return d[static_cast<std::size_t>(i) * n + j]; }
    bool reachable(int i, int j) const { return at(i, j) >= 0; }
};

DistanceMatrix all_pairs_distances(const Graph& g);
void all_pairs_distances_into(const Graph& g, DistanceMatrix& out);

Graph complement(const Graph& g);

bool is_connected(const Graph& g);

// --- graph6 text form (single size byte, n <= 62) ---

Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

// --- edge-list text form: "n m" header line, then "u v" lines, '#' comments ---

Graph parse_edge_list(std::istream& in);
std::string write_edge_list(const Graph& g);

// --- exhaustive labeled enumeration ---

constexpr int kMaxEnumerationOrder = 7;

std::uint64_t pair_count(int n);

/// Graph on n vertices whose edges are the set bits of mask; bit t covers
/// the t-th vertex pair in column-major upper-triangle order
/// (0,1),(0,2),(1,2),(0,3),... (the graph6 bit order).
Graph graph_from_mask(int n, std::uint64_t mask);

/// Streams all 2^(n(n-1)/2) labeled simple graphs of order n in edge-mask
/// counting order. Single producer; yielded graphs are safely shareable.
class LabeledGraphStream {
public:
    explicit LabeledGraphStream(int n);

    std::uint64_t total() const { return total_; }
    std::optional<Graph> next();

private:
    int n_;
    std::uint64_t mask_ = 0;
    std::uint64_t total_;
    bool done_ = false;
};

}  // namespace mostar
