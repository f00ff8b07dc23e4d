#include "mostar/graph.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace mostar {

namespace {

constexpr int kMaxMaterializedOrder = 10000;
constexpr int kGraph6MaxOrder = 62;

// Pair t -> (u, v) ordering: (0,1),(0,2),(1,2),(0,3),... column-major over
// the upper triangle; pair (u, v) with u < v has index v(v-1)/2 + u.
std::uint64_t pair_index(int u, int v) {
    return static_cast<std::uint64_t>(v) * (v - 1) / 2 + u;
}

}  // namespace

Graph::Graph(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("graph order must be at least 1");
    if (n > kMaxMaterializedOrder)
        throw std::invalid_argument("graph order " + std::to_string(n) +
                                    " exceeds materialization cap " +
                                    std::to_string(kMaxMaterializedOrder));
    words_ = static_cast<std::size_t>((n + 63) / 64);
    bits_.assign(static_cast<std::size_t>(n) * words_, 0);
    degrees_.assign(static_cast<std::size_t>(n), 0);
}

void Graph::set_edge(int u, int v) {
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

void Graph::finalize() {
    std::int64_t total = 0;
    for (int u = 0; u < n_; ++u) {
        int deg = 0;
        const std::uint64_t* r = row(u);
        for (std::size_t w = 0; w < words_; ++w) deg += std::popcount(r[w]);
        degrees_[static_cast<std::size_t>(u)] = deg;
        total += deg;
    }
    m_ = total / 2;
    check_invariants();
}

void Graph::check_invariants() const {
    std::int64_t total = 0;
    for (int u = 0; u < n_; ++u) {
        if (adjacent(u, u)) throw std::logic_error("self-loop in adjacency bits");
        if (degrees_[static_cast<std::size_t>(u)] < 0 ||
            degrees_[static_cast<std::size_t>(u)] > n_ - 1)
            throw std::logic_error("degree out of range");
        total += degrees_[static_cast<std::size_t>(u)];
    }
    if (total != 2 * m_) throw std::logic_error("degree sum / edge count mismatch");
    if (n_ <= 2048) {
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (adjacent(u, v) != adjacent(v, u))
                    throw std::logic_error("adjacency not symmetric");
    }
}

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint " + std::to_string(u < 0 || u >= n ? u : v) +
                                        " out of range for order " + std::to_string(n));
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        g.set_edge(u, v);
    }
    g.finalize();
    return g;
}

int Graph::min_degree() const { return *std::min_element(degrees_.begin(), degrees_.end()); }

int Graph::max_degree() const { return *std::max_element(degrees_.begin(), degrees_.end()); }

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for_each_edge([&](int u, int v) { out.emplace_back(u, v); });
    return out;
}

namespace {

// One BFS sweep writing hop counts into dist[0..n). Frontier expansion is
// word-parallel over the bitset rows.
void bfs_into(const Graph& g, int source, std::int32_t* dist,
              std::vector<std::uint64_t>& frontier, std::vector<std::uint64_t>& visited,
              std::vector<std::uint64_t>& next) {
    const int n = g.order();
    const std::size_t words = g.row_words();
    std::fill_n(dist, n, DistanceRow::kUnreachable);
    frontier.assign(words, 0);
    visited.assign(words, 0);
    next.assign(words, 0);

    dist[source] = 0;
    frontier[static_cast<std::size_t>(source >> 6)] = std::uint64_t{1} << (source & 63);
    visited = frontier;

    std::int32_t level = 0;
    bool advanced = true;
    while (advanced) {
        std::fill(next.begin(), next.end(), 0);
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t word = frontier[w];
            while (word) {
                int u = static_cast<int>(w << 6) + __builtin_ctzll(word);
                const std::uint64_t* r = g.row(u);
                for (std::size_t t = 0; t < words; ++t) next[t] |= r[t];
                word &= word - 1;
            }
        }
        ++level;
        advanced = false;
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t fresh = next[w] & ~visited[w];
            next[w] = fresh;
            visited[w] |= fresh;
            while (fresh) {
                int v = static_cast<int>(w << 6) + __builtin_ctzll(fresh);
                dist[v] = level;
                fresh &= fresh - 1;
                advanced = true;
            }
        }
        frontier.swap(next);
    }
}

}  // namespace

DistanceRow bfs_distances(const Graph& g, int source) {
    if (source < 0 || source >= g.order())
        throw std::invalid_argument("bfs source out of range");
    DistanceRow row;
    row.source = source;
    row.dist.resize(static_cast<std::size_t>(g.order()));
    std::vector<std::uint64_t> frontier, visited, next;
    bfs_into(g, source, row.dist.data(), frontier, visited, next);
    return row;
}

void all_pairs_distances_into(const Graph& g, DistanceMatrix& out) {
    const int n = g.order();
    out.n = n;
    out.d.resize(static_cast<std::size_t>(n) * n);
    std::vector<std::uint64_t> frontier, visited, next;
    for (int s = 0; s < n; ++s)
        bfs_into(g, s, out.d.data() + static_cast<std::size_t>(s) * n, frontier, visited, next);
}

DistanceMatrix all_pairs_distances(const Graph& g) {
    DistanceMatrix dm;
    all_pairs_distances_into(g, dm);
    return dm;
}

bool is_connected(const Graph& g) {
    DistanceRow row = bfs_distances(g, 0);
    for (int v = 0; v < g.order(); ++v)
        if (!row.reachable(v)) return false;
    return true;
}

Graph complement(const Graph& g) {
    const int n = g.order();
    Graph out(n);
    for (int u = 0; u < n; ++u) {
        const std::uint64_t* src = g.row(u);
        std::uint64_t* dst = out.bits_.data() + static_cast<std::size_t>(u) * out.words_;
        for (std::size_t w = 0; w < out.words_; ++w) dst[w] = ~src[w];
        // clear the diagonal bit and the tail beyond n
        dst[static_cast<std::size_t>(u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
        const int tail = n & 63;
        if (tail != 0) dst[out.words_ - 1] &= (std::uint64_t{1} << tail) - 1;
    }
    out.finalize();
    return out;
}

// --- graph6 ---

Graph parse_graph6(std::string_view line) {
    if (line.empty()) throw std::runtime_error("graph6: empty line");
    for (char c : line)
        if (c < 63 || c > 126)
            throw std::runtime_error("graph6: byte outside printable range 63..126");
    const int size_byte = static_cast<unsigned char>(line[0]);
    if (size_byte == 126)
        throw std::runtime_error("graph6: multi-byte size form (order > 62) not supported");
    const int n = size_byte - 63;
    if (n < 1)
        throw std::runtime_error("graph6: order " + std::to_string(n) + " not supported");
    const std::uint64_t bits = pair_count(n);
    const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
    if (line.size() != 1 + need)
        throw std::runtime_error(line.size() < 1 + need ? "graph6: truncated line"
                                                        : "graph6: trailing garbage");
    Graph g(n);
    std::uint64_t t = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++t) {
            const int group = static_cast<unsigned char>(line[1 + t / 6]) - 63;
            if ((group >> (5 - t % 6)) & 1) g.set_edge(u, v);
        }
    }
    for (; t < need * 6; ++t) {
        const int group = static_cast<unsigned char>(line[1 + t / 6]) - 63;
        if ((group >> (5 - t % 6)) & 1)
            throw std::runtime_error("graph6: nonzero padding bits");
    }
    g.finalize();
    return g;
}

std::string write_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kGraph6MaxOrder)
        throw std::invalid_argument("graph6 output supports order <= 62, got " +
                                    std::to_string(n));
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int group = 0;
    int filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            group = (group << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    return out;
}

// --- edge-list text form ---

namespace {

std::string strip_comment(const std::string& line) {
    const std::size_t hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

bool next_tokens(std::istream& in, std::istringstream& tokens) {
    std::string line;
    while (std::getline(in, line)) {
        std::string body = strip_comment(line);
        if (body.find_first_not_of(" \t\r") == std::string::npos) continue;
        tokens = std::istringstream(body);
        return true;
    }
    return false;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
    std::istringstream tokens;
    if (!next_tokens(in, tokens)) throw std::runtime_error("edge list: missing header line");
    long long n = 0, m = 0;
    if (!(tokens >> n >> m) || n < 1 || m < 0)
        throw std::runtime_error("edge list: header must be \"n m\"");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_tokens(in, tokens))
            throw std::runtime_error("edge list: expected " + std::to_string(m) +
                                     " edges, found " + std::to_string(i));
        long long u = 0, v = 0;
        if (!(tokens >> u >> v))
            throw std::runtime_error("edge list: malformed edge line " + std::to_string(i + 1));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string write_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
    g.for_each_edge([&](int u, int v) {
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    });
    return out;
}

// --- exhaustive labeled enumeration ---

std::uint64_t pair_count(int n) {
    return static_cast<std::uint64_t>(n) * (n - 1) / 2;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
    Graph g(n);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if ((mask >> pair_index(u, v)) & 1) g.set_edge(u, v);
    g.finalize();
    return g;
}

LabeledGraphStream::LabeledGraphStream(int n) : n_(n) {
    if (n < 1 || n > kMaxEnumerationOrder)
        throw std::invalid_argument("labeled enumeration supports 1 <= n <= " +
                                    std::to_string(kMaxEnumerationOrder));
    total_ = std::uint64_t{1} << pair_count(n);
}

std::optional<Graph> LabeledGraphStream::next() {
    if (done_) return std::nullopt;
    Graph out = graph_from_mask(n_, mask_);
    if (++mask_ == total_) done_ = true;
    return out;
}

}  // namespace mostar
