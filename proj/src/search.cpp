#include "mostar/search.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>
#include <thread>

#include "mostar/bounds.hpp"
#include "mostar/indices.hpp"

namespace mostar {

int resolve_threads(int requested) {
    int t = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
    if (t < 1) t = 1;
    if (const char* env = std::getenv("MOSTAR_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1) t = std::min(t, cap);
    }
    return std::min(t, 256);
}

namespace {

constexpr std::int64_t kUnset = -1;

struct MaxEntry {
    std::int64_t value = kUnset;
    std::uint64_t index = 0;
    std::string witness;

    void offer(std::int64_t v, std::uint64_t idx, const Graph& g) {
        if (v > value || (v == value && idx < index)) {
            value = v;
            index = idx;
            witness = write_graph6(g);
        }
    }

    void merge(const MaxEntry& other) {
        if (other.value > value || (other.value == value && other.index < index)) *this = other;
    }
};

struct PartialOrderStats {
    std::uint64_t scanned = 0;
    MaxEntry mo;
    MaxEntry mo_star;
};

struct PartialScan {
    std::map<int, PartialOrderStats> orders;
    std::vector<Violation> violations;  // lowest-index prefix, <= cap
    std::uint64_t violation_count = 0;
    std::vector<ParseFailure> parse_failures;
    std::uint64_t scanned = 0;

    void merge(PartialScan&& other) {
        for (auto& [n, stats] : other.orders) {
            PartialOrderStats& mine = orders[n];
            mine.scanned += stats.scanned;
            mine.mo.merge(stats.mo);
            mine.mo_star.merge(stats.mo_star);
        }
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
        violation_count += other.violation_count;
        parse_failures.insert(parse_failures.end(), other.parse_failures.begin(),
                              other.parse_failures.end());
        scanned += other.scanned;
    }

    ScanResult finish() {
        ScanResult result;
        for (auto& [n, stats] : orders) {
            OrderStats os;
            os.n = n;
            os.graphs_scanned = stats.scanned;
            os.max_mo = stats.mo.value;
            os.max_mo_witness = stats.mo.witness;
            os.max_mo_star = stats.mo_star.value;
            os.max_mo_star_witness = stats.mo_star.witness;
            result.orders.push_back(std::move(os));
        }
        std::sort(violations.begin(), violations.end(),
                  [](const Violation& a, const Violation& b) { return a.index < b.index; });
        if (violations.size() > kMaxRecordedViolations) violations.resize(kMaxRecordedViolations);
        result.violations = std::move(violations);
        result.violation_count = violation_count;
        std::sort(parse_failures.begin(), parse_failures.end(),
                  [](const ParseFailure& a, const ParseFailure& b) { return a.line < b.line; });
        result.parse_failures = std::move(parse_failures);
        result.graphs_scanned = scanned;
        return result;
    }
};

// Reusable buffers plus per-order constants for the inner check loop.
struct CheckScratch {
    DistanceMatrix dm;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::int64_t> n_uv, n_vu;
    std::vector<std::int64_t> sigma;
    std::map<int, std::vector<double>> maxdeg_bounds;  // n -> f(Delta/n) n^3 by Delta

    const std::vector<double>& maxdeg_table(int n) {
        auto it = maxdeg_bounds.find(n);
        if (it != maxdeg_bounds.end()) return it->second;
        std::vector<double> table(static_cast<std::size_t>(n), 0.0);
        for (int delta = 1; delta <= n - 1; ++delta)
            table[static_cast<std::size_t>(delta)] = bound_maxdeg(n, delta);
        return maxdeg_bounds.emplace(n, std::move(table)).first->second;
    }
};

void emit(PartialScan& out, const char* check, const Graph& g, std::uint64_t index) {
    ++out.violation_count;
    if (out.violations.size() < kMaxRecordedViolations)
        out.violations.push_back({check, write_graph6(g), index});
}

void run_checks(const Graph& g, std::uint64_t index, CheckSet checks, PartialScan& out,
                CheckScratch& s) {
    const int n = g.order();
    all_pairs_distances_into(g, s.dm);

    s.edges = g.edges();
    const std::size_t m = s.edges.size();
    s.n_uv.assign(m, 0);
    s.n_vu.assign(m, 0);
    s.sigma.assign(static_cast<std::size_t>(n), 0);

    bool connected = true;
    int diameter = 0;
    for (int w = 0; w < n; ++w) {
        std::int64_t sum = 0;
        for (int v = 0; v < n; ++v) {
            const std::int32_t d = s.dm.at(w, v);
            if (d < 0)
                connected = false;
            else {
                sum += d;
                diameter = std::max(diameter, static_cast<int>(d));
            }
        }
        s.sigma[static_cast<std::size_t>(w)] = sum;
    }
    for (std::size_t e = 0; e < m; ++e) {
        const auto [u, v] = s.edges[e];
        for (int w = 0; w < n; ++w) {
            const std::int32_t du = s.dm.at(w, u);
            const std::int32_t dv = s.dm.at(w, v);
            if (du < 0) continue;
            if (du < dv)
                ++s.n_uv[e];
            else if (dv < du)
                ++s.n_vu[e];
        }
    }

    std::int64_t mo = 0;
    for (std::size_t e = 0; e < m; ++e) mo += std::abs(s.n_uv[e] - s.n_vu[e]);
    const std::int64_t mo_star = mostar_star(g);
    const std::int64_t irr = irregularity(g);

    PartialOrderStats& stats = out.orders[n];
    ++stats.scanned;
    ++out.scanned;
    stats.mo.offer(mo, index, g);
    stats.mo_star.offer(mo_star, index, g);

    if (has_check(checks, Check::kMoLeMoStar) && mo > mo_star)
        emit(out, "mo_le_mo_star", g, index);

    if (has_check(checks, Check::kSigmaIdentity)) {
        for (std::size_t e = 0; e < m; ++e) {
            const auto [u, v] = s.edges[e];
            if (s.n_uv[e] - s.n_vu[e] !=
                s.sigma[static_cast<std::size_t>(v)] - s.sigma[static_cast<std::size_t>(u)]) {
                emit(out, "sigma_identity", g, index);
                break;
            }
        }
    }

    if (has_check(checks, Check::kEdgeCountSanity)) {
        for (std::size_t e = 0; e < m; ++e) {
            const auto [u, v] = s.edges[e];
            const std::int64_t term = n - std::min(g.degree(u), g.degree(v));
            bool ok = s.n_uv[e] >= 1 && s.n_vu[e] >= 1 && s.n_uv[e] + s.n_vu[e] <= n;
            if (connected) ok = ok && std::abs(s.n_uv[e] - s.n_vu[e]) <= term - 1;
            if (!ok) {
                emit(out, "edge_count_sanity", g, index);
                break;
            }
        }
    }

    if (has_check(checks, Check::kDiameterTwoIrr) && connected && diameter <= 2 && mo != irr)
        emit(out, "diameter2_irr", g, index);

    if (has_check(checks, Check::kOrientationAcyclic)) {
        PartialOrientation po;
        for (std::size_t e = 0; e < m; ++e) {
            const auto [u, v] = s.edges[e];
            if (s.n_uv[e] > s.n_vu[e])
                po.oriented.emplace_back(v, u);
            else if (s.n_vu[e] > s.n_uv[e])
                po.oriented.emplace_back(u, v);
            else
                po.unoriented.emplace_back(u, v);
        }
        bool ok = true;
        for (const auto& [tail, head] : po.oriented)
            ok = ok && s.sigma[static_cast<std::size_t>(head)] < s.sigma[static_cast<std::size_t>(tail)];
        if (ok) ok = check_acyclic(po, g).acyclic;
        if (!ok) emit(out, "orientation_acyclic", g, index);
    }

    if (has_check(checks, Check::kBoundsDominate)) {
        const std::int64_t n3 = static_cast<std::int64_t>(n) * n * n;
        const double guard = 1e-6 * std::max(1.0, static_cast<double>(n3));
        bool ok = 2 * mo_star < n3;
        ok = ok && static_cast<double>(mo_star) <= bound_global(n) + guard;
        const int delta = g.max_degree();
        if (delta >= 1)
            ok = ok && static_cast<double>(mo_star) <=
                           s.maxdeg_table(n)[static_cast<std::size_t>(delta)] + guard;
        ok = ok && mo_star <= bound_degseq(g).bound;
        if (!ok) emit(out, "bounds_dominate", g, index);
    }

    if (has_check(checks, Check::kForwardEdges) && mostar_star_via_forward_edges(g) != mo_star)
        emit(out, "forward_edges", g, index);

    if (has_check(checks, Check::kGraph6RoundTrip)) {
        const std::string line = write_graph6(g);
        if (!(parse_graph6(line) == g)) emit(out, "graph6_roundtrip", g, index);
    }
}

template <typename Work>
std::vector<PartialScan> run_workers(int threads, std::uint64_t items, Work&& work) {
    const int t = std::max(1, std::min<int>(threads, static_cast<int>(std::min<std::uint64_t>(
                                                         items, 256))));
    std::vector<PartialScan> partials(static_cast<std::size_t>(t));
    if (t == 1) {
        work(0, std::uint64_t{0}, items, partials[0]);
        return partials;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) {
        const std::uint64_t lo = items * static_cast<std::uint64_t>(i) / static_cast<std::uint64_t>(t);
        const std::uint64_t hi =
            items * static_cast<std::uint64_t>(i + 1) / static_cast<std::uint64_t>(t);
        pool.emplace_back([&, i, lo, hi] {
            try {
                work(i, lo, hi, partials[static_cast<std::size_t>(i)]);
            } catch (...) {
                errors[static_cast<std::size_t>(i)] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& err : errors)
        if (err) std::rethrow_exception(err);
    return partials;
}

ScanResult merge_partials(std::vector<PartialScan>&& partials) {
    PartialScan total;
    for (auto& p : partials) total.merge(std::move(p));
    return total.finish();
}

}  // namespace

ScanResult exhaustive_scan(int n, CheckSet checks, int threads) {
    if (n < 1 || n > kMaxEnumerationOrder)
        throw std::invalid_argument("exhaustive scan supports 1 <= n <= " +
                                    std::to_string(kMaxEnumerationOrder));
    const std::uint64_t total = std::uint64_t{1} << pair_count(n);
    auto partials = run_workers(
        resolve_threads(threads), total,
        [&](int, std::uint64_t lo, std::uint64_t hi, PartialScan& out) {
            CheckScratch scratch;
            for (std::uint64_t mask = lo; mask < hi; ++mask) {
                const Graph g = graph_from_mask(n, mask);
                run_checks(g, mask, checks, out, scratch);
            }
        });
    return merge_partials(std::move(partials));
}

ScanResult corpus_scan(std::istream& in, CheckSet checks, int threads) {
    constexpr std::size_t kBatchLines = 1u << 16;
    PartialScan total;
    std::vector<std::pair<std::uint64_t, std::string>> batch;
    std::string line;
    std::uint64_t line_number = 0;
    const int t = resolve_threads(threads);

    auto flush = [&] {
        if (batch.empty()) return;
        auto partials = run_workers(
            t, batch.size(), [&](int, std::uint64_t lo, std::uint64_t hi, PartialScan& out) {
                CheckScratch scratch;
                for (std::uint64_t i = lo; i < hi; ++i) {
                    const auto& [ln, text] = batch[static_cast<std::size_t>(i)];
                    try {
                        const Graph g = parse_graph6(text);
                        run_checks(g, ln, checks, out, scratch);
                    } catch (const std::exception& e) {
                        out.parse_failures.push_back({ln, e.what()});
                    }
                }
            });
        for (auto& p : partials) total.merge(std::move(p));
        batch.clear();
    };

    while (std::getline(in, line)) {
        ++line_number;
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        batch.emplace_back(line_number, line);
        if (batch.size() >= kBatchLines) flush();
    }
    flush();
    return total.finish();
}

ScanResult corpus_scan_file(const std::string& path, CheckSet checks, int threads) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open corpus file: " + path);
    return corpus_scan(in, checks, threads);
}

// --- local search ---

namespace {

constexpr int kLocalSearchMaxOrder = 60;

// Single-word adjacency rows: every supported order fits 64 bits.
struct SmallGraph {
    int n = 0;
    std::uint64_t rows[kLocalSearchMaxOrder] = {};

    void toggle(int u, int v) {
        rows[u] ^= std::uint64_t{1} << v;
        rows[v] ^= std::uint64_t{1} << u;
    }
    bool adjacent(int u, int v) const { return (rows[u] >> v) & 1u; }
};

constexpr std::uint8_t kFarByte = 0xff;

// Distances via n single-word BFS sweeps into an n x n byte matrix.
void small_fill_dist(const SmallGraph& g, std::uint8_t* dist) {
    const int n = g.n;
    for (int s = 0; s < n; ++s) {
        std::uint8_t* row = dist + static_cast<std::size_t>(s) * n;
        std::fill_n(row, n, kFarByte);
        row[s] = 0;
        std::uint64_t visited = std::uint64_t{1} << s;
        std::uint64_t frontier = visited;
        std::uint8_t level = 0;
        while (frontier) {
            std::uint64_t next = 0;
            std::uint64_t f = frontier;
            while (f) {
                next |= g.rows[__builtin_ctzll(f)];
                f &= f - 1;
            }
            next &= ~visited;
            visited |= next;
            ++level;
            f = next;
            while (f) {
                row[__builtin_ctzll(f)] = level;
                f &= f - 1;
            }
            frontier = next;
        }
    }
}

std::int64_t small_mo_from_dist(const SmallGraph& g, const std::uint8_t* dist) {
    const int n = g.n;
    std::int64_t mo = 0;
    for (int u = 0; u < n; ++u) {
        std::uint64_t bits = g.rows[u] & ~((std::uint64_t{2} << u) - 1);
        while (bits) {
            const int v = __builtin_ctzll(bits);
            bits &= bits - 1;
            std::int64_t diff = 0;
            for (int w = 0; w < n; ++w) {
                const std::uint8_t du = dist[static_cast<std::size_t>(w) * n + u];
                const std::uint8_t dv = dist[static_cast<std::size_t>(w) * n + v];
                if (du == kFarByte) continue;
                if (du < dv)
                    ++diff;
                else if (dv < du)
                    --diff;
            }
            mo += std::abs(diff);
        }
    }
    return mo;
}

std::int64_t small_mostar(const SmallGraph& g, std::uint8_t* dist) {
    small_fill_dist(g, dist);
    return small_mo_from_dist(g, dist);
}

// Missing edges between zero-outdegree and zero-indegree vertices of the
// current partial orientation, in pair-index order.
std::vector<std::pair<int, int>> zero_degree_additions(const SmallGraph& g,
                                                       const std::uint8_t* dist) {
    const int n = g.n;
    std::vector<std::int64_t> sigma(static_cast<std::size_t>(n), 0);
    for (int w = 0; w < n; ++w)
        for (int v = 0; v < n; ++v) {
            const std::uint8_t d = dist[static_cast<std::size_t>(w) * n + v];
            if (d != kFarByte) sigma[static_cast<std::size_t>(w)] += d;
        }
    std::uint64_t has_out = 0, has_in = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            if (!g.adjacent(u, v)) continue;
            // n_uv - n_vu = sigma(v) - sigma(u): the larger-sigma endpoint
            // is the tail of the oriented edge
            if (sigma[static_cast<std::size_t>(v)] > sigma[static_cast<std::size_t>(u)]) {
                has_out |= std::uint64_t{1} << v;
                has_in |= std::uint64_t{1} << u;
            } else if (sigma[static_cast<std::size_t>(u)] > sigma[static_cast<std::size_t>(v)]) {
                has_out |= std::uint64_t{1} << u;
                has_in |= std::uint64_t{1} << v;
            }
        }
    std::vector<std::pair<int, int>> additions;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            if (g.adjacent(u, v)) continue;
            const bool u_out0 = !((has_out >> u) & 1), u_in0 = !((has_in >> u) & 1);
            const bool v_out0 = !((has_out >> v) & 1), v_in0 = !((has_in >> v) & 1);
            if ((u_out0 && v_in0) || (v_out0 && u_in0)) additions.emplace_back(u, v);
        }
    return additions;
}

struct RestartOutcome {
    std::int64_t best_mo = -1;
    SmallGraph best_graph;
    std::uint64_t evaluations = 0;
};

RestartOutcome run_restart(const LocalSearchConfig& config, int restart_index) {
    const int n = config.n;
    std::mt19937_64 rng(config.seed + static_cast<std::uint64_t>(restart_index));
    SmallGraph g;
    g.n = n;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (rng() & 1u) g.toggle(u, v);

    std::vector<std::uint8_t> dist(static_cast<std::size_t>(n) * n);
    RestartOutcome outcome;
    std::int64_t current = small_mostar(g, dist.data());
    ++outcome.evaluations;
    outcome.best_mo = current;
    outcome.best_graph = g;

    int plateau = 0;
    while (true) {
        std::int64_t best_gain = std::numeric_limits<std::int64_t>::min();
        int best_u = -1, best_v = -1;

        if (config.prioritize_zero_degree_pairs) {
            small_fill_dist(g, dist.data());
            for (const auto& [u, v] : zero_degree_additions(g, dist.data())) {
                g.toggle(u, v);
                const std::int64_t gain = small_mostar(g, dist.data()) - current;
                ++outcome.evaluations;
                g.toggle(u, v);
                if (gain > best_gain) {
                    best_gain = gain;
                    best_u = u;
                    best_v = v;
                }
            }
            if (best_gain <= 0) best_gain = std::numeric_limits<std::int64_t>::min();
        }

        if (best_gain == std::numeric_limits<std::int64_t>::min()) {
            for (int v = 1; v < n; ++v) {
                for (int u = 0; u < v; ++u) {
                    g.toggle(u, v);
                    const std::int64_t gain = small_mostar(g, dist.data()) - current;
                    ++outcome.evaluations;
                    g.toggle(u, v);
                    if (gain > best_gain) {
                        best_gain = gain;
                        best_u = u;
                        best_v = v;
                    }
                }
            }
        }
        if (best_gain > 0) {
            plateau = 0;
        } else if (best_gain == 0 && plateau < config.max_plateau_steps) {
            ++plateau;
        } else {
            break;  // strict local optimum (or plateau budget exhausted)
        }
        g.toggle(best_u, best_v);
        current += best_gain;
        if (current > outcome.best_mo) {
            outcome.best_mo = current;
            outcome.best_graph = g;
        }
    }
    return outcome;
}

}  // namespace

LocalSearchResult local_search_max_mo(const LocalSearchConfig& config, int threads) {
    if (config.n < 4 || config.n > kLocalSearchMaxOrder)
        throw std::invalid_argument("local search supports 4 <= n <= " +
                                    std::to_string(kLocalSearchMaxOrder));
    if (config.restarts < 1) throw std::invalid_argument("restarts must be positive");
    if (config.max_plateau_steps < 0)
        throw std::invalid_argument("max_plateau_steps must be non-negative");

    std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(config.restarts));
    const int t = std::min(resolve_threads(threads), config.restarts);
    if (t == 1) {
        for (int r = 0; r < config.restarts; ++r)
            outcomes[static_cast<std::size_t>(r)] = run_restart(config, r);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(t));
        for (int i = 0; i < t; ++i) {
            pool.emplace_back([&, i] {
                try {
                    for (int r = i; r < config.restarts; r += t)
                        outcomes[static_cast<std::size_t>(r)] = run_restart(config, r);
                } catch (...) {
                    errors[static_cast<std::size_t>(i)] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (const auto& err : errors)
            if (err) std::rethrow_exception(err);
    }

    LocalSearchResult result;
    result.config = config;
    int best_restart = 0;
    for (int r = 1; r < config.restarts; ++r)
        if (outcomes[static_cast<std::size_t>(r)].best_mo >
            outcomes[static_cast<std::size_t>(best_restart)].best_mo)
            best_restart = r;
    const RestartOutcome& best = outcomes[static_cast<std::size_t>(best_restart)];
    for (const auto& o : outcomes) result.evaluations += o.evaluations;
    result.best_mo = best.best_mo;

    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < config.n; ++v)
        for (int u = 0; u < v; ++u)
            if (best.best_graph.adjacent(u, v)) edges.emplace_back(u, v);
    result.witness_graph6 = write_graph6(Graph::from_edge_list(config.n, edges));

    for (std::int64_t k = 1; k < config.n; ++k) {
        const std::int64_t rest = config.n - k;
        result.split_baseline_mo = std::max(result.split_baseline_mo, k * rest * (rest - 1));
    }
    result.ratio_vs_split_baseline =
        static_cast<double>(result.best_mo) / static_cast<double>(result.split_baseline_mo);
    return result;
}

}  // namespace mostar
