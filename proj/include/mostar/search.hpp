#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mostar/graph.hpp"

namespace mostar {

/// Invariant checks a scan can run per graph. Every one of these encodes a
/// proven statement, so any violation is an implementation bug, never data.
enum class Check : unsigned {
    kMoLeMoStar = 1u << 0,         // Mo <= Mo*
    kSigmaIdentity = 1u << 1,      // n_uv - n_vu = sigma(v) - sigma(u) on edges
    kDiameterTwoIrr = 1u << 2,     // Mo = irr for connected diameter <= 2
    kOrientationAcyclic = 1u << 3, // partial orientation has no mixed cycle
    kBoundsDominate = 1u << 4,     // Mo* <= trivial/global/maxdeg/degseq bounds
    kForwardEdges = 1u << 5,       // forward-edge route equals Mo*
    kGraph6RoundTrip = 1u << 6,    // parse(write(g)) == g
    kEdgeCountSanity = 1u << 7,    // n_uv >= 1, n_uv + n_vu <= n, diff bound
};

using CheckSet = unsigned;

inline constexpr CheckSet kAllChecks = 0xffu;

inline bool has_check(CheckSet set, Check c) {
    return (set & static_cast<unsigned>(c)) != 0;
}

struct Violation {
    std::string check;
    std::string witness_graph6;
    std::uint64_t index = 0;  // position in the scanned stream
};

struct ParseFailure {
    std::uint64_t line = 0;  // 1-based line number in the corpus file
    std::string message;
};

struct OrderStats {
    int n = 0;
    std::uint64_t graphs_scanned = 0;
    std::int64_t max_mo = -1;
    std::string max_mo_witness;
    std::int64_t max_mo_star = -1;
    std::string max_mo_star_witness;
};

/// Scan outcome. Maxima are deterministic in the input content: witnesses
/// are the earliest stream positions attaining each maximum, independent
/// of worker count. The violation list keeps the lowest-index entries up
/// to a fixed cap; violation_count is the true total.
struct ScanResult {
    std::vector<OrderStats> orders;  // ascending by n
    std::vector<Violation> violations;
    std::uint64_t violation_count = 0;
    std::vector<ParseFailure> parse_failures;
    std::uint64_t graphs_scanned = 0;
};

inline constexpr std::size_t kMaxRecordedViolations = 100;

/// Worker count resolution: requested <= 0 means hardware concurrency;
/// the MOSTAR_THREADS environment variable caps the result.
int resolve_threads(int requested);

/// Runs every requested check on all 2^(n(n-1)/2) labeled graphs of order
/// n (n <= 7).
ScanResult exhaustive_scan(int n, CheckSet checks = kAllChecks, int threads = 0);

/// Same checks over a stream of graph6 lines (orders may be mixed).
/// Malformed lines are recorded and skipped; scanning continues.
ScanResult corpus_scan(std::istream& in, CheckSet checks = kAllChecks, int threads = 0);
ScanResult corpus_scan_file(const std::string& path, CheckSet checks = kAllChecks,
                            int threads = 0);

/// Seeded hill climbing over single edge toggles. Each restart starts from
/// a uniform random graph (edge probability 1/2, RNG seeded with
/// seed + restart index), repeatedly applies the toggle with the largest
/// Mo gain (ties broken by lowest pair index in the column-major order
/// (0,1),(0,2),(1,2),(0,3),...), walks zero-gain plateaus up to
/// max_plateau_steps, and stops at a strict local optimum.
///
/// prioritize_zero_degree_pairs, off by default, first offers the missing
/// edges between zero-outdegree and zero-indegree vertices of the current
/// partial orientation; the full toggle neighborhood is consulted only
/// when none of those additions strictly improves Mo.
struct LocalSearchConfig {
    int n = 6;
    int restarts = 20;
    std::uint64_t seed = 0;
    int max_plateau_steps = 32;
    bool prioritize_zero_degree_pairs = false;
};

struct LocalSearchResult {
    LocalSearchConfig config;
    std::int64_t best_mo = 0;
    std::string witness_graph6;
    /// max_k k(n-k)(n-k-1): the best split graph of the same order.
    std::int64_t split_baseline_mo = 0;
    double ratio_vs_split_baseline = 0.0;
    std::uint64_t evaluations = 0;
};

LocalSearchResult local_search_max_mo(const LocalSearchConfig& config, int threads = 0);

}  // namespace mostar
