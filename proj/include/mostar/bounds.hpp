#pragma once

#include <cstdint>
#include <numbers>
#include <vector>

#include "mostar/graph.hpp"

namespace mostar {

/// 2/sqrt(3) - 1, the coefficient of the order-cubed upper bound on Mo*.
inline constexpr double kGlobalBoundConstant = 2.0 * std::numbers::inv_sqrt3 - 1.0;

/// f(x) = 2x^2 + x - 2x*sqrt(x^2 + x): the per-unit-n^3 bound on Mo* for
/// graphs with maximum degree x*n. Satisfies 2*sqrt(f(x)) + f(x)/x = 1.
double maxdeg_unit_bound(double x);

double bound_global(std::int64_t n);

/// maxdeg_unit_bound(Delta/n) * n^3. Requires 1 <= Delta <= n-1.
double bound_maxdeg(std::int64_t n, std::int64_t delta);

/// Degree-sequence bound nm - s. Vectors are 0-based; entry j corresponds
/// to position i = j + 1 of the ascending degree sequence d_1 <= ... <= d_n,
/// matching the 1-based envelope formulas
///   e_i^- = max(0, d_i - i + 1),   e_i^+ = min(d_i, n - i).
/// k (1-based) is the smallest index with
///   m <= sum_{i<=k} e_i^+ + sum_{i>k} e_i^-,
/// and s = sum_{i<k} e_i^+ d_i + sum_{i>=k} e_i^- d_i.
struct DegSeqBound {
    std::vector<int> d;
    std::vector<std::int64_t> e_minus;
    std::vector<std::int64_t> e_plus;
    int k = 1;
    std::int64_t s = 0;
    std::int64_t bound = 0;
};

DegSeqBound bound_degseq(const Graph& g);

/// Same bound evaluated straight from a degree sequence (sorted ascending
/// internally). The sequence is taken at face value; callers pass degrees
/// of an actual graph.
DegSeqBound bound_degseq_from_degrees(std::vector<int> degrees);

struct BoundReport {
    std::int64_t mo_star_actual = 0;
    double trivial = 0.0;       // n^3 / 2, strict upper bound
    double global = 0.0;        // (2/sqrt(3)-1) n^3
    double maxdeg = 0.0;        // f(Delta/n) n^3, 0 for edgeless graphs
    std::int64_t degseq = 0;    // nm - s
    double slack_trivial = 0.0;
    double slack_global = 0.0;
    double slack_maxdeg = 0.0;
    std::int64_t slack_degseq = 0;
};

BoundReport bound_report(const Graph& g);

}  // namespace mostar
