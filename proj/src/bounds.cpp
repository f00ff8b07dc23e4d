#include "mostar/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mostar/indices.hpp"

namespace mostar {

double maxdeg_unit_bound(double x) {
    return 2.0 * x * x + x - 2.0 * x * std::sqrt(x * x + x);
}

double bound_global(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("order must be positive");
    const double nd = static_cast<double>(n);
    return kGlobalBoundConstant * nd * nd * nd;
}

double bound_maxdeg(std::int64_t n, std::int64_t delta) {
    if (n < 1) throw std::invalid_argument("order must be positive");
    if (delta < 1 || delta > n - 1)
        throw std::invalid_argument("maximum degree must satisfy 1 <= Delta <= n-1");
    const double nd = static_cast<double>(n);
    return maxdeg_unit_bound(static_cast<double>(delta) / nd) * nd * nd * nd;
}

DegSeqBound bound_degseq_from_degrees(std::vector<int> degrees) {
    const int n = static_cast<int>(degrees.size());
    if (n < 1) throw std::invalid_argument("degree sequence must be non-empty");
    std::sort(degrees.begin(), degrees.end());

    DegSeqBound b;
    b.d = std::move(degrees);
    b.e_minus.resize(static_cast<std::size_t>(n));
    b.e_plus.resize(static_cast<std::size_t>(n));
    std::int64_t m2 = 0;
    for (int j = 0; j < n; ++j) {
        const std::int64_t i = j + 1;  // paper position
        const std::int64_t di = b.d[static_cast<std::size_t>(j)];
        b.e_minus[static_cast<std::size_t>(j)] = std::max<std::int64_t>(0, di - i + 1);
        b.e_plus[static_cast<std::size_t>(j)] = std::min<std::int64_t>(di, n - i);
        m2 += di;
    }
    const std::int64_t m = m2 / 2;

    // smallest k with m <= sum_{i<=k} e_i^+ + sum_{i>k} e_i^-
    std::int64_t minus_suffix = 0;
    for (std::int64_t e : b.e_minus) minus_suffix += e;
    std::int64_t plus_prefix = 0;
    b.k = n;
    for (int j = 0; j < n; ++j) {
        plus_prefix += b.e_plus[static_cast<std::size_t>(j)];
        minus_suffix -= b.e_minus[static_cast<std::size_t>(j)];
        if (m <= plus_prefix + minus_suffix) {
            b.k = j + 1;
            break;
        }
    }

    b.s = 0;
    for (int j = 0; j < n; ++j) {
        const std::int64_t e = (j + 1 < b.k) ? b.e_plus[static_cast<std::size_t>(j)]
                                             : b.e_minus[static_cast<std::size_t>(j)];
        b.s += e * b.d[static_cast<std::size_t>(j)];
    }
    b.bound = static_cast<std::int64_t>(n) * m - b.s;
    return b;
}

DegSeqBound bound_degseq(const Graph& g) { return bound_degseq_from_degrees(g.degrees()); }

BoundReport bound_report(const Graph& g) {
    const std::int64_t n = g.order();
    const double n3 = static_cast<double>(n) * n * n;

    BoundReport rep;
    rep.mo_star_actual = mostar_star(g);
    rep.trivial = n3 / 2.0;
    rep.global = bound_global(n);
    const int delta = g.max_degree();
    rep.maxdeg = delta == 0 ? 0.0 : bound_maxdeg(n, delta);
    rep.degseq = bound_degseq(g).bound;

    const double mo_star = static_cast<double>(rep.mo_star_actual);
    rep.slack_trivial = rep.trivial - mo_star;
    rep.slack_global = rep.global - mo_star;
    rep.slack_maxdeg = rep.maxdeg - mo_star;
    rep.slack_degseq = rep.degseq - rep.mo_star_actual;

    // All four are proven upper bounds; 2*Mo* < n^3 is strict in exact
    // integers, the real-valued bounds get a relative guard band.
    const double guard = 1e-6 * std::max(1.0, n3);
    if (2 * rep.mo_star_actual >= n * n * n)
        throw std::logic_error("Mo* reached the trivial bound: computation bug");
    if (mo_star > rep.global + guard || mo_star > rep.maxdeg + guard ||
        rep.mo_star_actual > rep.degseq)
        throw std::logic_error("Mo* exceeds a proven bound: computation bug");
    return rep;
}

}  // namespace mostar
