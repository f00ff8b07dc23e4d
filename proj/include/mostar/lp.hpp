#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mostar/graph.hpp"

namespace mostar {

using Rational = boost::multiprecision::cpp_rational;

/// Absolute tolerance for all real-valued certificate checks. Exact
/// rational comparisons never use it.
inline constexpr double kCertificateTol = 1e-9;

/// The degree-class LP for graphs of order n and maximum degree Delta:
///
///   max  sum_{i<=j} (1 - i/n) y_{i,j}
///   s.t. sum_i x_i = 1
///        2 y_{i,i} + sum_{j<i} y_{j,i} + sum_{j>i} y_{i,j} - (i/n) x_i = 0   (each i)
///        x, y >= 0
///
/// over index set I = {0,...,Delta}. Coefficients are exact rationals.
/// Variables are ordered x_0..x_Delta, then y_{i,j} row-major over i <= j.
struct LpInstance {
    int n = 0;
    int delta = 0;
    int num_x = 0;
    int num_y = 0;
    std::vector<std::vector<Rational>> constraints;  // (delta+2) rows over all variables
    std::vector<Rational> rhs;
    std::vector<Rational> objective;

    int num_vars() const { return num_x + num_y; }
    int x_index(int i) const { return i; }
    int y_index(int i, int j) const {  // requires i <= j
        return num_x + i * (delta + 1) - i * (i - 1) / 2 + (j - i);
    }
};

struct PrimalSolution {
    int n = 0;
    int delta = 0;
    std::vector<Rational> x;  // size delta+1
    std::vector<Rational> y;  // packed i <= j, same order as LpInstance
    Rational objective;
};

/// Lemma-style dual certificate: p = f(Delta/n), q_0 = 1, q_i = (n/i) p.
/// p is irrational, so the certificate is real-valued and checked against
/// the dual constraints with kCertificateTol.
struct DualCertificate {
    int n = 0;
    int delta = 0;
    double p = 0.0;
    std::vector<double> q;  // size delta+1
};

struct DualViolation {
    int i = 0;
    int j = -1;  // -1 marks the p >= (i/n) q_i constraint family
    double lhs = 0.0;
    double rhs = 0.0;
};

struct DualFeasibility {
    bool feasible = true;
    std::vector<DualViolation> violations;
};

LpInstance build_primal(int n, int delta);

/// Degree-class densities of an actual graph: x_i = |{v : d(v)=i}| / n,
/// y_{i,j} = |{uv in E : {d(u),d(v)} = {i,j}}| / n^2. Exactly feasible for
/// build_primal(n, delta), with objective Mo*(g) / n^3.
PrimalSolution induced_primal(const Graph& g, int n, int delta);

/// Optimal value and point via exact rational two-phase simplex with
/// Bland's anti-cycling rule. Deterministic.
PrimalSolution solve_exact(const LpInstance& lp);

DualCertificate lemma1_certificate(int n, int delta);

DualFeasibility check_dual_feasible(const DualCertificate& cert, int n, int delta);

/// Verifies primal feasibility (exact), dual feasibility (tolerance), then
/// objective <= p + tolerance. Throws on infeasible inputs.
bool check_weak_duality(const PrimalSolution& ps, const DualCertificate& cert, int n, int delta);

/// CPLEX-LP text rendering of the instance for external cross-checks.
std::string write_lp_format(const LpInstance& lp);

}  // namespace mostar
