#include "mostar/lp.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "mostar/bounds.hpp"

namespace mostar {

namespace {

void require_range(int n, int delta) {
    if (n < 2 || delta < 1 || delta > n - 1)
        throw std::invalid_argument("require 1 <= Delta <= n-1 with n >= 2");
}

// Dense two-phase tableau simplex over exact rationals, Bland's rule for
// both the entering and the leaving choice. maximize c.z s.t. A z = b,
// z >= 0, with b >= 0. Instances here are small; clarity over speed.
class RationalSimplex {
public:
    RationalSimplex(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                    const std::vector<Rational>& c)
        : rows_(static_cast<int>(a.size())), cols_(static_cast<int>(c.size())), cost_(c) {
        tableau_.resize(static_cast<std::size_t>(rows_));
        basis_.resize(static_cast<std::size_t>(rows_));
        for (int r = 0; r < rows_; ++r) {
            if (b[static_cast<std::size_t>(r)] < 0)
                throw std::invalid_argument("simplex requires b >= 0");
            auto& row = tableau_[static_cast<std::size_t>(r)];
            row.assign(static_cast<std::size_t>(cols_ + rows_ + 1), Rational(0));
            for (int j = 0; j < cols_; ++j) row[static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
            row[static_cast<std::size_t>(cols_ + r)] = 1;  // artificial
            row.back() = b[static_cast<std::size_t>(r)];
            basis_[static_cast<std::size_t>(r)] = cols_ + r;
        }
    }

    // Returns the optimal value; solution() afterwards gives the point.
    Rational solve() {
        run_phase_one();
        run_phase_two();
        Rational value = -objective_.back();
        return value;
    }

    std::vector<Rational> solution() const {
        std::vector<Rational> z(static_cast<std::size_t>(cols_), Rational(0));
        for (int r = 0; r < rows_; ++r)
            if (basis_[static_cast<std::size_t>(r)] < cols_)
                z[static_cast<std::size_t>(basis_[static_cast<std::size_t>(r)])] =
                    tableau_[static_cast<std::size_t>(r)].back();
        return z;
    }

private:
    void pivot(int row, int col) {
        auto& prow = tableau_[static_cast<std::size_t>(row)];
        const Rational inv = Rational(1) / prow[static_cast<std::size_t>(col)];
        for (auto& v : prow) v *= inv;
        for (int r = 0; r < rows_; ++r) {
            if (r == row) continue;
            eliminate(tableau_[static_cast<std::size_t>(r)], prow, col);
        }
        eliminate(objective_, prow, col);
        basis_[static_cast<std::size_t>(row)] = col;
    }

    static void eliminate(std::vector<Rational>& target, const std::vector<Rational>& prow,
                          int col) {
        const Rational factor = target[static_cast<std::size_t>(col)];
        if (factor == 0) return;
        for (std::size_t j = 0; j < target.size(); ++j) target[j] -= factor * prow[j];
    }

    // Bland: lowest-index entering column with positive reduced cost;
    // lowest basic-variable index among the minimum-ratio rows.
    bool bland_step(int allowed_cols) {
        int enter = -1;
        for (int j = 0; j < allowed_cols; ++j) {
            if (objective_[static_cast<std::size_t>(j)] > 0) {
                enter = j;
                break;
            }
        }
        if (enter == -1) return false;

        int leave = -1;
        Rational best_ratio;
        for (int r = 0; r < rows_; ++r) {
            const Rational& coef = tableau_[static_cast<std::size_t>(r)][static_cast<std::size_t>(enter)];
            if (coef <= 0) continue;
            const Rational ratio = tableau_[static_cast<std::size_t>(r)].back() / coef;
            if (leave == -1 || ratio < best_ratio ||
                (ratio == best_ratio &&
                 basis_[static_cast<std::size_t>(r)] < basis_[static_cast<std::size_t>(leave)])) {
                leave = r;
                best_ratio = ratio;
            }
        }
        if (leave == -1) throw std::runtime_error("simplex: unbounded objective");
        pivot(leave, enter);
        return true;
    }

    void run_phase_one() {
        // maximize -sum(artificials), written in the nonbasic originals
        objective_.assign(static_cast<std::size_t>(cols_ + rows_ + 1), Rational(0));
        for (int r = 0; r < rows_; ++r)
            for (int j = 0; j <= cols_; ++j) {
                const std::size_t col = j == cols_ ? objective_.size() - 1
                                                   : static_cast<std::size_t>(j);
                const std::size_t src = j == cols_ ? tableau_[static_cast<std::size_t>(r)].size() - 1
                                                   : static_cast<std::size_t>(j);
                objective_[col] += tableau_[static_cast<std::size_t>(r)][src];
            }
        while (bland_step(cols_)) {
        }
        if (objective_.back() != 0) throw std::runtime_error("simplex: infeasible system");
        drive_out_artificials();
    }

    void drive_out_artificials() {
        for (int r = 0; r < rows_; ++r) {
            if (basis_[static_cast<std::size_t>(r)] < cols_) continue;
            int col = -1;
            for (int j = 0; j < cols_; ++j) {
                if (tableau_[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] != 0) {
                    col = j;
                    break;
                }
            }
            if (col == -1) {
                // redundant constraint: degenerate artificial stays basic at 0
                continue;
            }
            pivot(r, col);
        }
    }

    void run_phase_two() {
        objective_.assign(static_cast<std::size_t>(cols_ + rows_ + 1), Rational(0));
        for (int j = 0; j < cols_; ++j) objective_[static_cast<std::size_t>(j)] = cost_[static_cast<std::size_t>(j)];
        for (int r = 0; r < rows_; ++r) {
            const int b = basis_[static_cast<std::size_t>(r)];
            if (b >= cols_) continue;
            eliminate_basic(r, b);
        }
        while (bland_step(cols_)) {
        }
    }

    void eliminate_basic(int row, int col) {
        const Rational factor = objective_[static_cast<std::size_t>(col)];
        if (factor == 0) return;
        const auto& prow = tableau_[static_cast<std::size_t>(row)];
        for (std::size_t j = 0; j < objective_.size(); ++j) objective_[j] -= factor * prow[j];
    }

    int rows_;
    int cols_;
    std::vector<Rational> cost_;
    std::vector<std::vector<Rational>> tableau_;
    std::vector<Rational> objective_;
    std::vector<int> basis_;
};

}  // namespace

LpInstance build_primal(int n, int delta) {
    require_range(n, delta);
    LpInstance lp;
    lp.n = n;
    lp.delta = delta;
    lp.num_x = delta + 1;
    lp.num_y = (delta + 1) * (delta + 2) / 2;

    const int vars = lp.num_vars();
    lp.objective.assign(static_cast<std::size_t>(vars), Rational(0));
    for (int i = 0; i <= delta; ++i)
        for (int j = i; j <= delta; ++j)
            lp.objective[static_cast<std::size_t>(lp.y_index(i, j))] = Rational(n - i, n);

    lp.constraints.assign(static_cast<std::size_t>(delta + 2),
                          std::vector<Rational>(static_cast<std::size_t>(vars), Rational(0)));
    lp.rhs.assign(static_cast<std::size_t>(delta + 2), Rational(0));

    for (int i = 0; i <= delta; ++i) lp.constraints[0][static_cast<std::size_t>(lp.x_index(i))] = 1;
    lp.rhs[0] = 1;

    for (int i = 0; i <= delta; ++i) {
        auto& row = lp.constraints[static_cast<std::size_t>(1 + i)];
        row[static_cast<std::size_t>(lp.y_index(i, i))] = 2;
        for (int j = 0; j < i; ++j) row[static_cast<std::size_t>(lp.y_index(j, i))] += 1;
        for (int j = i + 1; j <= delta; ++j) row[static_cast<std::size_t>(lp.y_index(i, j))] += 1;
        row[static_cast<std::size_t>(lp.x_index(i))] = Rational(-i, n);
    }
    return lp;
}

PrimalSolution induced_primal(const Graph& g, int n, int delta) {
    require_range(n, delta);
    if (g.order() != n)
        throw std::invalid_argument("graph order does not match the LP instance");
    if (g.max_degree() > delta)
        throw std::invalid_argument("graph maximum degree exceeds the LP's Delta");

    LpInstance lp = build_primal(n, delta);
    PrimalSolution ps;
    ps.n = n;
    ps.delta = delta;
    ps.x.assign(static_cast<std::size_t>(delta + 1), Rational(0));
    ps.y.assign(static_cast<std::size_t>(lp.num_y), Rational(0));

    for (int v = 0; v < n; ++v) ps.x[static_cast<std::size_t>(g.degree(v))] += Rational(1, n);
    const Rational per_edge(1, static_cast<std::int64_t>(n) * n);
    g.for_each_edge([&](int u, int v) {
        const int i = std::min(g.degree(u), g.degree(v));
        const int j = std::max(g.degree(u), g.degree(v));
        ps.y[static_cast<std::size_t>(lp.y_index(i, j) - lp.num_x)] += per_edge;
    });

    ps.objective = 0;
    for (int i = 0; i <= delta; ++i)
        for (int j = i; j <= delta; ++j)
            ps.objective += Rational(n - i, n) *
                            ps.y[static_cast<std::size_t>(lp.y_index(i, j) - lp.num_x)];
    return ps;
}

PrimalSolution solve_exact(const LpInstance& lp) {
    RationalSimplex simplex(lp.constraints, lp.rhs, lp.objective);
    PrimalSolution ps;
    ps.n = lp.n;
    ps.delta = lp.delta;
    ps.objective = simplex.solve();
    const std::vector<Rational> z = simplex.solution();
    ps.x.assign(z.begin(), z.begin() + lp.num_x);
    ps.y.assign(z.begin() + lp.num_x, z.end());

    Rational check = 0;
    for (int j = 0; j < lp.num_vars(); ++j)
        check += lp.objective[static_cast<std::size_t>(j)] * z[static_cast<std::size_t>(j)];
    if (check != ps.objective)
        throw std::logic_error("simplex objective/solution mismatch");
    return ps;
}

DualCertificate lemma1_certificate(int n, int delta) {
    require_range(n, delta);
    DualCertificate cert;
    cert.n = n;
    cert.delta = delta;
    cert.p = maxdeg_unit_bound(static_cast<double>(delta) / static_cast<double>(n));
    cert.q.assign(static_cast<std::size_t>(delta + 1), 0.0);
    cert.q[0] = 1.0;
    for (int i = 1; i <= delta; ++i)
        cert.q[static_cast<std::size_t>(i)] = static_cast<double>(n) * cert.p / static_cast<double>(i);
    return cert;
}

DualFeasibility check_dual_feasible(const DualCertificate& cert, int n, int delta) {
    require_range(n, delta);
    if (static_cast<int>(cert.q.size()) != delta + 1)
        throw std::invalid_argument("certificate q has wrong length");
    DualFeasibility result;
    for (int i = 0; i <= delta; ++i) {
        for (int j = i; j <= delta; ++j) {
            const double lhs = cert.q[static_cast<std::size_t>(i)] + cert.q[static_cast<std::size_t>(j)];
            const double rhs = 1.0 - static_cast<double>(i) / static_cast<double>(n);
            if (lhs < rhs - kCertificateTol)
                result.violations.push_back({i, j, lhs, rhs});
        }
        const double rhs = static_cast<double>(i) / static_cast<double>(n) *
                           cert.q[static_cast<std::size_t>(i)];
        if (cert.p < rhs - kCertificateTol) result.violations.push_back({i, -1, cert.p, rhs});
    }
    result.feasible = result.violations.empty();
    return result;
}

bool check_weak_duality(const PrimalSolution& ps, const DualCertificate& cert, int n, int delta) {
    require_range(n, delta);
    if (ps.n != n || ps.delta != delta || cert.n != n || cert.delta != delta)
        throw std::invalid_argument("solution/certificate built for a different (n, Delta)");

    const LpInstance lp = build_primal(n, delta);
    std::vector<Rational> z;
    z.reserve(static_cast<std::size_t>(lp.num_vars()));
    z.insert(z.end(), ps.x.begin(), ps.x.end());
    z.insert(z.end(), ps.y.begin(), ps.y.end());
    if (static_cast<int>(z.size()) != lp.num_vars())
        throw std::invalid_argument("primal solution has wrong dimensions");
    for (const Rational& v : z)
        if (v < 0) throw std::invalid_argument("primal solution has a negative entry");
    for (std::size_t r = 0; r < lp.constraints.size(); ++r) {
        Rational residual = -lp.rhs[r];
        for (int j = 0; j < lp.num_vars(); ++j)
            residual += lp.constraints[r][static_cast<std::size_t>(j)] * z[static_cast<std::size_t>(j)];
        if (residual != 0)
            throw std::invalid_argument("primal solution infeasible: constraint " +
                                        std::to_string(r) + " residual " +
                                        residual.str());
    }
    const DualFeasibility df = check_dual_feasible(cert, n, delta);
    if (!df.feasible)
        throw std::invalid_argument("dual certificate infeasible: " +
                                    std::to_string(df.violations.size()) + " violated constraints");

    return ps.objective.convert_to<double>() <= cert.p + kCertificateTol;
}

namespace {

std::string decimal(const Rational& r) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", r.convert_to<double>());
    return buf;
}

}  // namespace

std::string write_lp_format(const LpInstance& lp) {
    std::string out = "\\ degree-class LP: n=" + std::to_string(lp.n) +
                      ", Delta=" + std::to_string(lp.delta) + "\n";
    out += "Maximize\n obj:";
    for (int i = 0; i <= lp.delta; ++i)
        for (int j = i; j <= lp.delta; ++j) {
            out += (i == 0 && j == 0) ? " " : " + ";
            out += decimal(Rational(lp.n - i, lp.n)) + " y_" + std::to_string(i) + "_" +
                   std::to_string(j);
        }
    out += "\nSubject To\n mass:";
    for (int i = 0; i <= lp.delta; ++i)
        out += std::string(i == 0 ? " " : " + ") + "x_" + std::to_string(i);
    out += " = 1\n";
    for (int i = 0; i <= lp.delta; ++i) {
        out += " deg_" + std::to_string(i) + ": 2 y_" + std::to_string(i) + "_" + std::to_string(i);
        for (int j = 0; j < i; ++j)
            out += " + y_" + std::to_string(j) + "_" + std::to_string(i);
        for (int j = i + 1; j <= lp.delta; ++j)
            out += " + y_" + std::to_string(i) + "_" + std::to_string(j);
        if (i > 0)
            out += " - " + decimal(Rational(i, lp.n)) + " x_" + std::to_string(i);
        out += " = 0\n";
    }
    out += "End\n";
    return out;
}

}  // namespace mostar
