#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "mostar/bounds.hpp"
#include "mostar/constructions.hpp"
#include "mostar/indices.hpp"
#include "mostar/lp.hpp"
#include "oracles.hpp"

using mostar::Graph;
using mostar::Rational;

TEST_CASE("build_primal dimensions") {
    const mostar::LpInstance a = mostar::build_primal(2, 1);
    CHECK(a.num_x == 2);
    CHECK(a.num_y == 3);
    CHECK(a.constraints.size() == 3);

    const mostar::LpInstance b = mostar::build_primal(10, 3);
    CHECK(b.num_x == 4);
    CHECK(b.num_y == 10);
    CHECK(b.constraints.size() == 5);

    const mostar::LpInstance c = mostar::build_primal(6, 5);
    CHECK(c.num_x == 6);
    CHECK(c.num_y == 21);
    CHECK(c.constraints.size() == 7);

    CHECK_THROWS_AS(mostar::build_primal(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(mostar::build_primal(5, 5), std::invalid_argument);
}

TEST_CASE("build_primal coefficients") {
    const mostar::LpInstance lp = mostar::build_primal(2, 1);
    CHECK(lp.objective[lp.y_index(1, 1)] == Rational(1, 2));
    CHECK(lp.objective[lp.y_index(0, 1)] == Rational(1));
    CHECK(lp.objective[lp.x_index(0)] == Rational(0));
    // degree-1 balance row: 2 y_{1,1} + y_{0,1} - (1/2) x_1 = 0
    const auto& row = lp.constraints[2];
    CHECK(row[lp.y_index(1, 1)] == Rational(2));
    CHECK(row[lp.y_index(0, 1)] == Rational(1));
    CHECK(row[lp.x_index(1)] == Rational(-1, 2));
    CHECK(lp.rhs[2] == Rational(0));
}

TEST_CASE("induced_primal densities on reference graphs") {
    const mostar::PrimalSolution k2 =
        mostar::induced_primal(Graph::from_edge_list(2, {{0, 1}}), 2, 1);
    CHECK(k2.x == std::vector<Rational>{Rational(0), Rational(1)});
    CHECK(k2.y[mostar::build_primal(2, 1).y_index(1, 1) - 2] == Rational(1, 4));
    CHECK(k2.objective == Rational(1, 8));

    const Graph c4 = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    const mostar::PrimalSolution pc4 = mostar::induced_primal(c4, 4, 2);
    CHECK(pc4.x[2] == Rational(1));
    CHECK(pc4.objective == Rational(1, 8));

    const mostar::PrimalSolution s24 = mostar::induced_primal(mostar::split_graph({6, 2}), 6, 5);
    CHECK(s24.objective == Rational(33, 216));

    CHECK_THROWS_AS(mostar::induced_primal(c4, 5, 2), std::invalid_argument);
    CHECK_THROWS_AS(mostar::induced_primal(c4, 4, 1), std::invalid_argument);
}

TEST_CASE("induced objective equals Mo*/n^3 exactly on all small graphs") {
    for (int n = 2; n <= 5; ++n) {
        mostar::LabeledGraphStream stream(n);
        while (auto g = stream.next()) {
            const int delta = std::max(1, g->max_degree());
            const mostar::PrimalSolution ps = mostar::induced_primal(*g, n, delta);
            CHECK(ps.objective ==
                  Rational(mostar::mostar_star(*g), static_cast<std::int64_t>(n) * n * n));
        }
    }
}

TEST_CASE("exact simplex solves the smallest instance by hand") {
    const mostar::PrimalSolution opt = mostar::solve_exact(mostar::build_primal(2, 1));
    CHECK(opt.objective == Rational(1, 8));
    // attained by x_1 = 1, y_{1,1} = 1/4
    CHECK(opt.x[1] == Rational(1));

    // deterministic across repeated runs
    const mostar::PrimalSolution again = mostar::solve_exact(mostar::build_primal(2, 1));
    CHECK(again.objective == opt.objective);
    CHECK(again.x == opt.x);
    CHECK(again.y == opt.y);
}

TEST_CASE("simplex optimum sits between induced solutions and the certificate") {
    for (int n : {5, 10}) {
        for (int delta = 1; delta <= n - 1; ++delta) {
            const mostar::PrimalSolution opt = mostar::solve_exact(mostar::build_primal(n, delta));

            // a clique on delta+1 vertices padded with isolated vertices is feasible
            std::vector<std::pair<int, int>> edges;
            for (int u = 0; u <= delta; ++u)
                for (int v = u + 1; v <= delta; ++v) edges.emplace_back(u, v);
            const Graph padded = Graph::from_edge_list(n, edges);
            const mostar::PrimalSolution induced = mostar::induced_primal(padded, n, delta);
            CHECK(induced.objective <= opt.objective);

            const mostar::DualCertificate cert = mostar::lemma1_certificate(n, delta);
            CHECK(opt.objective.convert_to<double>() <= cert.p + mostar::kCertificateTol);
        }
    }
}

TEST_CASE("solve_exact at (10,9) stays under the certificate value") {
    const mostar::PrimalSolution opt = mostar::solve_exact(mostar::build_primal(10, 9));
    const mostar::DualCertificate cert = mostar::lemma1_certificate(10, 9);
    CHECK(cert.p == doctest::Approx(0.166195).epsilon(1e-5));
    CHECK(opt.objective.convert_to<double>() <= cert.p + mostar::kCertificateTol);

    const mostar::PrimalSolution s =
        mostar::induced_primal(mostar::split_graph({10, 3}), 10, 9);
    CHECK(s.objective <= opt.objective);
}

TEST_CASE("lemma certificate values") {
    const mostar::DualCertificate c21 = mostar::lemma1_certificate(2, 1);
    CHECK(c21.p == doctest::Approx(1.0 - std::sqrt(3.0) / 2.0).epsilon(1e-12));
    CHECK(c21.q[0] == 1.0);
    CHECK(c21.q[1] == doctest::Approx(2.0 * c21.p).epsilon(1e-12));
    CHECK(c21.q[1] == doctest::Approx(0.267949).epsilon(1e-5));

    CHECK(mostar::lemma1_certificate(10, 9).p == doctest::Approx(0.166195).epsilon(1e-5));
}

TEST_CASE("certificate identity and feasibility sweep") {
    for (int n = 2; n <= 30; ++n) {
        for (int delta = 1; delta <= n - 1; ++delta) {
            const mostar::DualCertificate cert = mostar::lemma1_certificate(n, delta);
            const double identity =
                2.0 * std::sqrt(cert.p) + static_cast<double>(n) / delta * cert.p - 1.0;
            CHECK(std::abs(identity) < 1e-9);
            CHECK(mostar::check_dual_feasible(cert, n, delta).feasible);
        }
    }
}

TEST_CASE("check_dual_feasible flags the zero certificate") {
    mostar::DualCertificate zero;
    zero.n = 2;
    zero.delta = 1;
    zero.p = 0.0;
    zero.q = {0.0, 0.0};
    const mostar::DualFeasibility df = mostar::check_dual_feasible(zero, 2, 1);
    CHECK(!df.feasible);
    REQUIRE(!df.violations.empty());
    CHECK(df.violations[0].i == 0);
    CHECK(df.violations[0].j == 0);  // q_0 + q_0 >= 1 fails

    mostar::DualCertificate short_q = zero;
    short_q.q = {0.0};
    CHECK_THROWS_AS(mostar::check_dual_feasible(short_q, 2, 1), std::invalid_argument);
}

TEST_CASE("weak duality") {
    const mostar::DualCertificate cert = mostar::lemma1_certificate(2, 1);
    const mostar::PrimalSolution induced =
        mostar::induced_primal(Graph::from_edge_list(2, {{0, 1}}), 2, 1);
    CHECK(mostar::check_weak_duality(induced, cert, 2, 1));

    const mostar::PrimalSolution opt = mostar::solve_exact(mostar::build_primal(2, 1));
    CHECK(mostar::check_weak_duality(opt, cert, 2, 1));

    mostar::PrimalSolution corrupt = induced;
    corrupt.x[0] = Rational(-1);
    CHECK_THROWS_AS(mostar::check_weak_duality(corrupt, cert, 2, 1), std::invalid_argument);

    mostar::PrimalSolution infeasible = induced;
    infeasible.x[0] = Rational(1, 2);  // mass constraint now violated
    CHECK_THROWS_AS(mostar::check_weak_duality(infeasible, cert, 2, 1), std::invalid_argument);

    CHECK_THROWS_AS(mostar::check_weak_duality(induced, cert, 4, 2), std::invalid_argument);
}

TEST_CASE("sandwich on all graphs of order 4") {
    std::map<int, mostar::PrimalSolution> opt_by_delta;
    for (int delta = 1; delta <= 3; ++delta)
        opt_by_delta.emplace(delta, mostar::solve_exact(mostar::build_primal(4, delta)));

    mostar::LabeledGraphStream stream(4);
    while (auto g = stream.next()) {
        if (g->max_degree() == 0) continue;
        const int delta = g->max_degree();
        const mostar::PrimalSolution induced = mostar::induced_primal(*g, 4, delta);
        CHECK(induced.objective == Rational(mostar::mostar_star(*g), 64));
        CHECK(induced.objective <= opt_by_delta.at(delta).objective);
        const mostar::DualCertificate cert = mostar::lemma1_certificate(4, delta);
        CHECK(opt_by_delta.at(delta).objective.convert_to<double>() <=
              cert.p + mostar::kCertificateTol);
    }
}

TEST_CASE("sandwich at orders 6 and 7 through the per-Delta maxima") {
    for (int n : {6, 7}) {
        const std::int64_t n3 = static_cast<std::int64_t>(n) * n * n;
        std::vector<std::int64_t> best(static_cast<std::size_t>(n), -1);
        std::vector<std::uint64_t> witness_mask(static_cast<std::size_t>(n), 0);
        std::uint64_t mask = 0;
        mostar::LabeledGraphStream stream(n);
        while (auto g = stream.next()) {
            const int d = g->max_degree();
            if (d >= 1) {
                const std::int64_t mo_star = mostar::mostar_star(*g);
                if (mo_star > best[d]) {
                    best[d] = mo_star;
                    witness_mask[d] = mask;
                }
            }
            ++mask;
        }
        for (int delta = 1; delta <= n - 1; ++delta) {
            std::int64_t overall = -1;
            std::uint64_t overall_mask = 0;
            for (int d = 1; d <= delta; ++d)
                if (best[d] > overall) {
                    overall = best[d];
                    overall_mask = witness_mask[d];
                }
            const Graph extremal = mostar::graph_from_mask(n, overall_mask);
            const mostar::PrimalSolution induced = mostar::induced_primal(extremal, n, delta);
            CHECK(induced.objective == Rational(overall, n3));

            const mostar::PrimalSolution opt = mostar::solve_exact(mostar::build_primal(n, delta));
            CHECK(induced.objective <= opt.objective);
            CHECK(opt.objective.convert_to<double>() <=
                  mostar::lemma1_certificate(n, delta).p + mostar::kCertificateTol);
        }
    }
}

TEST_CASE("LP text export") {
    const std::string text = mostar::write_lp_format(mostar::build_primal(4, 2));
    CHECK(text.find("Maximize") != std::string::npos);
    CHECK(text.find("mass:") != std::string::npos);
    CHECK(text.find("deg_0: 2 y_0_0") != std::string::npos);
    CHECK(text.find("x_2") != std::string::npos);
    CHECK(text.find("End") != std::string::npos);
}
