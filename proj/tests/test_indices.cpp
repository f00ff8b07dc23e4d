#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "mostar/constructions.hpp"
#include "mostar/indices.hpp"
#include "oracles.hpp"

using mostar::Graph;

namespace {

Graph p3() { return Graph::from_edge_list(3, {{0, 1}, {1, 2}}); }
Graph p4() { return Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}}); }
Graph c4() { return Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }
Graph k4() {
    return Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}
Graph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

std::set<std::pair<int, int>> as_set(const std::vector<std::pair<int, int>>& v) {
    return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("edge_unbalance on reference edges") {
    const mostar::EdgeUnbalance e1 = mostar::edge_unbalance(p3(), 0, 1);
    CHECK(e1.n_uv == 1);
    CHECK(e1.n_vu == 2);
    CHECK(e1.abs_diff == 1);
    CHECK(e1.mostar_star_term == 2);

    const mostar::EdgeUnbalance e2 = mostar::edge_unbalance(k4(), 1, 2);
    CHECK(e2.n_uv == 1);
    CHECK(e2.n_vu == 1);
    CHECK(e2.abs_diff == 0);

    // S_{2,4}: vertex 0 in the clique, vertex 2 independent
    const Graph s24 = mostar::split_graph({6, 2});
    const mostar::EdgeUnbalance e3 = mostar::edge_unbalance(s24, 0, 2);
    CHECK(e3.n_uv == 4);
    CHECK(e3.n_vu == 1);
    CHECK(e3.abs_diff == 3);

    CHECK_THROWS_AS(mostar::edge_unbalance(p3(), 0, 2), std::invalid_argument);
}

TEST_CASE("mostar index on reference graphs") {
    for (int n = 1; n <= 7; ++n) CHECK(mostar::mostar_index(complete(n)) == 0);
    CHECK(mostar::mostar_index(p3()) == 2);
    CHECK(mostar::mostar_index(mostar::split_graph({6, 2})) == 24);
}

TEST_CASE("mostar index matches the Floyd-Warshall oracle") {
    for (int n = 1; n <= 5; ++n) {
        mostar::LabeledGraphStream stream(n);
        while (auto g = stream.next()) {
            CHECK(mostar::mostar_index(*g) == oracles::mostar_oracle(*g));
            const mostar::DistanceMatrix dm = mostar::all_pairs_distances(*g);
            CHECK(mostar::mostar_index(*g, dm) == oracles::mostar_oracle(*g));
        }
    }
    for (int n : {10, 20}) {
        const Graph g = oracles::random_graph(n, 31 * n, 0.3);
        CHECK(mostar::mostar_index(g) == oracles::mostar_oracle(g));
    }
}

TEST_CASE("mostar_star on reference graphs and against the oracle") {
    CHECK(mostar::mostar_star(Graph::from_edge_list(2, {{0, 1}})) == 1);
    CHECK(mostar::mostar_star(c4()) == 8);
    CHECK(mostar::mostar_star(mostar::split_graph({6, 2})) == 33);
    for (int n = 1; n <= 5; ++n) {
        mostar::LabeledGraphStream stream(n);
        while (auto g = stream.next())
            CHECK(mostar::mostar_star(*g) == oracles::mostar_star_oracle(*g));
    }
}

TEST_CASE("forward-edge route equals mostar_star") {
    CHECK(mostar::mostar_star_via_forward_edges(p3()) == 4);
    CHECK(mostar::mostar_star_via_forward_edges(k4()) == 6);
    for (int n = 1; n <= 6; ++n) {
        mostar::LabeledGraphStream stream(n);
        while (auto g = stream.next())
            CHECK(mostar::mostar_star_via_forward_edges(*g) == mostar::mostar_star(*g));
    }
}

TEST_CASE("transmissions") {
    CHECK(mostar::transmissions(p3()).sigma == std::vector<std::int64_t>{3, 2, 3});
    CHECK(mostar::transmissions(k4()).sigma == std::vector<std::int64_t>{3, 3, 3, 3});
    CHECK(mostar::transmissions(c4()).sigma == std::vector<std::int64_t>{4, 4, 4, 4});
    CHECK(!mostar::transmissions(c4()).component_restricted);

    const mostar::TransmissionVector tv =
        mostar::transmissions(Graph::from_edge_list(3, {{0, 1}}));
    CHECK(tv.sigma == std::vector<std::int64_t>{1, 1, 0});
    CHECK(tv.component_restricted);
}

TEST_CASE("transmission bounds on connected graphs") {
    mostar::LabeledGraphStream stream(5);
    while (auto g = stream.next()) {
        if (!mostar::is_connected(*g)) continue;
        const auto sigma = mostar::transmissions(*g).sigma;
        for (int v = 0; v < 5; ++v) {
            CHECK(sigma[v] >= g->degree(v));
            CHECK((sigma[v] == 4) == (g->degree(v) == 4));
        }
    }
}

TEST_CASE("irregularity") {
    CHECK(mostar::irregularity(c4()) == 0);
    CHECK(mostar::irregularity(k4()) == 0);
    CHECK(mostar::irregularity(p3()) == 2);
    CHECK(mostar::irregularity(mostar::split_graph({6, 2})) == 24);
    for (int n = 1; n <= 5; ++n) {
        mostar::LabeledGraphStream stream(n);
        while (auto g = stream.next())
            CHECK(mostar::irregularity(*g) == oracles::irregularity_oracle(*g));
    }
}

TEST_CASE("partial orientation on reference graphs") {
    const mostar::PartialOrientation po3 = mostar::partial_orientation(p3());
    CHECK(as_set(po3.oriented) == std::set<std::pair<int, int>>{{0, 1}, {2, 1}});
    CHECK(po3.unoriented.empty());

    const mostar::PartialOrientation poc = mostar::partial_orientation(c4());
    CHECK(poc.oriented.empty());
    CHECK(poc.unoriented.size() == 4);

    const mostar::PartialOrientation po4 = mostar::partial_orientation(p4());
    CHECK(as_set(po4.oriented) == std::set<std::pair<int, int>>{{0, 1}, {3, 2}});
    CHECK(as_set(po4.unoriented) == std::set<std::pair<int, int>>{{1, 2}});
}

TEST_CASE("check_acyclic accepts real orientations and flags forged cycles") {
    CHECK(mostar::check_acyclic(mostar::partial_orientation(p4()), p4()).acyclic);
    CHECK(mostar::check_acyclic(mostar::partial_orientation(c4()), c4()).acyclic);

    // a hand-forged directed 4-cycle is not achievable by any graph
    mostar::PartialOrientation forged;
    forged.oriented = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    const mostar::AcyclicityResult r = mostar::check_acyclic(forged, c4());
    CHECK(!r.acyclic);
    REQUIRE(r.witness_cycle.size() >= 3);
    CHECK(r.witness_cycle.front() == r.witness_cycle.back());

    // mismatched orientation data is rejected
    mostar::PartialOrientation bogus;
    bogus.oriented = {{0, 2}};  // not an edge of C4
    bogus.unoriented = {{0, 1}, {1, 2}, {2, 3}};
    CHECK_THROWS_AS(mostar::check_acyclic(bogus, c4()), std::invalid_argument);

    mostar::PartialOrientation incomplete;
    incomplete.unoriented = {{0, 1}};
    CHECK_THROWS_AS(mostar::check_acyclic(incomplete, c4()), std::invalid_argument);

    mostar::PartialOrientation doubled;
    doubled.oriented = {{0, 1}, {1, 0}};
    doubled.unoriented = {{1, 2}, {2, 3}};
    CHECK_THROWS_AS(mostar::check_acyclic(doubled, c4()), std::invalid_argument);
}

TEST_CASE("orientation is acyclic on every connected graph up to order 5") {
    for (int n = 2; n <= 5; ++n) {
        mostar::LabeledGraphStream stream(n);
        while (auto g = stream.next()) {
            if (!mostar::is_connected(*g)) continue;
            const mostar::PartialOrientation po = mostar::partial_orientation(*g);
            CHECK(mostar::check_acyclic(po, *g).acyclic);
            const auto sigma = mostar::transmissions(*g).sigma;
            for (const auto& [tail, head] : po.oriented) CHECK(sigma[head] < sigma[tail]);
        }
    }
}

TEST_CASE("zero degree pairs") {
    CHECK(mostar::zero_degree_pairs(mostar::partial_orientation(p3()), p3()).empty());
    CHECK(mostar::zero_degree_pairs(mostar::partial_orientation(k4()), k4()).empty());
    const auto pairs = mostar::zero_degree_pairs(mostar::partial_orientation(p4()), p4());
    CHECK(as_set(pairs) == std::set<std::pair<int, int>>{{1, 3}, {2, 0}});
}

TEST_CASE("full_report") {
    const mostar::IndexReport k1 = mostar::full_report(Graph::from_edge_list(1, {}));
    CHECK(k1.mo == 0);
    CHECK(k1.mo_star == 0);
    CHECK(k1.irr == 0);
    CHECK(k1.diameter == 0);
    CHECK(k1.connected);

    const mostar::IndexReport r3 = mostar::full_report(p3());
    CHECK(r3.mo == 2);
    CHECK(r3.mo_star == 4);
    CHECK(r3.irr == 2);
    CHECK(r3.diameter == 2);

    const mostar::IndexReport s = mostar::full_report(mostar::split_graph({6, 2}));
    CHECK(s.mo == 24);
    CHECK(s.mo_star == 33);
    CHECK(s.irr == 24);
    CHECK(s.diameter == 2);
    CHECK(s.delta_min == 2);
    CHECK(s.delta_max == 5);

    const mostar::IndexReport d = mostar::full_report(Graph::from_edge_list(2, {}));
    CHECK(!d.connected);
    CHECK(!d.diameter.has_value());
}

TEST_CASE("sigma identity, Mo <= Mo*, and the diameter-2 equality hold exhaustively") {
    for (int n = 1; n <= 5; ++n) {
        mostar::LabeledGraphStream stream(n);
        while (auto g = stream.next()) {
            const mostar::IndexReport rep = mostar::full_report(*g);
            CHECK(rep.mo <= rep.mo_star);
            if (rep.connected && rep.diameter <= 2) CHECK(rep.mo == rep.irr);

            const auto sigma = mostar::transmissions(*g).sigma;
            g->for_each_edge([&](int u, int v) {
                const mostar::EdgeUnbalance e = mostar::edge_unbalance(*g, u, v);
                CHECK(e.n_uv - e.n_vu == sigma[v] - sigma[u]);
                CHECK(e.n_uv >= 1);
                CHECK(e.n_vu >= 1);
                CHECK(e.n_uv + e.n_vu <= n);
                if (rep.connected) CHECK(e.abs_diff <= e.mostar_star_term - 1);
            });
        }
    }
}
