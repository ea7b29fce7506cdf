#include <doctest.h>

#include <algorithm>

#include "pp/errors.hpp"
#include "pp/graph.hpp"
#include "helpers.hpp"

using namespace pp;
using namespace pp::test;

TEST_CASE("coupling graph construction validates input") {
    CHECK_THROWS_AS(CouplingGraph(2, {{1, 1}}), InputError);       // self loop
    CHECK_THROWS_AS(CouplingGraph(2, {{1, 3}}), InputError);       // out of range
    CHECK_THROWS_AS(CouplingGraph(2, {{0, 1}}), InputError);       // out of range
    CHECK_THROWS_AS(CouplingGraph(3, {{1, 2}, {2, 1}}), InputError); // duplicate
    CHECK_THROWS_AS(CouplingGraph(-1, {}), InputError);
    CHECK_THROWS_AS(CouplingGraph(0, {}), InputError);
    CHECK_NOTHROW(CouplingGraph(1, {}));
}

TEST_CASE("coupling graph normalizes edges") {
    CouplingGraph g(3, {{3, 1}, {2, 1}});
    CHECK(g.n_edges() == 2);
    CHECK(g.edges() == std::vector<std::pair<VertexId, VertexId>>{{1, 2}, {1, 3}});
    CHECK(g.neighbors(1) == std::vector<VertexId>{2, 3});
    CHECK(g.neighbors(2) == std::vector<VertexId>{1});
}

TEST_CASE("degree") {
    CouplingGraph k3 = complete_graph(3);
    CHECK(degree(k3, 1) == 2);
    CHECK(degree(k3, 2) == 2);
    CouplingGraph iso(1, {});
    CHECK(degree(iso, 1) == 0);
    CouplingGraph p3 = path_graph(3);
    CHECK(degree(p3, 2) == 2);
    CHECK(degree(p3, 1) == 1);
    CHECK_THROWS_AS(degree(p3, 4), InputError);
    CHECK(k3.max_degree() == 2);
    CHECK(p3.max_degree() == 2);
}

TEST_CASE("sources and sinks") {
    {
        CouplingDag d(1, {});
        auto [src, snk] = sources_sinks(d);
        CHECK(src == std::vector<VertexId>{1});
        CHECK(snk == std::vector<VertexId>{1});
    }
    {
        CouplingDag d(3, {{1, 2}, {2, 3}});
        auto [src, snk] = sources_sinks(d);
        CHECK(src == std::vector<VertexId>{1});
        CHECK(snk == std::vector<VertexId>{3});
    }
    {
        CouplingDag d(3, {{1, 3}, {2, 3}});
        auto [src, snk] = sources_sinks(d);
        CHECK(src == std::vector<VertexId>{1, 2});
        CHECK(snk == std::vector<VertexId>{3});
    }
    CouplingDag cyc(2, {{1, 2}, {2, 1}});
    CHECK_THROWS_AS(sources_sinks(cyc), ContractError);
}

TEST_CASE("is_acyclic") {
    CHECK(is_acyclic(CouplingDag(3, {{1, 2}, {2, 3}})));
    CHECK_FALSE(is_acyclic(CouplingDag(2, {{1, 2}, {2, 1}})));
    CHECK(is_acyclic(CouplingDag(4, {})));
}

TEST_CASE("topological order respects arcs") {
    CouplingDag d(4, {{2, 1}, {1, 3}, {2, 4}, {4, 3}});
    auto order = topological_order(d);
    REQUIRE(order.size() == 4);
    auto pos = [&](VertexId v) {
        return std::find(order.begin(), order.end(), v) - order.begin();
    };
    for (auto [a, b] : d.arcs()) CHECK(pos(a) < pos(b));
    CHECK_THROWS_AS(topological_order(CouplingDag(2, {{1, 2}, {2, 1}})), ContractError);
}

TEST_CASE("compute_levels examples") {
    {
        LevelAssignment l = compute_levels(CouplingDag(4, {{1, 2}, {2, 3}, {3, 4}}));
        CHECK(l.n_levels == 4);
        CHECK(l.level.at(4) == 4);
    }
    {
        LevelAssignment l = compute_levels(CouplingDag(4, {{1, 2}, {1, 3}, {1, 4}}));
        CHECK(l.n_levels == 2);
        CHECK(l.level.at(1) == 1);
        CHECK(l.level.at(2) == 2);
    }
    {
        LevelAssignment l = compute_levels(CouplingDag(4, {{1, 2}, {3, 2}, {3, 4}, {4, 2}}));
        CHECK(l.n_levels == 3);
        CHECK(l.level.at(1) == 1);
        CHECK(l.level.at(3) == 1);
        CHECK(l.level.at(4) == 2);
        CHECK(l.level.at(2) == 3);
    }
}

TEST_CASE("compute_levels matches exhaustive longest path on random dags") {
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(trial % 7);
        CouplingGraph g = random_graph(n, 400, 1000 + static_cast<std::uint64_t>(trial));
        PriorityAssignment p = random_priority(n, 77 + static_cast<std::uint64_t>(trial));
        CouplingDag d = orient_edges(g, p);
        LevelAssignment l = compute_levels(d);
        CHECK(l.n_levels == brute_force_longest_path(d));
        for (auto [a, b] : d.arcs()) CHECK(l.level.at(a) < l.level.at(b));
        for (VertexId v = 1; v <= n; ++v) {
            CHECK(l.level.at(v) >= 1);
            CHECK(l.level.at(v) <= l.n_levels);
        }
    }
}

TEST_CASE("longest_weighted_path examples") {
    {
        std::map<VertexId, Duration> w{{1, Duration::from_ms(std::int64_t{50})},
                                       {2, Duration::from_ms(std::int64_t{50})},
                                       {3, Duration::from_ms(std::int64_t{50})}};
        WeightedPath p = longest_weighted_path(CouplingDag(3, {{1, 2}, {2, 3}}), w);
        CHECK(p.path == std::vector<VertexId>{1, 2, 3});
        CHECK(p.total == Duration::from_ms(std::int64_t{150}));
    }
    {
        std::map<VertexId, Duration> w{{1, Duration::from_ms(std::int64_t{10})},
                                       {2, Duration::from_ms(std::int64_t{90})},
                                       {3, Duration::from_ms(std::int64_t{10})}};
        WeightedPath p = longest_weighted_path(CouplingDag(3, {{1, 3}, {2, 3}}), w);
        CHECK(p.path == std::vector<VertexId>{2, 3});
        CHECK(p.total == Duration::from_ms(std::int64_t{100}));
    }
}

TEST_CASE("uniform weights: longest path length equals n_levels") {
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(trial % 8);
        CouplingGraph g = random_graph(n, 350, 5000 + static_cast<std::uint64_t>(trial));
        CouplingDag d = orient_edges(g, random_priority(n, 9 + static_cast<std::uint64_t>(trial)));
        std::map<VertexId, Duration> w;
        for (VertexId v = 1; v <= n; ++v) w[v] = Duration::from_ms(std::int64_t{7});
        WeightedPath p = longest_weighted_path(d, w);
        CHECK(static_cast<int>(p.path.size()) == compute_levels(d).n_levels);
        CHECK(p.total == Duration::from_ms(std::int64_t{7}) * static_cast<std::int64_t>(p.path.size()));
    }
}
