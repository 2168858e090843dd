#include <doctest.h>

#include "domstab/errors.hpp"
#include "domstab/families.hpp"
#include "domstab/graph6.hpp"
#include "domstab/solver.hpp"
#include "oracles.hpp"

using namespace domstab;

TEST_CASE("gamma2 examples") {
    CHECK(gamma2(Graph()).value == 0);
    CHECK(gamma2(complete_graph(1)).value == 1);
    CHECK(gamma2(complete_graph(2)).value == 2);
    CHECK(gamma2(cycle_graph(4)).value == 2);
    CHECK(gamma2(path_graph(4)).value == 3);
    CHECK(gamma2(star_graph(3)).value == 3);
    CHECK(gamma2(complete_graph(6)).value == 2);
    CHECK(gamma2(Graph::from_edges(5, {})).value == 5);
    CHECK(gamma2_bruteforce(path_graph(4)).witness == VertexSet(4, {0, 1, 3}));
    CHECK(gamma2_bruteforce(cycle_graph(4)).witness == VertexSet(4, {0, 2}));
}

TEST_CASE("is_2_dominating") {
    auto c4 = cycle_graph(4);
    CHECK(is_2_dominating(c4, VertexSet(4, {0, 2})));
    CHECK_FALSE(is_2_dominating(c4, VertexSet(4, {0, 1})));
    CHECK(is_2_dominating(c4, VertexSet::full(4)));
    CHECK_THROWS_AS(is_2_dominating(c4, VertexSet(5)), GraphError);
    CHECK(forced_vertices(star_graph(3)) == VertexSet(4, {1, 2, 3}));
}

TEST_CASE("oracle equals definition on small graphs") {
    for (const auto& g : oracle::random_graphs(150, 1, 10, 31))
        REQUIRE(gamma2_bruteforce(g).value == oracle::gamma2(g));
}

TEST_CASE("solver equals oracle on all labeled 5-vertex graphs") {
    for (std::uint64_t mask = 0; mask < labeled_graph_count(5); ++mask) {
        auto g = labeled_graph(5, mask);
        auto fast = gamma2(g);
        auto slow = gamma2_bruteforce(g);
        REQUIRE(fast.value == slow.value);
        REQUIRE(is_2_dominating(g, fast.witness));
        REQUIRE(fast.witness.size() == fast.value);
        REQUIRE(is_2_dominating(g, slow.witness));
    }
}

TEST_CASE("solver equals oracle on random graphs") {
    for (const auto& g : oracle::random_graphs(300, 6, 16, 77)) {
        auto fast = gamma2(g);
        INFO(write_graph6(g));
        REQUIRE(fast.value == gamma2_bruteforce(g).value);
        REQUIRE(is_2_dominating(g, fast.witness));
        REQUIRE(fast.witness.size() == fast.value);
    }
}

TEST_CASE("bounds, forced vertices and additivity") {
    for (const auto& g : oracle::random_graphs(200, 1, 14, 3)) {
        auto r = gamma2(g);
        REQUIRE(r.value <= g.order());
        if (g.order() >= 2)
            REQUIRE(r.value >= 2);
        REQUIRE(forced_vertices(g).is_subset_of(r.witness));
        std::size_t sum = 0;
        for (const auto& comp : components(g))
            sum += gamma2(induced_subgraph(g, comp)).value;
        REQUIRE(sum == r.value);
    }
}

TEST_CASE("adding an edge never increases gamma2") {
    std::mt19937_64 rng(404);
    std::size_t checked = 0;
    for (const auto& g : oracle::random_graphs(200, 4, 14, 8)) {
        auto edges = g.edges();
        auto comp = complement(g).edges();
        if (comp.empty())
            continue;
        edges.push_back(comp[rng() % comp.size()]);
        auto h = Graph::from_edges(g.order(), edges);
        REQUIRE(gamma2(h).value <= gamma2(g).value);
        if (++checked == 100)
            break;
    }
    CHECK(checked == 100);
}

TEST_CASE("guards and deadlines") {
    CHECK_THROWS_AS(gamma2_bruteforce(path_graph(27)), SizeGuardError);
    CHECK(gamma2(path_graph(60)).value == 31);
    CHECK(gamma2(cycle_graph(61)).value == 31);
    std::mt19937_64 rng(1);
    auto g = random_gnp(40, 0.2, rng);
    CHECK_THROWS_AS(gamma2(g, Deadline::after(std::chrono::milliseconds(0))), BudgetExceeded);
}
