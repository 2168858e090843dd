#include <doctest.h>

#include "domstab/errors.hpp"
#include "domstab/families.hpp"
#include "domstab/products.hpp"
#include "oracles.hpp"

using namespace domstab;

TEST_CASE("product examples") {
    CHECK(join(complete_graph(1), complete_graph(1)) == complete_graph(2));
    CHECK(oracle::isomorphic(join(Graph::from_edges(2, {}), Graph::from_edges(2, {})), cycle_graph(4)));
    CHECK(oracle::isomorphic(cartesian(complete_graph(2), complete_graph(2)), cycle_graph(4)));
    CHECK(oracle::isomorphic(lexicographic(complete_graph(2), complete_graph(2)), complete_graph(4)));
    CHECK(oracle::isomorphic(corona(complete_graph(1), complete_graph(1)), complete_graph(2)));
    CHECK(oracle::isomorphic(corona(complete_graph(2), complete_graph(1)), path_graph(4)));
    CHECK(oracle::isomorphic(corona(complete_graph(1), Graph::from_edges(2, {})), path_graph(3)));
}

TEST_CASE("product labeling") {
    auto g = path_graph(2), h = path_graph(3);
    auto c = cartesian(g, h);
    // (a, x) -> a * |V(H)| + x
    CHECK(c.adjacent(0, 1));
    CHECK(c.adjacent(1, 4));
    CHECK_FALSE(c.adjacent(0, 4));
    auto l = lexicographic(g, h);
    CHECK(l.adjacent(0, 4));
    CHECK_FALSE(l.adjacent(0, 2));
    auto k = corona(g, h);
    // roots 0..1, copy of H for root v at 2 + 3v
    CHECK(k.adjacent(0, 2));
    CHECK(k.adjacent(0, 4));
    CHECK(k.adjacent(1, 5));
    CHECK_FALSE(k.adjacent(0, 5));
    CHECK(k.adjacent(5, 6));
    auto j = join(g, h);
    CHECK(j.adjacent(0, 2));
    CHECK(j.adjacent(2, 3));
    CHECK_FALSE(j.adjacent(2, 4));
}

TEST_CASE("product edge counts") {
    auto graphs = oracle::random_graphs(40, 1, 7, 99);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const auto& g = graphs[i];
        const auto& h = graphs[(i * 7 + 3) % graphs.size()];
        const auto ng = g.order(), nh = h.order(), mg = g.size(), mh = h.size();
        auto j = join(g, h);
        REQUIRE(j.order() == ng + nh);
        REQUIRE(j.size() == mg + mh + ng * nh);
        auto c = cartesian(g, h);
        REQUIRE(c.order() == ng * nh);
        REQUIRE(c.size() == ng * mh + nh * mg);
        auto l = lexicographic(g, h);
        REQUIRE(l.order() == ng * nh);
        REQUIRE(l.size() == mg * nh * nh + ng * mh);
        auto k = corona(g, h);
        REQUIRE(k.order() == ng * (1 + nh));
        REQUIRE(k.size() == mg + ng * (mh + nh));
    }
}

TEST_CASE("join and cartesian commute up to isomorphism") {
    auto graphs = oracle::random_graphs(30, 1, 4, 5);
    for (std::size_t i = 0; i + 1 < graphs.size(); i += 2) {
        const auto& g = graphs[i];
        const auto& h = graphs[i + 1];
        REQUIRE(oracle::isomorphic(join(g, h), join(h, g)));
        if (g.order() * h.order() <= 8)
            REQUIRE(oracle::isomorphic(cartesian(g, h), cartesian(h, g)));
    }
}

TEST_CASE("universal vertices and empty operands") {
    CHECK(has_universal_vertex(complete_graph(1)));
    CHECK(has_universal_vertex(star_graph(3)));
    CHECK_FALSE(has_universal_vertex(cycle_graph(4)));
    CHECK_FALSE(has_universal_vertex(Graph::from_edges(2, {})));
    CHECK_THROWS_AS(has_universal_vertex(Graph()), DomainError);
    CHECK_THROWS_AS(corona(Graph(), complete_graph(2)), DomainError);
    CHECK_THROWS_AS(corona(complete_graph(2), Graph()), DomainError);
}
