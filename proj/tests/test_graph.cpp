#include <doctest.h>

#include "domstab/errors.hpp"
#include "domstab/families.hpp"
#include "domstab/graph.hpp"
#include "oracles.hpp"

using namespace domstab;

TEST_CASE("vertex set basics") {
    VertexSet s(70, {0, 3, 64, 69});
    CHECK(s.size() == 4);
    CHECK(s.contains(64));
    CHECK_FALSE(s.contains(65));
    CHECK(s.first() == 0);
    CHECK(s.next(3) == 64);
    CHECK(s.next(69) == 70);
    CHECK(s.members() == std::vector<Vertex>{0, 3, 64, 69});
    CHECK(s.complement().size() == 66);
    CHECK_THROWS_AS(s.insert(70), GraphError);
    VertexSet t(70, {3, 5});
    CHECK(s.intersection_count(t) == 1);
    VertexSet u = s;
    u -= t;
    CHECK(u.members() == std::vector<Vertex>{0, 64, 69});
    CHECK_THROWS_AS(u |= VertexSet(5), GraphError);
    CHECK(VertexSet::full(3).members() == std::vector<Vertex>{0, 1, 2});
}

TEST_CASE("from_edges") {
    auto g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {1, 0}});
    CHECK(g.order() == 4);
    CHECK(g.size() == 3);
    CHECK(g.neighbors(1) == std::vector<Vertex>{0, 2});
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(Graph::from_edges(3, {}).size() == 0);
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), GraphError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), GraphError);
    CHECK(Graph().order() == 0);
}

TEST_CASE("adjacency is symmetric on random graphs") {
    for (const auto& g : oracle::random_graphs(200, 1, 30, 7)) {
        std::size_t degree_sum = 0;
        for (Vertex u = 0; u < g.order(); ++u) {
            degree_sum += g.degree(u);
            for (Vertex v = 0; v < g.order(); ++v)
                REQUIRE(g.adjacent(u, v) == g.adjacent(v, u));
            REQUIRE_FALSE(g.adjacent(u, u));
        }
        REQUIRE(degree_sum == 2 * g.size());
    }
}

TEST_CASE("vertex deletion relabels survivors") {
    auto c6 = cycle_graph(6);
    auto g = delete_vertices(c6, VertexSet(6, {0, 3}));
    CHECK(g == Graph::from_edges(4, {{0, 1}, {2, 3}}));
    CHECK(components(g).size() == 2);
    CHECK(delete_vertices(c6, VertexSet::full(6)).order() == 0);
    CHECK(induced_subgraph(c6, VertexSet(6, {1, 2, 3})) == path_graph(3));
    CHECK_THROWS_AS(delete_vertices(c6, VertexSet(5)), GraphError);
}

TEST_CASE("complement is an involution") {
    for (const auto& g : oracle::random_graphs(100, 1, 20, 11)) {
        auto c = complement(g);
        REQUIRE(c.size() + g.size() == g.order() * (g.order() - 1) / 2);
        REQUIRE(complement(c) == g);
    }
}

TEST_CASE("components") {
    auto g = disjoint_union(path_graph(3), disjoint_union(complete_graph(1), cycle_graph(4)));
    auto comps = components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0].members() == std::vector<Vertex>{0, 1, 2});
    CHECK(comps[1].members() == std::vector<Vertex>{3});
    CHECK(comps[2].members() == std::vector<Vertex>{4, 5, 6, 7});
    auto within = components_within(g, VertexSet(8, {0, 2, 4, 5}));
    CHECK(within.size() == 3);
    CHECK(components(Graph()).empty());
}

TEST_CASE("degrees and induced stars") {
    CHECK(min_degree(cycle_graph(5)) == 2);
    CHECK(max_degree(star_graph(4)) == 4);
    CHECK_THROWS_AS(min_degree(Graph()), DomainError);
    CHECK(max_induced_star(star_graph(3)) == 3);
    CHECK(max_induced_star(cycle_graph(5)) == 2);
    CHECK(max_induced_star(complete_graph(4)) == 1);
    CHECK(max_induced_star(Graph::from_edges(2, {})) == 0);
    CHECK_THROWS_AS(max_induced_star(complete_graph(1)), DomainError);
}
