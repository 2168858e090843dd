#include <doctest.h>

#include "domstab/errors.hpp"
#include "domstab/families.hpp"
#include "domstab/graph6.hpp"
#include "domstab/products.hpp"
#include "oracles.hpp"

using namespace domstab;

namespace {

bool is_connected(const Graph& g) { return g.order() > 0 && components(g).size() == 1; }

std::size_t count_paths(const Graph& h, Vertex at, Vertex target, std::vector<bool>& seen, std::size_t cap) {
    if (at == target)
        return 1;
    std::size_t found = 0;
    seen[at] = true;
    for (Vertex w : h.neighbors(at))
        if (!seen[w] && found < cap)
            found += count_paths(h, w, target, seen, cap - found);
    seen[at] = false;
    return found;
}

// every edge uv lies on at most one cycle: at most one simple u-v path avoids uv
bool is_cactus(const Graph& g) {
    if (!is_connected(g))
        return false;
    for (auto [u, v] : g.edges()) {
        std::vector<Edge> rest;
        for (auto e : g.edges())
            if (e != Edge{u, v})
                rest.push_back(e);
        auto h = Graph::from_edges(g.order(), rest);
        std::vector<bool> seen(h.order(), false);
        if (count_paths(h, u, v, seen, 2) > 1)
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("family orders and sizes") {
    for (std::size_t n = 1; n <= 50; ++n) {
        CHECK(path_graph(n).size() == n - 1);
        CHECK(complete_graph(n).size() == n * (n - 1) / 2);
        CHECK(star_graph(n).order() == n + 1);
        CHECK(star_graph(n).size() == n);
        CHECK(friendship_graph(n).order() == 2 * n + 1);
        CHECK(friendship_graph(n).size() == 3 * n);
        CHECK(book_graph(n).order() == 2 * n + 2);
        CHECK(book_graph(n).size() == 3 * n + 1);
        CHECK(tri_chain(n).order() == 2 * n + 1);
        CHECK(tri_chain(n).size() == 3 * n);
        CHECK(para_chain(n).order() == 3 * n + 1);
        CHECK(para_chain(n).size() == 4 * n);
        CHECK(ortho_chain(n).order() == 3 * n + 1);
        CHECK(ortho_chain(n).size() == 4 * n);
        for (std::size_t m = 1; m <= 5; ++m)
            CHECK(complete_bipartite_graph(m, n).size() == m * n);
        if (n >= 3)
            CHECK(cycle_graph(n).size() == n);
        if (n >= 4) {
            CHECK(wheel_graph(n).order() == n);
            CHECK(wheel_graph(n).size() == 2 * (n - 1));
            CHECK(helm_graph(n).order() == 2 * n - 1);
            CHECK(helm_graph(n).size() == 3 * (n - 1));
            CHECK(subdivided_wheel_graph(n).order() == 2 * n - 1);
            CHECK(subdivided_wheel_graph(n).size() == 3 * (n - 1));
        }
    }
}

TEST_CASE("family validity ranges") {
    CHECK_THROWS_AS(path_graph(0), DomainError);
    CHECK_THROWS_AS(cycle_graph(2), DomainError);
    CHECK_THROWS_AS(wheel_graph(3), DomainError);
    CHECK_THROWS_AS(helm_graph(3), DomainError);
    CHECK_THROWS_AS(star_graph(0), DomainError);
    CHECK_THROWS_AS(generate({Family::CompleteBipartite, {2}}), DomainError);
    CHECK_THROWS_AS(generate({Family::Path, {2, 3}}), DomainError);
    CHECK(generate({Family::CompleteBipartite, {2, 3}}) == complete_bipartite_graph(2, 3));
}

TEST_CASE("family names round trip") {
    for (Family f : all_families())
        CHECK(family_from_name(family_name(f)) == f);
    CHECK(family_from_name("complete_bipartite") == Family::CompleteBipartite);
    CHECK_FALSE(family_from_name("petersen").has_value());
}

TEST_CASE("wheel is K1 join cycle") {
    for (std::size_t n = 4; n <= 9; ++n)
        CHECK(oracle::isomorphic(wheel_graph(n), join(complete_graph(1), cycle_graph(n - 1))));
}

TEST_CASE("friendship and book structure") {
    for (std::size_t n = 1; n <= 4; ++n) {
        CHECK(friendship_graph(n).degree(0) == 2 * n);
        auto b = book_graph(n);
        CHECK(b.adjacent(0, 1));
        CHECK(b.degree(0) == n + 1);
        CHECK(b.degree(1) == n + 1);
    }
    CHECK(oracle::isomorphic(book_graph(1), cycle_graph(4)));
}

TEST_CASE("cactus chains are cacti") {
    for (std::size_t n = 1; n <= 6; ++n) {
        CHECK(is_cactus(tri_chain(n)));
        CHECK(is_cactus(para_chain(n)));
        CHECK(is_cactus(ortho_chain(n)));
        CHECK(is_cactus(friendship_graph(n)));
    }
    CHECK_FALSE(is_cactus(book_graph(2)));
    CHECK_FALSE(is_cactus(complete_graph(4)));
}

TEST_CASE("para and ortho chains differ from n = 3") {
    CHECK(oracle::isomorphic(para_chain(2), ortho_chain(2)));
    CHECK_FALSE(oracle::isomorphic(para_chain(3), ortho_chain(3)));
}

TEST_CASE("random graphs are deterministic") {
    std::mt19937_64 a(5), b(5);
    CHECK(random_gnp(30, 0.3, a) == random_gnp(30, 0.3, b));
    std::mt19937_64 r(1);
    CHECK(random_gnp(10, 0.0, r).size() == 0);
    CHECK(random_gnp(10, 1.0, r).size() == 45);
    for (int i = 0; i < 1000; ++i) {
        auto x = unit_interval(r);
        REQUIRE(x >= 0.0);
        REQUIRE(x < 1.0);
        auto k = uniform_between(r, 6, 10);
        REQUIRE(k >= 6);
        REQUIRE(k <= 10);
    }
}

TEST_CASE("labeled graphs") {
    CHECK(labeled_graph_count(5) == 1024);
    CHECK(labeled_graph(5, 0).size() == 0);
    CHECK(labeled_graph(5, 1023) == complete_graph(5));
    CHECK(labeled_graph(2, 1) == complete_graph(2));
}
