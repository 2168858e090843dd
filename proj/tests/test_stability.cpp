#include <doctest.h>

#include "domstab/errors.hpp"
#include "domstab/families.hpp"
#include "domstab/graph6.hpp"
#include "domstab/stability.hpp"
#include "oracles.hpp"

using namespace domstab;

TEST_CASE("stability examples") {
    CHECK(st(complete_graph(4)).value == 3);
    CHECK(st(cycle_graph(5)).value == 2);
    CHECK(st(star_graph(3)).value == 1);
    CHECK(st(complete_graph(1)).value == 1);
    CHECK(st(path_graph(4)).value == 1);
    CHECK(st(friendship_graph(2)).value == 1);
    CHECK_THROWS_AS(st(Graph()), DomainError);
    CHECK_THROWS_AS(st_bruteforce(Graph()), DomainError);

    auto c6 = st_bruteforce(cycle_graph(6));
    CHECK(c6.value == 2);
    CHECK(c6.witness == VertexSet(6, {0, 3}));
    CHECK(c6.gamma2_before == 3);
    CHECK(c6.gamma2_after == 4);
    CHECK(st(cycle_graph(6)).witness == VertexSet(6, {0, 3}));
}

TEST_CASE("complete graphs") {
    for (std::size_t n = 2; n <= 9; ++n) {
        auto r = st(complete_graph(n));
        CHECK(r.value == n - 1);
        CHECK(r.gamma2_after == 1);
    }
}

TEST_CASE("oracle equals definition") {
    for (const auto& g : oracle::random_graphs(60, 1, 8, 21))
        REQUIRE(st_bruteforce(g).value == oracle::st(g));
}

TEST_CASE("fast st equals oracle, witnesses included") {
    for (std::size_t n = 1; n <= 5; ++n)
        for (std::uint64_t mask = 0; mask < labeled_graph_count(n); ++mask) {
            auto g = labeled_graph(n, mask);
            auto fast = st(g);
            auto slow = st_bruteforce(g);
            REQUIRE(fast.value == slow.value);
            REQUIRE(fast.witness == slow.witness);
            REQUIRE(fast.gamma2_before == slow.gamma2_before);
            REQUIRE(fast.gamma2_after == slow.gamma2_after);
        }
    for (const auto& g : oracle::random_graphs(60, 6, 10, 55)) {
        INFO(write_graph6(g));
        auto fast = st(g);
        auto slow = st_bruteforce(g);
        REQUIRE(fast.value == slow.value);
        REQUIRE(fast.witness == slow.witness);
    }
}

TEST_CASE("witness changes gamma2 and is minimal") {
    for (const auto& g : oracle::random_graphs(40, 2, 9, 6)) {
        auto r = st(g);
        REQUIRE(r.witness.size() == r.value);
        REQUIRE(oracle::gamma2(delete_vertices(g, r.witness)) != oracle::gamma2(g));
        REQUIRE(r.value <= g.order());
        // no smaller removal set changes gamma2
        const auto m = oracle::matrix_of(g);
        const auto base = oracle::gamma2(m);
        for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << g.order()); ++mask)
            if (static_cast<std::size_t>(__builtin_popcount(mask)) < r.value)
                REQUIRE(oracle::gamma2(oracle::without(m, mask)) == base);
    }
}

TEST_CASE("guards and deadlines") {
    CHECK_THROWS_AS(st_bruteforce(path_graph(21)), SizeGuardError);
    std::mt19937_64 rng(2);
    auto g = random_gnp(30, 0.3, rng);
    CHECK_THROWS_AS(st(g, Deadline::after(std::chrono::milliseconds(0))), BudgetExceeded);
}
