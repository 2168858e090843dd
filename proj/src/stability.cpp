#include "domstab/stability.hpp"

#include <string>
#include <unordered_map>

#include "domstab/combinations.hpp"
#include "domstab/errors.hpp"
#include "domstab/solver.hpp"

namespace domstab {

namespace {

VertexSet set_from_indices(std::size_t n, std::span<const std::size_t> idx) {
    VertexSet s(n);
    for (auto i : idx)
        s.insert(i);
    return s;
}

} // namespace

StabilityResult st_bruteforce(const Graph& g, const Deadline& deadline) {
    const std::size_t n = g.order();
    if (n == 0)
        throw DomainError("2-domination stability of the empty graph is undefined");
    if (n > kStabilityBruteforceMaxOrder)
        throw SizeGuardError("st_bruteforce refuses order " + std::to_string(n) + " (limit " +
                             std::to_string(kStabilityBruteforceMaxOrder) + ")");

    StabilityResult r;
    r.gamma2_before = gamma2_bruteforce(g, deadline).value;
    for (std::size_t s = 1; s <= n; ++s) {
        bool found = for_each_combination(n, s, [&](std::span<const std::size_t> idx) {
            auto removed = set_from_indices(n, idx);
            auto after = gamma2_bruteforce(delete_vertices(g, removed), deadline).value;
            if (after == r.gamma2_before)
                return false;
            r.value = s;
            r.witness = std::move(removed);
            r.gamma2_after = after;
            return true;
        });
        if (found)
            return r;
    }
    throw Error("unreachable: removing every vertex changes gamma_2");
}

StabilityResult st(const Graph& g, const Deadline& deadline) {
    const std::size_t n = g.order();
    if (n == 0)
        throw DomainError("2-domination stability of the empty graph is undefined");

    StabilityResult r;
    r.gamma2_before = gamma2(g, deadline).value;

    std::unordered_map<VertexSet, std::size_t, VertexSetHash> cache;
    auto component_value = [&](const VertexSet& comp) {
        auto it = cache.find(comp);
        if (it != cache.end())
            return it->second;
        auto value = gamma2(induced_subgraph(g, comp), deadline).value;
        cache.emplace(comp, value);
        return value;
    };

    const VertexSet all = VertexSet::full(n);
    for (std::size_t s = 1; s <= n; ++s) {
        bool found = for_each_combination(n, s, [&](std::span<const std::size_t> idx) {
            deadline.check();
            auto removed = set_from_indices(n, idx);
            VertexSet keep = all;
            keep -= removed;
            std::size_t total = 0;
            for (const auto& comp : components_within(g, keep)) {
                total += component_value(comp);
                if (total > r.gamma2_before)
                    break;
            }
            if (total == r.gamma2_before)
                return false;
            r.value = s;
            r.witness = std::move(removed);
            return true;
        });
        if (found) {
            r.gamma2_after = gamma2(delete_vertices(g, r.witness), deadline).value;
            return r;
        }
    }
    throw Error("unreachable: removing every vertex changes gamma_2");
}

} // namespace domstab
