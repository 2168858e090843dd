#include "domstab/families.hpp"

#include <array>
#include <string>

#include "domstab/errors.hpp"

namespace domstab {

namespace {

struct FamilyInfo {
    Family family;
    std::string_view name;
    std::size_t arity;
};

constexpr std::array<FamilyInfo, 13> kFamilies{{
    {Family::Path, "path", 1},
    {Family::Cycle, "cycle", 1},
    {Family::Complete, "complete", 1},
    {Family::Star, "star", 1},
    {Family::CompleteBipartite, "complete_bipartite", 2},
    {Family::Wheel, "wheel", 1},
    {Family::Friendship, "friendship", 1},
    {Family::Book, "book", 1},
    {Family::Helm, "helm", 1},
    {Family::SubdividedWheel, "subdivided_wheel", 1},
    {Family::TriChain, "tri_chain", 1},
    {Family::ParaChain, "para_chain", 1},
    {Family::OrthoChain, "ortho_chain", 1},
}};

constexpr std::array<Family, 13> kFamilyList{
    Family::Path,       Family::Cycle,    Family::Complete,        Family::Star,
    Family::CompleteBipartite, Family::Wheel, Family::Friendship,  Family::Book,
    Family::Helm,       Family::SubdividedWheel, Family::TriChain, Family::ParaChain,
    Family::OrthoChain,
};

void require_at_least(std::string_view family, std::size_t value, std::size_t bound) {
    if (value < bound)
        throw DomainError(std::string(family) + " requires parameter >= " + std::to_string(bound) +
                          ", got " + std::to_string(value));
}

void add_rim(std::vector<Edge>& edges, std::size_t n) {
    // rim cycle on 1..n-1
    for (Vertex i = 1; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    edges.emplace_back(n - 1, 1);
}

} // namespace

std::string_view family_name(Family f) {
    for (const auto& info : kFamilies)
        if (info.family == f)
            return info.name;
    return "unknown";
}

std::optional<Family> family_from_name(std::string_view name) {
    for (const auto& info : kFamilies)
        if (info.name == name)
            return info.family;
    return std::nullopt;
}

std::span<const Family> all_families() { return kFamilyList; }

std::size_t family_arity(Family f) {
    for (const auto& info : kFamilies)
        if (info.family == f)
            return info.arity;
    return 1;
}

Graph path_graph(std::size_t n) {
    require_at_least("path", n, 1);
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

Graph cycle_graph(std::size_t n) {
    require_at_least("cycle", n, 3);
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    edges.emplace_back(n - 1, 0);
    return Graph::from_edges(n, edges);
}

Graph complete_graph(std::size_t n) {
    require_at_least("complete", n, 1);
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

Graph star_graph(std::size_t leaves) {
    require_at_least("star", leaves, 1);
    std::vector<Edge> edges;
    for (Vertex i = 1; i <= leaves; ++i)
        edges.emplace_back(0, i);
    return Graph::from_edges(leaves + 1, edges);
}

Graph complete_bipartite_graph(std::size_t m, std::size_t n) {
    require_at_least("complete_bipartite", m, 1);
    require_at_least("complete_bipartite", n, 1);
    std::vector<Edge> edges;
    for (Vertex a = 0; a < m; ++a)
        for (Vertex b = 0; b < n; ++b)
            edges.emplace_back(a, m + b);
    return Graph::from_edges(m + n, edges);
}

Graph wheel_graph(std::size_t n) {
    require_at_least("wheel", n, 4);
    std::vector<Edge> edges;
    for (Vertex i = 1; i < n; ++i)
        edges.emplace_back(0, i);
    add_rim(edges, n);
    return Graph::from_edges(n, edges);
}

Graph friendship_graph(std::size_t n) {
    require_at_least("friendship", n, 1);
    std::vector<Edge> edges;
    for (Vertex i = 1; i <= n; ++i) {
        edges.emplace_back(0, 2 * i - 1);
        edges.emplace_back(0, 2 * i);
        edges.emplace_back(2 * i - 1, 2 * i);
    }
    return Graph::from_edges(2 * n + 1, edges);
}

Graph book_graph(std::size_t n) {
    require_at_least("book", n, 1);
    std::vector<Edge> edges{{0, 1}};
    for (Vertex i = 1; i <= n; ++i) {
        edges.emplace_back(0, 2 * i);
        edges.emplace_back(1, 2 * i + 1);
        edges.emplace_back(2 * i, 2 * i + 1);
    }
    return Graph::from_edges(2 * n + 2, edges);
}

Graph helm_graph(std::size_t n) {
    require_at_least("helm", n, 4);
    std::vector<Edge> edges;
    for (Vertex i = 1; i < n; ++i) {
        edges.emplace_back(0, i);
        edges.emplace_back(i, n - 1 + i);
    }
    add_rim(edges, n);
    return Graph::from_edges(2 * n - 1, edges);
}

Graph subdivided_wheel_graph(std::size_t n) {
    require_at_least("subdivided_wheel", n, 4);
    std::vector<Edge> edges;
    for (Vertex i = 1; i < n; ++i) {
        Vertex succ = (i + 1 < n) ? i + 1 : 1;
        Vertex mid = n - 1 + i;
        edges.emplace_back(0, i);
        edges.emplace_back(i, mid);
        edges.emplace_back(mid, succ);
    }
    return Graph::from_edges(2 * n - 1, edges);
}

Graph tri_chain(std::size_t n) {
    require_at_least("tri_chain", n, 1);
    std::vector<Edge> edges;
    for (Vertex i = 1; i <= n; ++i) {
        Vertex a = i - 1, next = i, apex = n + i;
        edges.emplace_back(a, next);
        edges.emplace_back(a, apex);
        edges.emplace_back(next, apex);
    }
    return Graph::from_edges(2 * n + 1, edges);
}

Graph para_chain(std::size_t n) {
    require_at_least("para_chain", n, 1);
    std::vector<Edge> edges;
    for (Vertex i = 1; i <= n; ++i) {
        Vertex a = i - 1, next = i, x = n + 2 * i - 1, y = n + 2 * i;
        edges.emplace_back(a, x);
        edges.emplace_back(x, next);
        edges.emplace_back(next, y);
        edges.emplace_back(y, a);
    }
    return Graph::from_edges(3 * n + 1, edges);
}

Graph ortho_chain(std::size_t n) {
    require_at_least("ortho_chain", n, 1);
    std::vector<Edge> edges;
    for (Vertex i = 1; i <= n; ++i) {
        Vertex a = i - 1, next = i, x = n + 2 * i - 1, y = n + 2 * i;
        edges.emplace_back(a, next);
        edges.emplace_back(next, x);
        edges.emplace_back(x, y);
        edges.emplace_back(y, a);
    }
    return Graph::from_edges(3 * n + 1, edges);
}

Graph generate(const FamilySpec& spec) {
    const auto name = family_name(spec.family);
    if (spec.params.size() != family_arity(spec.family))
        throw DomainError(std::string(name) + " takes " + std::to_string(family_arity(spec.family)) +
                          " parameter(s), got " + std::to_string(spec.params.size()));
    const auto& p = spec.params;
    switch (spec.family) {
    case Family::Path: return path_graph(p[0]);
    case Family::Cycle: return cycle_graph(p[0]);
    case Family::Complete: return complete_graph(p[0]);
    case Family::Star: return star_graph(p[0]);
    case Family::CompleteBipartite: return complete_bipartite_graph(p[0], p[1]);
    case Family::Wheel: return wheel_graph(p[0]);
    case Family::Friendship: return friendship_graph(p[0]);
    case Family::Book: return book_graph(p[0]);
    case Family::Helm: return helm_graph(p[0]);
    case Family::SubdividedWheel: return subdivided_wheel_graph(p[0]);
    case Family::TriChain: return tri_chain(p[0]);
    case Family::ParaChain: return para_chain(p[0]);
    case Family::OrthoChain: return ortho_chain(p[0]);
    }
    throw DomainError("unknown family");
}

double unit_interval(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::size_t uniform_between(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

Graph random_gnp(std::size_t n, double p, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i)
            if (unit_interval(rng) < p)
                edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

std::uint64_t labeled_graph_count(std::size_t n) {
    const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
    if (pairs >= 64)
        throw SizeGuardError("too many labeled graphs on " + std::to_string(n) + " vertices");
    return std::uint64_t{1} << pairs;
}

Graph labeled_graph(std::size_t n, std::uint64_t mask) {
    if (mask >= labeled_graph_count(n))
        throw DomainError("labeled graph index out of range");
    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++bit)
            if ((mask >> bit) & 1U)
                edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

} // namespace domstab
