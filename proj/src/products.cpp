#include "domstab/products.hpp"

#include <vector>

#include "domstab/errors.hpp"

namespace domstab {

Graph join(const Graph& g, const Graph& h) {
    const std::size_t shift = g.order();
    auto edges = g.edges();
    for (auto [x, y] : h.edges())
        edges.emplace_back(x + shift, y + shift);
    for (Vertex a = 0; a < g.order(); ++a)
        for (Vertex x = 0; x < h.order(); ++x)
            edges.emplace_back(a, x + shift);
    return Graph::from_edges(g.order() + h.order(), edges);
}

Graph cartesian(const Graph& g, const Graph& h) {
    const std::size_t m = h.order();
    std::vector<Edge> edges;
    for (Vertex a = 0; a < g.order(); ++a)
        for (auto [x, y] : h.edges())
            edges.emplace_back(a * m + x, a * m + y);
    for (auto [a, b] : g.edges())
        for (Vertex x = 0; x < m; ++x)
            edges.emplace_back(a * m + x, b * m + x);
    return Graph::from_edges(g.order() * m, edges);
}

Graph lexicographic(const Graph& g, const Graph& h) {
    const std::size_t m = h.order();
    std::vector<Edge> edges;
    for (Vertex a = 0; a < g.order(); ++a)
        for (auto [x, y] : h.edges())
            edges.emplace_back(a * m + x, a * m + y);
    for (auto [a, b] : g.edges())
        for (Vertex x = 0; x < m; ++x)
            for (Vertex y = 0; y < m; ++y)
                edges.emplace_back(a * m + x, b * m + y);
    return Graph::from_edges(g.order() * m, edges);
}

Graph corona(const Graph& g, const Graph& h) {
    if (g.order() == 0 || h.order() == 0)
        throw DomainError("corona needs two nonempty operands");
    const std::size_t n = g.order(), m = h.order();
    auto edges = g.edges();
    for (Vertex v = 0; v < n; ++v) {
        const std::size_t base = n + v * m;
        for (auto [x, y] : h.edges())
            edges.emplace_back(base + x, base + y);
        for (Vertex x = 0; x < m; ++x)
            edges.emplace_back(v, base + x);
    }
    return Graph::from_edges(n * (1 + m), edges);
}

bool has_universal_vertex(const Graph& g) {
    if (g.order() == 0)
        throw DomainError("universal vertex query on the empty graph");
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) + 1 == g.order())
            return true;
    return false;
}

} // namespace domstab
