#include "domstab/graph.hpp"

#include <algorithm>
#include <string>

#include "domstab/errors.hpp"

namespace domstab {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g;
    g.adjacency_.resize(n);
    g.rows_.assign(n, VertexSet(n));
    for (auto [u, v] : edges) {
        if (u >= n || v >= n || u == v)
            throw GraphError("invalid edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") for graph of order " + std::to_string(n));
        if (g.rows_[u].contains(v))
            continue;
        g.rows_[u].insert(v);
        g.rows_[v].insert(u);
        ++g.edge_count_;
    }
    for (Vertex v = 0; v < n; ++v)
        g.adjacency_[v] = g.rows_[v].members();
    return g;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : adjacency_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
    if (keep.universe() != g.order())
        throw GraphError("vertex set universe does not match graph order");
    constexpr auto gone = static_cast<Vertex>(-1);
    std::vector<Vertex> relabel(g.order(), gone);
    std::size_t next = 0;
    keep.for_each([&](Vertex v) { relabel[v] = next++; });

    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (relabel[u] != gone && relabel[v] != gone)
            edges.emplace_back(relabel[u], relabel[v]);
    return Graph::from_edges(next, edges);
}

Graph delete_vertices(const Graph& g, const VertexSet& removed) {
    if (removed.universe() != g.order())
        throw GraphError("vertex set universe does not match graph order");
    return induced_subgraph(g, removed.complement());
}

Graph complement(const Graph& g) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v))
                edges.emplace_back(u, v);
    return Graph::from_edges(g.order(), edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    auto edges = a.edges();
    for (auto [u, v] : b.edges())
        edges.emplace_back(u + a.order(), v + a.order());
    return Graph::from_edges(a.order() + b.order(), edges);
}

std::vector<VertexSet> components_within(const Graph& g, const VertexSet& keep) {
    if (keep.universe() != g.order())
        throw GraphError("vertex set universe does not match graph order");
    std::vector<VertexSet> out;
    VertexSet unseen = keep;
    std::vector<Vertex> stack;
    for (Vertex root = unseen.first(); root < g.order(); root = unseen.first()) {
        VertexSet comp(g.order());
        unseen.erase(root);
        comp.insert(root);
        stack.push_back(root);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v)) {
                if (unseen.contains(w)) {
                    unseen.erase(w);
                    comp.insert(w);
                    stack.push_back(w);
                }
            }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<VertexSet> components(const Graph& g) {
    return components_within(g, VertexSet::full(g.order()));
}

std::size_t min_degree(const Graph& g) {
    if (g.order() == 0)
        throw DomainError("minimum degree of the empty graph is undefined");
    std::size_t best = g.degree(0);
    for (Vertex v = 1; v < g.order(); ++v)
        best = std::min(best, g.degree(v));
    return best;
}

std::size_t max_degree(const Graph& g) {
    std::size_t best = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        best = std::max(best, g.degree(v));
    return best;
}

namespace {

// Exhaustive maximum independent set inside `candidates`, branching on the
// first remaining candidate (take it, or drop it).
std::size_t independence_number(const Graph& g, VertexSet candidates, std::size_t taken,
                                std::size_t best) {
    if (candidates.empty())
        return std::max(best, taken);
    if (taken + candidates.size() <= best)
        return best;
    Vertex v = candidates.first();
    candidates.erase(v);
    VertexSet without_nbrs = candidates;
    without_nbrs -= g.row(v);
    best = independence_number(g, std::move(without_nbrs), taken + 1, best);
    return independence_number(g, std::move(candidates), taken, best);
}

} // namespace

std::size_t max_induced_star(const Graph& g) {
    if (g.order() < 2)
        throw DomainError("induced star search needs at least two vertices");
    std::size_t best = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) > best)
            best = independence_number(g, g.row(v), 0, best);
    return best;
}

} // namespace domstab
