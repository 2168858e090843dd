#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "domstab/vertex_set.hpp"

namespace domstab {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..order()-1.
///
/// Immutable once built. Every vertex keeps both a sorted neighbor list and a
/// bitset row, so iteration and |N(v) ∩ S| are both cheap. All operations
/// that "modify" a graph return a new one.
class Graph {
public:
    /// The graph with no vertices.
    Graph() = default;

    /// Builds the graph with the given edge set. Duplicate pairs (in either
    /// orientation) collapse. Throws GraphError on a loop or an endpoint >= n.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);
    static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    std::size_t order() const noexcept { return adjacency_.size(); }
    std::size_t size() const noexcept { return edge_count_; }

    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
    const VertexSet& row(Vertex v) const { return rows_.at(v); }
    bool adjacent(Vertex u, Vertex v) const { return rows_.at(u).contains(v); }

    /// All edges as (min, max) pairs in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<VertexSet> rows_;
    std::size_t edge_count_ = 0;
};

/// G - S: the subgraph induced by the vertices outside `removed`. Survivors are
/// relabeled 0.. in their original relative order.
Graph delete_vertices(const Graph& g, const VertexSet& removed);

/// G[S], relabeled compactly like delete_vertices.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

Graph complement(const Graph& g);

/// Vertices of `b` are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

/// Connected components ordered by their smallest member.
std::vector<VertexSet> components(const Graph& g);

/// Components of G[keep], expressed in g's labels.
std::vector<VertexSet> components_within(const Graph& g, const VertexSet& keep);

std::size_t min_degree(const Graph& g);
std::size_t max_degree(const Graph& g);

/// Largest t such that K_{1,t} is an induced subgraph: the maximum, over all
/// vertices v, of the independence number of G[N(v)]. Requires order >= 2.
std::size_t max_induced_star(const Graph& g);

} // namespace domstab
