#pragma once

#include "domstab/graph.hpp"

namespace domstab {

// Product vertex (a, x) with a in G and x in H is labeled a * |V(H)| + x.

/// G ∨ H: G's vertices first, then H's shifted by |V(G)|, plus every cross edge.
Graph join(const Graph& g, const Graph& h);

/// G □ H: (a,x)~(b,y) iff (a=b and x~y) or (x=y and a~b).
Graph cartesian(const Graph& g, const Graph& h);

/// G[H]: (a,x)~(b,y) iff a~b, or a=b and x~y.
Graph lexicographic(const Graph& g, const Graph& h);

/// G ∘ H: roots 0..|V(G)|-1 keep G's edges; root v owns the copy of H on
/// |V(G)| + v*|V(H)| + x and is joined to all of it. Both operands must be
/// nonempty (DomainError otherwise).
Graph corona(const Graph& g, const Graph& h);

/// True iff some vertex has degree n-1. K1 counts (its vertex is vacuously
/// adjacent to all others). DomainError on the empty graph.
bool has_universal_vertex(const Graph& g);

} // namespace domstab
