#pragma once

#include <cstddef>

#include "domstab/deadline.hpp"
#include "domstab/graph.hpp"

namespace domstab {

/// st_gamma2(G): the fewest vertices whose removal changes gamma_2.
struct StabilityResult {
    std::size_t value = 0;
    VertexSet witness; ///< lexicographically first changing set of minimum size
    std::size_t gamma2_before = 0;
    std::size_t gamma2_after = 0;
};

inline constexpr std::size_t kStabilityBruteforceMaxOrder = 20;

/// Reference oracle. Tries removal sets by size s = 1, 2, ..., each size in
/// lexicographic order, recomputing gamma_2 of G - S with gamma2_bruteforce.
/// Any subset is allowed: G - S may be disconnected. Always terminates since
/// removing all n vertices leaves gamma_2 = 0. DomainError on the empty graph,
/// SizeGuardError above kStabilityBruteforceMaxOrder.
StabilityResult st_bruteforce(const Graph& g, const Deadline& deadline = {});

/// Same contract and same witness as st_bruteforce, using the fast solver and
/// a cache of gamma_2 per surviving connected component (keyed by the
/// component's vertex set in g's labels).
StabilityResult st(const Graph& g, const Deadline& deadline = {});

} // namespace domstab
