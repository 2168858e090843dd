#pragma once

#include <cstddef>

#include "domstab/deadline.hpp"
#include "domstab/graph.hpp"

namespace domstab {

/// gamma_2(G) and a minimum 2-dominating set attaining it.
struct DominationResult {
    std::size_t value = 0;
    VertexSet witness;
};

/// Largest order gamma2_bruteforce will enumerate.
inline constexpr std::size_t kGamma2BruteforceMaxOrder = 26;

/// True iff every vertex outside d has at least two neighbors in d.
bool is_2_dominating(const Graph& g, const VertexSet& d);

/// Vertices of degree <= 1. They lie in every 2-dominating set.
VertexSet forced_vertices(const Graph& g);

/// Reference oracle: tries candidate sets by increasing size, each size in
/// lexicographic order, and returns the first 2-dominating one. The witness
/// is therefore the lexicographically smallest minimum set. Throws
/// SizeGuardError above kGamma2BruteforceMaxOrder.
DominationResult gamma2_bruteforce(const Graph& g, const Deadline& deadline = {});

/// Exact branch-and-bound solver. Same value as the oracle; the witness is
/// some minimum 2-dominating set.
DominationResult gamma2(const Graph& g, const Deadline& deadline = {});

} // namespace domstab
