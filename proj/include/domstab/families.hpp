#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "domstab/graph.hpp"

namespace domstab {

enum class Family {
    Path,
    Cycle,
    Complete,
    Star,
    CompleteBipartite,
    Wheel,
    Friendship,
    Book,
    Helm,
    SubdividedWheel,
    TriChain,
    ParaChain,
    OrthoChain,
};

/// A named family plus its integer parameters (two for complete_bipartite,
/// one for everything else).
struct FamilySpec {
    Family family;
    std::vector<std::size_t> params;
};

/// CLI-facing lowercase name, e.g. "complete_bipartite".
std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);
std::span<const Family> all_families();
std::size_t family_arity(Family f);

/// Builds the family member with the labeling documented below. Throws
/// DomainError when a parameter is below the family's validity range.
///
///   path n>=1            0-1-...-(n-1)
///   cycle n>=3           path plus (n-1)-0
///   complete n>=1
///   star l>=1            center 0, leaves 1..l (order l+1)
///   complete_bipartite   sides 0..m-1 and m..m+n-1, m,n>=1
///   wheel n>=4           hub 0, rim cycle 1..n-1
///   friendship n>=1      hub 0, triangle i on {0, 2i-1, 2i}
///   book n>=1            hubs 0-1; page i adds 2i~0 and 2i+1~1 with 2i-(2i+1)
///   helm n>=4            wheel of order n, pendant n-1+i on rim vertex i
///   subdivided_wheel n>=4  wheel of order n, rim edge i-(i+1) subdivided by n-1+i
///   tri_chain n>=1       spine a_i = i-1 (i=1..n+1), apex b_i = n+i,
///                        triangle i = {a_i, a_{i+1}, b_i}
///   para_chain n>=1      spine as above, x_i = n+2i-1, y_i = n+2i,
///                        square a_i-x_i-a_{i+1}-y_i-a_i
///   ortho_chain n>=1     same labels, square a_i-a_{i+1}-x_i-y_i-a_i
Graph generate(const FamilySpec& spec);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
Graph complete_bipartite_graph(std::size_t m, std::size_t n);
Graph wheel_graph(std::size_t n);
Graph friendship_graph(std::size_t n);
Graph book_graph(std::size_t n);
Graph helm_graph(std::size_t n);
Graph subdivided_wheel_graph(std::size_t n);
Graph tri_chain(std::size_t n);
Graph para_chain(std::size_t n);
Graph ortho_chain(std::size_t n);

/// Uniform double in [0, 1) from the top 53 bits of one draw. Used instead of
/// <random> distributions, whose outputs differ between standard libraries.
double unit_interval(std::mt19937_64& rng);
/// Uniform integer in [lo, hi].
std::size_t uniform_between(std::mt19937_64& rng, std::size_t lo, std::size_t hi);

/// Erdős–Rényi G(n, p): pair (i<j) in graph6 bit order is an edge when its
/// draw falls below p.
Graph random_gnp(std::size_t n, double p, std::mt19937_64& rng);

/// The 2^(n(n-1)/2) labeled graphs on n vertices, indexed by the edge mask
/// over pairs (i<j) in graph6 bit order.
Graph labeled_graph(std::size_t n, std::uint64_t mask);
std::uint64_t labeled_graph_count(std::size_t n);

} // namespace domstab
