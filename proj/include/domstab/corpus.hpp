#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "domstab/graph.hpp"

namespace domstab {

struct CorpusGraph {
    std::string label; ///< stable, zero-padded so labels sort in generation order
    Graph graph;
};

struct CorpusConfig {
    std::size_t max_n = 10;
    std::uint64_t seed = 20250101;
    std::size_t labeled_order = 5;
    std::size_t random_count = 200;
    std::size_t random_min_n = 6;
    std::size_t random_max_n = 10;
    double random_min_p = 0.2;
    double random_max_p = 0.8;
};

/// All labeled graphs on `labeled_order` vertices, every family instance with
/// parameters <= max_n, then `random_count` seeded
/// G(n, p) graphs with n and p drawn uniformly from the configured ranges.
std::vector<CorpusGraph> default_corpus(const CorpusConfig& config);

/// One-paragraph description recorded in report headers.
std::string describe_corpus(const CorpusConfig& config);

/// One representative per isomorphism class of graphs with 1..max_order
/// vertices (max_order <= 6), ordered by order and then by the smallest
/// labeled edge mask in the class.
std::vector<CorpusGraph> small_graph_classes(std::size_t max_order);

/// Family instances in default_corpus's order (exposed for tests).
std::vector<CorpusGraph> family_corpus(std::size_t max_n);

} // namespace domstab
