#include "domstab/corpus.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "domstab/errors.hpp"
#include "domstab/families.hpp"

namespace domstab {

namespace {

std::string padded(std::size_t value, int width) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%0*zu", width, value);
    return buf;
}

std::uint64_t edge_mask(const Graph& g, const std::vector<Vertex>& perm) {
    // bit order matches labeled_graph: pairs (i<j), j outer
    std::uint64_t mask = 0;
    std::size_t bit = 0;
    for (Vertex j = 1; j < g.order(); ++j)
        for (Vertex i = 0; i < j; ++i, ++bit)
            if (g.adjacent(perm[i], perm[j]))
                mask |= std::uint64_t{1} << bit;
    return mask;
}

std::uint64_t canonical_mask(const Graph& g) {
    std::vector<Vertex> perm(g.order());
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::uint64_t best = edge_mask(g, perm);
    while (std::next_permutation(perm.begin(), perm.end()))
        best = std::min(best, edge_mask(g, perm));
    return best;
}

} // namespace

std::vector<CorpusGraph> family_corpus(std::size_t max_n) {
    std::vector<CorpusGraph> out;
    for (Family f : all_families()) {
        const std::string name(family_name(f));
        if (f == Family::CompleteBipartite) {
            for (std::size_t m = 1; m <= max_n; ++m)
                for (std::size_t n = 1; m + n <= max_n; ++n)
                    out.push_back({"family:" + name + ":" + padded(m, 2) + "x" + padded(n, 2),
                                   complete_bipartite_graph(m, n)});
            continue;
        }
        for (std::size_t p = 1; p <= max_n; ++p) {
            Graph g;
            try {
                g = generate({f, {p}});
            } catch (const DomainError&) {
                continue; // below the family's validity range
            }
            out.push_back({"family:" + name + ":" + padded(p, 2), std::move(g)});
        }
    }
    return out;
}

std::vector<CorpusGraph> default_corpus(const CorpusConfig& config) {
    std::vector<CorpusGraph> out;
    const auto count = labeled_graph_count(config.labeled_order);
    const std::string prefix = "labeled" + std::to_string(config.labeled_order) + ":";
    for (std::uint64_t mask = 0; mask < count; ++mask)
        out.push_back({prefix + padded(mask, 4), labeled_graph(config.labeled_order, mask)});

    for (auto& fg : family_corpus(config.max_n))
        out.push_back(std::move(fg));

    std::mt19937_64 rng(config.seed);
    for (std::size_t i = 0; i < config.random_count; ++i) {
        const auto n = uniform_between(rng, config.random_min_n, config.random_max_n);
        const double p =
            config.random_min_p + (config.random_max_p - config.random_min_p) * unit_interval(rng);
        out.push_back({"random:" + padded(i, 3), random_gnp(n, p, rng)});
    }
    return out;
}

std::string describe_corpus(const CorpusConfig& config) {
    std::ostringstream os;
    os << "all " << labeled_graph_count(config.labeled_order) << " labeled graphs on "
       << config.labeled_order << " vertices; every family instance with parameters <= "
       << config.max_n << "; " << config.random_count
       << " G(n,p) graphs with n uniform in [" << config.random_min_n << ","
       << config.random_max_n << "] and p uniform in [" << config.random_min_p << ","
       << config.random_max_p << "], mt19937_64 seed " << config.seed;
    return os.str();
}

std::vector<CorpusGraph> small_graph_classes(std::size_t max_order) {
    if (max_order > 6)
        throw SizeGuardError("small_graph_classes enumerates at most order 6");
    std::vector<CorpusGraph> out;
    for (std::size_t n = 1; n <= max_order; ++n) {
        std::set<std::uint64_t> seen;
        std::size_t index = 0;
        for (std::uint64_t mask = 0; mask < labeled_graph_count(n); ++mask) {
            Graph g = labeled_graph(n, mask);
            if (!seen.insert(canonical_mask(g)).second)
                continue;
            out.push_back({"small:" + std::to_string(n) + ":" + padded(index++, 3), std::move(g)});
        }
    }
    return out;
}

} // namespace domstab
