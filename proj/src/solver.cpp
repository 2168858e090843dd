#include "domstab/solver.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "domstab/combinations.hpp"
#include "domstab/errors.hpp"

namespace domstab {

bool is_2_dominating(const Graph& g, const VertexSet& d) {
    if (d.universe() != g.order())
        throw GraphError("dominating set universe does not match graph order");
    for (Vertex v = 0; v < g.order(); ++v)
        if (!d.contains(v) && g.row(v).intersection_count(d) < 2)
            return false;
    return true;
}

VertexSet forced_vertices(const Graph& g) {
    VertexSet out(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) <= 1)
            out.insert(v);
    return out;
}

DominationResult gamma2_bruteforce(const Graph& g, const Deadline& deadline) {
    const std::size_t n = g.order();
    if (n > kGamma2BruteforceMaxOrder)
        throw SizeGuardError("gamma2_bruteforce refuses order " + std::to_string(n) + " (limit " +
                             std::to_string(kGamma2BruteforceMaxOrder) + ")");
    std::vector<std::uint64_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= std::uint64_t{1} << v;
        adj[v] |= std::uint64_t{1} << u;
    }

    std::uint64_t checked = 0;
    for (std::size_t k = 0; k <= n; ++k) {
        std::uint64_t found = 0;
        bool ok = for_each_combination(n, k, [&](std::span<const std::size_t> idx) {
            if ((++checked & 0xffff) == 0)
                deadline.check();
            std::uint64_t d = 0;
            for (auto i : idx)
                d |= std::uint64_t{1} << i;
            for (std::size_t v = 0; v < n; ++v)
                if (!((d >> v) & 1U) && std::popcount(adj[v] & d) < 2)
                    return false;
            found = d;
            return true;
        });
        if (ok) {
            DominationResult r{k, VertexSet(n)};
            for (std::size_t v = 0; v < n; ++v)
                if ((found >> v) & 1U)
                    r.witness.insert(v);
            return r;
        }
    }
    // k = n always succeeds
    throw Error("unreachable: full vertex set is always 2-dominating");
}

namespace {

enum class Status : std::uint8_t { Free, In, Out };

// Branch-and-bound over one connected component (local labels 0..n-1).
//
// A node fixes some vertices In or Out; hits[v] counts In neighbors. A
// vertex's need is 0 once it is In or has two In neighbors, else 2 - hits.
// Choosing a Free vertex u lowers the total need by at most
// gain(u) = need(u) + #{w in N(u) : need(w) > 0}, and gains never grow as
// more vertices are chosen, so the fewest top gains covering the total need
// is an admissible lower bound on how many more vertices are required.
class ComponentSearch {
public:
    ComponentSearch(std::vector<std::vector<std::uint32_t>> adj, const Deadline& deadline)
        : adj_(std::move(adj)), n_(adj_.size()), deadline_(deadline) {}

    std::vector<std::uint32_t> solve() {
        Node root{std::vector<Status>(n_, Status::Free), std::vector<std::uint32_t>(n_, 0), 0};
        for (std::uint32_t v = 0; v < n_; ++v)
            if (adj_[v].size() <= 1)
                take(root, v);
        propagate(root);
        greedy(root);
        branch(std::move(root));
        return best_;
    }

private:
    struct Node {
        std::vector<Status> status;
        std::vector<std::uint32_t> hits;
        std::size_t chosen;
    };

    static constexpr std::size_t kInfeasible = std::numeric_limits<std::size_t>::max();

    std::uint32_t need(const Node& x, std::uint32_t v) const {
        if (x.status[v] == Status::In || x.hits[v] >= 2)
            return 0;
        return 2 - x.hits[v];
    }

    std::uint32_t free_neighbors(const Node& x, std::uint32_t v) const {
        std::uint32_t count = 0;
        for (auto w : adj_[v])
            count += x.status[w] == Status::Free;
        return count;
    }

    std::uint32_t gain(const Node& x, std::uint32_t u) const {
        std::uint32_t g = need(x, u);
        for (auto w : adj_[u])
            g += need(x, w) > 0;
        return g;
    }

    void take(Node& x, std::uint32_t v) const {
        x.status[v] = Status::In;
        ++x.chosen;
        for (auto w : adj_[v])
            ++x.hits[w];
    }

    // Unit propagation. Returns false when some vertex can no longer be
    // satisfied.
    bool propagate(Node& x) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::uint32_t v = 0; v < n_; ++v) {
                const auto nd = need(x, v);
                if (nd == 0)
                    continue;
                const auto avail = free_neighbors(x, v);
                if (x.status[v] == Status::Out) {
                    if (avail < nd)
                        return false;
                    if (avail == nd) {
                        for (auto w : adj_[v])
                            if (x.status[w] == Status::Free)
                                take(x, w);
                        changed = true;
                    }
                } else if (avail < nd) {
                    take(x, v);
                    changed = true;
                }
            }
        }
        return true;
    }

    std::size_t lower_bound(const Node& x, std::size_t& total_need) const {
        total_need = 0;
        for (std::uint32_t v = 0; v < n_; ++v)
            total_need += need(x, v);
        if (total_need == 0)
            return 0;
        std::vector<std::uint32_t> gains;
        for (std::uint32_t u = 0; u < n_; ++u)
            if (x.status[u] == Status::Free)
                gains.push_back(gain(x, u));
        std::sort(gains.begin(), gains.end(), std::greater<>());
        std::size_t covered = 0, k = 0;
        while (covered < total_need) {
            if (k == gains.size())
                return kInfeasible;
            covered += gains[k++];
        }
        return k;
    }

    void record(const Node& x) {
        best_.clear();
        for (std::uint32_t v = 0; v < n_; ++v)
            if (x.status[v] == Status::In)
                best_.push_back(v);
        best_size_ = x.chosen;
    }

    void greedy(Node x) {
        std::size_t total = 0;
        while (lower_bound(x, total) != 0) {
            std::uint32_t pick = 0, best_gain = 0;
            for (std::uint32_t u = 0; u < n_; ++u) {
                if (x.status[u] != Status::Free)
                    continue;
                auto g = gain(x, u);
                if (g > best_gain) {
                    best_gain = g;
                    pick = u;
                }
            }
            take(x, pick);
        }
        record(x);
    }

    void branch(Node x) {
        if ((++nodes_ & 0xff) == 0)
            deadline_.check();
        if (!propagate(x))
            return;
        std::size_t total = 0;
        const std::size_t lb = lower_bound(x, total);
        if (lb == kInfeasible || x.chosen + lb >= best_size_)
            return;
        if (total == 0) {
            record(x);
            return;
        }

        // most deficient vertex, fewest candidates on ties
        std::uint32_t pivot = 0, pivot_need = 0, pivot_options = 0;
        for (std::uint32_t v = 0; v < n_; ++v) {
            const auto nd = need(x, v);
            if (nd == 0)
                continue;
            const auto options = free_neighbors(x, v) + (x.status[v] == Status::Free ? 1U : 0U);
            if (nd > pivot_need || (nd == pivot_need && options < pivot_options)) {
                pivot = v;
                pivot_need = nd;
                pivot_options = options;
            }
        }

        std::vector<std::pair<std::uint32_t, std::uint32_t>> candidates; // (gain, vertex)
        if (x.status[pivot] == Status::Free)
            candidates.emplace_back(gain(x, pivot), pivot);
        for (auto w : adj_[pivot])
            if (x.status[w] == Status::Free)
                candidates.emplace_back(gain(x, w), w);
        std::stable_sort(candidates.begin(), candidates.end(),
                         [](const auto& a, const auto& b) { return a.first > b.first; });

        // The pivot needs at least one candidate: branch on which is the first
        // one chosen, excluding those before it.
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            Node child = x;
            for (std::size_t j = 0; j < i; ++j)
                child.status[candidates[j].second] = Status::Out;
            take(child, candidates[i].second);
            branch(std::move(child));
        }
    }

    std::vector<std::vector<std::uint32_t>> adj_;
    std::size_t n_;
    const Deadline& deadline_;
    std::vector<std::uint32_t> best_;
    std::size_t best_size_ = std::numeric_limits<std::size_t>::max();
    std::uint64_t nodes_ = 0;
};

} // namespace

DominationResult gamma2(const Graph& g, const Deadline& deadline) {
    DominationResult result{0, VertexSet(g.order())};
    std::vector<std::uint32_t> local(g.order(), 0);
    // gamma_2 is additive over connected components
    for (const auto& comp : components(g)) {
        const auto members = comp.members();
        for (std::size_t i = 0; i < members.size(); ++i)
            local[members[i]] = static_cast<std::uint32_t>(i);
        std::vector<std::vector<std::uint32_t>> adj(members.size());
        for (std::size_t i = 0; i < members.size(); ++i)
            for (Vertex w : g.neighbors(members[i]))
                adj[i].push_back(local[w]);

        ComponentSearch search(std::move(adj), deadline);
        for (auto v : search.solve())
            result.witness.insert(members[v]);
    }
    result.value = result.witness.size();
    return result;
}

} // namespace domstab
