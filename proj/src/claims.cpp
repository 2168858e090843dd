#include "domstab/claims.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>

#include "domstab/families.hpp"
#include "domstab/graph6.hpp"
#include "domstab/products.hpp"

namespace domstab {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Registry

namespace {

const std::vector<Claim>& registry() {
    using K = ClaimKind;
    static const std::vector<Claim> claims{
        {"C01", K::FormulaEquality, "gamma2(P_n) = n/2 + 1 for even n, (n-1)/2 + 1 for odd n",
         "n = 4..max_n", "Observation on paths and cycles: \"the Path graph and the cycle graph\""},
        {"C02", K::FormulaEquality, "gamma2(C_n) = n/2 for even n, (n+1)/2 for odd n", "n = 4..max_n",
         "Observation on paths and cycles: \"the Path graph and the cycle graph\""},
        {"C03", K::FormulaEquality, "st(P_n) = 3", "n = 4..max_n",
         "Proposition on paths: \"By removing the three first consecutive\""},
        {"C04", K::Piecewise, "st(C_n) = 2 for odd n, 3 for even n", "n = 4..max_n",
         "Proposition on cycles: \"we need to remove three consecutive vertices\""},
        {"C05", K::FormulaEquality, "st(W_n) = 2, W_n = K_1 join C_{n-1}", "n = 5..max_n",
         "Proposition on wheels: \"By removing two adjacent vertices of $C_{n-1}$\""},
        {"C06", K::FormulaEquality, "gamma2(F_n) = n + 1", "n = 1..max_n",
         "Observation on friendship graphs: \"$\\gamma_2(F_n)=n+1$\""},
        {"C07", K::FormulaEquality, "gamma2(B_n) = n + 1", "n = 2..max_n",
         "Observation on book graphs: \"$\\gamma_2(B_n)=n+1$\""},
        {"C08", K::FormulaEquality, "st(F_n) = 1", "n = 2..max_n",
         "Proposition on friendship graphs: \"removing the central vertex\""},
        {"C09", K::FormulaEquality, "st(B_n) = 1", "n = 2..max_n",
         "Proposition on book graphs: \"removing two vertices $v_1,v_2$ of $B_n$\""},
        {"C10", K::FormulaEquality, "gamma2(K_n) = 2", "n = 2..max_n",
         "Observation on complete graphs: \"$\\gamma_2(K_n)=2$\""},
        {"C11", K::FormulaEquality, "gamma2(K_{1,n}) = n - 1 (star with n leaves)", "n = 3..max_n",
         "Observation on stars: \"$\\gamma_2(K_{1,n})=n-1$\""},
        {"C12", K::Piecewise, "gamma2(K_{m,n}) = n-1 if m = 1; m-1 if n = 1; 4 if m,n >= 2",
         "m,n >= 1, m + n <= max_n",
         "Observation on complete bipartite graphs: \"4, if m, n \\geq 2\""},
        {"C13", K::FormulaEquality, "st(K_n) = n - 1", "n = 2..max_n",
         "Proposition on complete graphs: \"$st_{\\gamma_2}(K_n)=n-1.$\""},
        {"C14", K::FormulaEquality, "st(K_{1,n}) = 1 (star with n leaves)", "n = 2..max_n",
         "Proposition on stars: \"$st_{\\gamma_2}(K_{1,n})=1.$\""},
        {"C15", K::Piecewise, "st(K_{m,n}) = 1 if m = 1 or n = 1; 2 if m,n >= 2",
         "m,n >= 1, m + n <= max_n",
         "Proposition on complete bipartite graphs: \"2, if m,n \\geq 2\""},
        {"C16", K::FormulaEquality, "gamma2(T_n) = gamma2(Q_n) = ceil((n+2)/2)",
         "tri_chain and para_chain, n = 1..max_n",
         "Observation on cactus chains: "
         "\"$\\gamma_2(T_n)=\\gamma_2(Q_n)=\\lceil\\frac{n+2}{2}\\rceil$\""},
        {"C17", K::FormulaEquality, "gamma2(O_n) = n + 1", "ortho_chain, n = 1..max_n",
         "Observation on cactus chains: \"$\\gamma_2(O_n)=n+1$\""},
        {"C18", K::FormulaEquality, "st(T_n) = st(Q_n) = st(O_n) = 2",
         "tri_chain, para_chain, ortho_chain, n = 2..max_n",
         "Proposition on cactus chains: "
         "\"$st_{\\gamma_2}(T_n)=st_{\\gamma_2}(Q_n)=st_{\\gamma_2}(O_n)=2$\""},
        {"C19", K::Existential,
         "helm_n: gamma2 = floor(n/2) + 1 and st = 1; subdivided wheel: gamma2 = n and st = 1; "
         "equal-st pairs with gamma2 gap >= M; equal-gamma2 pairs (P_4, K_m) with st gap >= M",
         "helm / subdivided_wheel n = 4..max_n; gaps M = 1..5 within max_n",
         "Theorem on gaps: \"is arbitrarily large\""},
        {"C20", K::UniversalOverCorpus, "st(G) <= st(G - v) + 1 for every vertex v",
         "corpus graphs with n >= 2",
         "Proposition on vertex deletion: \"$st_{\\gamma_2}(G) \\leq st_{\\gamma_2}(G - v) + 1$\""},
        {"C21", K::UniversalOverCorpus, "st(G) <= n - 1", "corpus graphs with n >= 2",
         "Theorem on upper bounds: \"$st_{\\gamma_2}(G) \\leq n - 1$\""},
        {"C22", K::UniversalOverCorpus, "induced K_{1,t} with t >= 3 implies st(G) <= n - t",
         "corpus graphs whose largest induced star has t >= 3",
         "Theorem on upper bounds: \"star graph $K_{1,t}$ as the induced subgraph\""},
        {"C23", K::UniversalOverCorpus,
         "delta = 2 implies gamma2 <= 2n/3; delta >= 3 implies gamma2 <= n/2",
         "corpus graphs with minimum degree >= 2",
         "Cited degree theorem: \"If the minimum degree $\\delta(G)$\""},
        {"C24", K::UniversalOverCorpus,
         "delta = 2 implies st <= n + 1 - 3 gamma2 / 2; delta >= 3 implies st <= n + 1 - 2 gamma2",
         "corpus graphs with minimum degree >= 2",
         "Corollary on degree bounds: \"$n + 1 -\\frac{3\\gamma_2(G)}{2}$\""},
        {"C25", K::UniversalOverCorpus, "st(G) = n - 1 implies gamma2(G) = 1",
         "corpus graphs with n >= 2 and st(G) = n - 1",
         "Corollary on extremal stability: \"then $\\gamma_2(G) = 1$\""},
        {"C26", K::UniversalOverCorpus, "gamma2(G) >= 2 implies st(G) <= n - gamma2(G) + 1",
         "corpus graphs with gamma2 >= 2",
         "Theorem on upper bounds: \"$st_{\\gamma_2}(G) \\leq n - \\gamma_2(G)+1.$\""},
        {"C27", K::UniversalOverCorpus,
         "gamma2(G) >= 2 and gamma2(co-G) >= 2 imply st(G) + st(co-G) <= 2n - 2",
         "corpus graphs with n >= 2 meeting both gamma2 hypotheses",
         "Theorem on complements: "
         "\"$st_{\\gamma_2}(G) + st_{\\gamma_2}(\\overline{G}) \\leq 2n-2$\""},
        {"C28", K::FormulaEquality, "gamma2(G join H) = min(gamma2(G), gamma2(H))",
         "operand pairs, each with at least one edge",
         "Theorem on joins: \"$\\min\\{\\gamma_2(G), \\gamma_2(H)\\}$\""},
        {"C29", K::Inequality, "st(G join H) <= min(st(G), st(H))",
         "operand pairs, each with at least one edge",
         "Theorem on joins: \"$\\min \\left\\{ st_{\\gamma_2}(G), \\, st_{\\gamma_2}(H) \\right\\}$\""},
        {"C30", K::Inequality, "gamma2(G[H]) <= |V(H)| gamma2(G)",
         "operand pairs, each with at least one edge",
         "Theorem on lexicographic products: \"$|V(H)| \\cdot \\gamma_2(G)$\""},
        {"C31", K::Piecewise,
         "st(G[H]) = st(G) if G has no isolated vertex, min(st(G), st(H)) otherwise",
         "operand pairs, each with at least one edge",
         "Corollary on lexicographic products: \"if G has at least one isolated vertex\""},
        {"C32", K::Piecewise,
         "gamma2(G o H) = |V(G)| + gamma2(H) if H has no universal vertex, |V(G)| otherwise",
         "operand pairs",
         "Theorem and Remark on coronas: \"$\\gamma_2(G\\circ H) =|V(G)|+\\gamma_2(H)$\" and "
         "\"contains a universal vertex\""},
        {"C33", K::FormulaEquality, "st(G o H) = 1", "operand pairs",
         "Corollary on coronas: \"$st_{\\gamma_2}(G\\circ H)=1 $\""},
    };
    return claims;
}

// ---------------------------------------------------------------------------
// Parameter access

std::size_t get_count(const json& params, const char* key) {
    auto it = params.find(key);
    if (it == params.end() || !it->is_number_integer() || it->get<std::int64_t>() < 0)
        throw DomainError(std::string("missing or non-integer parameter '") + key + "'");
    return it->get<std::size_t>();
}

std::string get_text(const json& params, const char* key) {
    auto it = params.find(key);
    if (it == params.end() || !it->is_string())
        throw DomainError(std::string("missing or non-string parameter '") + key + "'");
    return it->get<std::string>();
}

Graph get_graph(const json& params, const char* key) {
    try {
        return parse_graph6(get_text(params, key));
    } catch (const ParseError& e) {
        throw DomainError(std::string("parameter '") + key + "': " + e.what());
    }
}

void require_min(const char* what, std::size_t value, std::size_t bound) {
    if (value < bound)
        throw DomainError(std::string(what) + " must be >= " + std::to_string(bound) + ", got " +
                          std::to_string(value));
}

// ---------------------------------------------------------------------------
// Evaluation helpers

struct Context {
    Evaluator& ev;
    const Deadline& deadline;

    DominationResult gamma2(const Graph& g) { return ev.gamma2(g, deadline); }
    StabilityResult st(const Graph& g) { return ev.st(g, deadline); }
};

std::string num(std::size_t v) { return std::to_string(v); }

WitnessEntry dominating_entry(std::string role, const Graph& g, const DominationResult& r) {
    return {std::move(role), write_graph6(g), "dominating_set", r.witness.members(), r.value};
}

WitnessEntry removal_entry(std::string role, const Graph& g, const StabilityResult& r) {
    return {std::move(role), write_graph6(g), "removal", r.witness.members(), r.value};
}

ClaimInstanceResult make_result(std::string_view id, const json& params, std::string claimed,
                                std::string computed, bool pass,
                                std::vector<WitnessEntry> witness) {
    ClaimInstanceResult out;
    out.claim_id = std::string(id);
    out.params = params;
    out.claimed = std::move(claimed);
    out.computed = std::move(computed);
    out.verdict = pass ? Verdict::Pass : Verdict::Fail;
    if (!pass)
        out.witness = std::move(witness);
    return out;
}

ClaimInstanceResult gamma2_equals(std::string_view id, const json& params, const std::string& name,
                                  const Graph& g, std::size_t claimed, Context& cx) {
    auto r = cx.gamma2(g);
    return make_result(id, params, "gamma2(" + name + ") = " + num(claimed),
                       "gamma2(" + name + ") = " + num(r.value), r.value == claimed,
                       {dominating_entry(name, g, r)});
}

ClaimInstanceResult st_equals(std::string_view id, const json& params, const std::string& name,
                              const Graph& g, std::size_t claimed, Context& cx) {
    auto r = cx.st(g);
    return make_result(id, params, "st(" + name + ") = " + num(claimed),
                       "st(" + name + ") = " + num(r.value), r.value == claimed,
                       {removal_entry(name, g, r)});
}

std::size_t absdiff(std::size_t a, std::size_t b) { return a > b ? a - b : b - a; }

bool has_isolated_vertex(const Graph& g) {
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0)
            return true;
    return false;
}

// Chain families named in C16/C18.
Graph chain_graph(const std::string& family, std::size_t n, std::string& name) {
    if (family == "tri_chain") {
        name = "T_" + num(n);
        return tri_chain(n);
    }
    if (family == "para_chain") {
        name = "Q_" + num(n);
        return para_chain(n);
    }
    if (family == "ortho_chain") {
        name = "O_" + num(n);
        return ortho_chain(n);
    }
    throw DomainError("unknown chain family '" + family + "'");
}

// ---------------------------------------------------------------------------
// Per-claim evaluation

using EvalFn = std::function<ClaimInstanceResult(std::string_view, const json&, Context&)>;

ClaimInstanceResult eval_c19(std::string_view id, const json& p, Context& cx) {
    const auto part = get_text(p, "part");
    if (part == "helm" || part == "subdivided_wheel") {
        const auto n = get_count(p, "n");
        require_min("n", n, 4);
        const bool helm = part == "helm";
        const Graph g = helm ? helm_graph(n) : subdivided_wheel_graph(n);
        const std::string name = (helm ? "helm_" : "subdivided_wheel_") + num(n);
        const std::size_t claimed_gamma2 = helm ? n / 2 + 1 : n;
        auto d = cx.gamma2(g);
        auto s = cx.st(g);
        return make_result(id, p,
                           "gamma2(" + name + ") = " + num(claimed_gamma2) + ", st(" + name + ") = 1",
                           "gamma2(" + name + ") = " + num(d.value) + ", st(" + name +
                               ") = " + num(s.value),
                           d.value == claimed_gamma2 && s.value == 1,
                           {dominating_entry(name, g, d), removal_entry(name, g, s)});
    }

    const auto gap = get_count(p, "M");
    const auto max_n = get_count(p, "max_n");
    require_min("M", gap, 1);

    if (part == "gap_gamma2") {
        require_min("max_n", max_n, 4);
        // best equal-st size so far: (gap, n); falls back to the largest n
        std::size_t best_gap = 0, best_n = max_n;
        bool any_equal = false;
        for (std::size_t n = 4; n <= max_n; ++n) {
            auto sh = cx.st(helm_graph(n)).value;
            auto ss = cx.st(subdivided_wheel_graph(n)).value;
            if (sh != ss)
                continue;
            auto d = absdiff(cx.gamma2(helm_graph(n)).value, cx.gamma2(subdivided_wheel_graph(n)).value);
            if (!any_equal || d > best_gap) {
                best_gap = d;
                best_n = n;
            }
            any_equal = true;
            if (d >= gap)
                break;
        }
        const bool pass = any_equal && best_gap >= gap;
        const Graph h = helm_graph(best_n), w = subdivided_wheel_graph(best_n);
        auto dh = cx.gamma2(h), dw = cx.gamma2(w);
        auto sh = cx.st(h), sw = cx.st(w);
        std::string computed =
            any_equal ? "largest gamma2 gap with equal st: " + num(best_gap) + " at n = " + num(best_n) +
                            " (gamma2 " + num(dh.value) + " vs " + num(dw.value) + ", st " +
                            num(sh.value) + ")"
                      : "no n <= " + num(max_n) + " with st(helm_n) = st(subdivided_wheel_n)";
        return make_result(id, p,
                           "some n <= " + num(max_n) +
                               " has st(helm_n) = st(subdivided_wheel_n) and gamma2 gap >= " + num(gap),
                           computed, pass,
                           {dominating_entry("helm_" + num(best_n), h, dh),
                            dominating_entry("subdivided_wheel_" + num(best_n), w, dw),
                            removal_entry("helm_" + num(best_n), h, sh),
                            removal_entry("subdivided_wheel_" + num(best_n), w, sw)});
    }

    if (part == "gap_st") {
        require_min("max_n", max_n, 2);
        const Graph p4 = path_graph(4);
        auto d4 = cx.gamma2(p4);
        auto s4 = cx.st(p4);
        std::size_t best_gap = 0, best_m = max_n;
        bool any_equal = false;
        for (std::size_t m = 2; m <= max_n; ++m) {
            const Graph k = complete_graph(m);
            if (cx.gamma2(k).value != d4.value)
                continue;
            auto d = absdiff(cx.st(k).value, s4.value);
            if (!any_equal || d > best_gap) {
                best_gap = d;
                best_m = m;
            }
            any_equal = true;
            if (d >= gap)
                break;
        }
        const bool pass = any_equal && best_gap >= gap;
        const Graph k = complete_graph(best_m);
        auto dk = cx.gamma2(k);
        auto sk = cx.st(k);
        std::string computed =
            any_equal ? "largest st gap with equal gamma2: " + num(best_gap) + " at m = " + num(best_m) +
                            " (st(P_4) = " + num(s4.value) + ", st(K_" + num(best_m) +
                            ") = " + num(sk.value) + ")"
                      : "no m <= " + num(max_n) + " with gamma2(K_m) = gamma2(P_4)";
        return make_result(id, p,
                           "some m <= " + num(max_n) +
                               " has gamma2(P_4) = gamma2(K_m) and st gap >= " + num(gap),
                           computed, pass,
                           {dominating_entry("P_4", p4, d4), dominating_entry("K_" + num(best_m), k, dk),
                            removal_entry("P_4", p4, s4), removal_entry("K_" + num(best_m), k, sk)});
    }
    throw DomainError("unknown C19 part '" + part + "'");
}

struct PairOperands {
    Graph g, h;
};

PairOperands get_pair(const json& p, bool need_edges) {
    PairOperands out{get_graph(p, "G6"), get_graph(p, "H6")};
    if (out.g.order() == 0 || out.h.order() == 0)
        throw DomainError("operands must have at least one vertex");
    if (need_edges && (out.g.size() == 0 || out.h.size() == 0))
        throw DomainError("operands must have at least one edge");
    return out;
}

Graph get_corpus_graph(const json& p, std::size_t min_order) {
    Graph g = get_graph(p, "graph6");
    require_min("graph order", g.order(), min_order);
    return g;
}

const std::unordered_map<std::string, EvalFn>& evaluators() {
    static const std::unordered_map<std::string, EvalFn> table{
        {"C01",
         [](std::string_view id, const json& p, Context& cx) {
             auto n = get_count(p, "n");
             require_min("n", n, 4);
             return gamma2_equals(id, p, "P_" + num(n), path_graph(n), n % 2 == 0 ? n / 2 + 1 : (n - 1) / 2 + 1, cx);
         }},
        {"C02",
         [](std::string_view id, const json& p, Context& cx) {
             auto n = get_count(p, "n");
             require_min("n", n, 4);
             return gamma2_equals(id, p, "C_" + num(n), cycle_graph(n), n % 2 == 0 ? n / 2 : (n + 1) / 2, cx);
         }},
        {"C03",
         [](std::string_view id, const json& p, Context& cx) {
             auto n = get_count(p, "n");
             require_min("n", n, 4);
             return st_equals(id, p, "P_" + num(n), path_graph(n), 3, cx);
         }},
        {"C04",
         [](std::string_view id, const json& p, Context& cx) {
             auto n = get_count(p, "n");
             require_min("n", n, 4);
             return st_equals(id, p, "C_" + num(n), cycle_graph(n), n % 2 == 1 ? 2 : 3, cx);
         }},
        {"C05",
         [](std::string_view id, const json& p, Context& cx) {
             auto n = get_count(p, "n");
             require_min("n", n, 5);
             return st_equals(id, p, "W_" + num(n), wheel_graph(n), 2, cx);
         }},
        {"C06",
         [](std::string_view id, const json& p, Context& cx) {
             auto n = get_count(p, "n");
             require_min("n", n, 1);
             return gamma2_equals(id, p, "F_" + num(n), friendship_graph(n), n + 1, cx);
         }},
        {"C07",
         [](std::string_view id, const json& p, Context& cx) {
             auto n = get_count(p, "n");
             require_min("n", n, 2);
             return gamma2_equals(id, p, "B_" + num(n), book_graph(n), n + 1, cx);
         }},
        {"C08",
         [](std::string_view id, const json& p, Context& cx) {
             auto n = get_count(p, "n");
             require_min("n", n, 2);
             return st_equals(id, p, "F_" + num(n), friendship_graph(n), 1, cx);
         }},
        {"C09",
         [](std::string_view id, const json& p, Context& cx) {
             auto n = get_count(p, "n");
             require_min("n", n, 2);
             return st_equals(id, p, "B_" + num(n), book_graph(n), 1, cx);
         }},
        {"C10",
         [](std::string_view id, const json& p, Context& cx) {
             auto n = get_count(p, "n");
             require_min("n", n, 2);
             return gamma2_equals(id, p, "K_" + num(n), complete_graph(n), 2, cx);
         }},
        {"C11",
         [](std::string_view id, const json& p, Context& cx) {
             auto n = get_count(p, "n");
             require_min("n", n, 3);
             return gamma2_equals(id, p, "K_{1," + num(n) + "}", star_graph(n), n - 1, cx);
         }},
        {"C12",
         [](std::string_view id, const json& p, Context& cx) {
             auto m = get_count(p, "m"), n = get_count(p, "n");
             require_min("m", m, 1);
             require_min("n", n, 1);
             const std::size_t claimed = m == 1 ? n - 1 : n == 1 ? m - 1 : 4;
             return gamma2_equals(id, p, "K_{" + num(m) + "," + num(n) + "}",
                                  complete_bipartite_graph(m, n), claimed, cx);
         }},
        {"C13",
         [](std::string_view id, const json& p, Context& cx) {
             auto n = get_count(p, "n");
             require_min("n", n, 2);
             return st_equals(id, p, "K_" + num(n), complete_graph(n), n - 1, cx);
         }},
        {"C14",
         [](std::string_view id, const json& p, Context& cx) {
             auto n = get_count(p, "n");
             require_min("n", n, 2);
             return st_equals(id, p, "K_{1," + num(n) + "}", star_graph(n), 1, cx);
         }},
        {"C15",
         [](std::string_view id, const json& p, Context& cx) {
             auto m = get_count(p, "m"), n = get_count(p, "n");
             require_min("m", m, 1);
             require_min("n", n, 1);
             const std::size_t claimed = (m == 1 || n == 1) ? 1 : 2;
             return st_equals(id, p, "K_{" + num(m) + "," + num(n) + "}",
                              complete_bipartite_graph(m, n), claimed, cx);
         }},
        {"C16",
         [](std::string_view id, const json& p, Context& cx) {
             auto family = get_text(p, "family");
             auto n = get_count(p, "n");
             require_min("n", n, 1);
             if (family != "tri_chain" && family != "para_chain")
                 throw DomainError("C16 covers tri_chain and para_chain only");
             std::string name;
             Graph g = chain_graph(family, n, name);
             return gamma2_equals(id, p, name, g, (n + 3) / 2, cx);
         }},
        {"C17",
         [](std::string_view id, const json& p, Context& cx) {
             auto n = get_count(p, "n");
             require_min("n", n, 1);
             return gamma2_equals(id, p, "O_" + num(n), ortho_chain(n), n + 1, cx);
         }},
        {"C18",
         [](std::string_view id, const json& p, Context& cx) {
             auto family = get_text(p, "family");
             auto n = get_count(p, "n");
             require_min("n", n, 2);
             std::string name;
             Graph g = chain_graph(family, n, name);
             return st_equals(id, p, name, g, 2, cx);
         }},
        {"C19", eval_c19},
        {"C20",
         [](std::string_view id, const json& p, Context& cx) {
             Graph g = get_corpus_graph(p, 2);
             auto s = cx.st(g);
             std::size_t bound = std::numeric_limits<std::size_t>::max();
             Vertex arg = 0;
             StabilityResult sub;
             for (Vertex v = 0; v < g.order(); ++v) {
                 auto r = cx.st(delete_vertices(g, VertexSet(g.order(), {v})));
                 if (r.value + 1 < bound) {
                     bound = r.value + 1;
                     arg = v;
                     sub = r;
                 }
             }
             const Graph gv = delete_vertices(g, VertexSet(g.order(), {arg}));
             return make_result(id, p, "st(G) <= min_v st(G-v) + 1 = " + num(bound) + " (v = " + num(arg) + ")",
                                "st(G) = " + num(s.value), s.value <= bound,
                                {removal_entry("G", g, s), removal_entry("G-" + num(arg), gv, sub)});
         }},
        {"C21",
         [](std::string_view id, const json& p, Context& cx) {
             Graph g = get_corpus_graph(p, 2);
             auto s = cx.st(g);
             return make_result(id, p, "st(G) <= n - 1 = " + num(g.order() - 1),
                                "st(G) = " + num(s.value), s.value <= g.order() - 1,
                                {removal_entry("G", g, s)});
         }},
        {"C22",
         [](std::string_view id, const json& p, Context& cx) {
             Graph g = get_corpus_graph(p, 2);
             const auto t = max_induced_star(g);
             if (t < 3)
                 throw NotApplicable("largest induced star has t = " + num(t) + " < 3");
             auto s = cx.st(g);
             // t <= n - 1, so n - t >= 1
             const auto bound = g.order() - t;
             return make_result(id, p, "st(G) <= n - t = " + num(bound) + " (t = " + num(t) + ")",
                                "st(G) = " + num(s.value), s.value <= bound, {removal_entry("G", g, s)});
         }},
        {"C23",
         [](std::string_view id, const json& p, Context& cx) {
             Graph g = get_corpus_graph(p, 1);
             const auto delta = min_degree(g);
             if (delta < 2)
                 throw NotApplicable("minimum degree " + num(delta) + " < 2");
             auto d = cx.gamma2(g);
             const auto n = g.order();
             const bool pass = delta == 2 ? 3 * d.value <= 2 * n : 2 * d.value <= n;
             const std::string claimed = delta == 2 ? "gamma2 <= 2n/3 = " + num(2 * n) + "/3 (delta = 2)"
                                                    : "gamma2 <= n/2 = " + num(n) + "/2 (delta = " + num(delta) + ")";
             return make_result(id, p, claimed, "gamma2 = " + num(d.value), pass,
                                {dominating_entry("G", g, d)});
         }},
        {"C24",
         [](std::string_view id, const json& p, Context& cx) {
             Graph g = get_corpus_graph(p, 1);
             const auto delta = min_degree(g);
             if (delta < 2)
                 throw NotApplicable("minimum degree " + num(delta) + " < 2");
             auto d = cx.gamma2(g);
             auto s = cx.st(g);
             const auto n = static_cast<long long>(g.order());
             const auto gm = static_cast<long long>(d.value);
             const auto sv = static_cast<long long>(s.value);
             bool pass;
             std::string claimed;
             if (delta == 2) {
                 // st <= n + 1 - 3 gamma2 / 2, compared over the integers
                 pass = 2 * sv <= 2 * n + 2 - 3 * gm;
                 claimed = "st <= n + 1 - 3*gamma2/2 = (" + std::to_string(2 * n + 2 - 3 * gm) + ")/2 (delta = 2)";
             } else {
                 pass = sv <= n + 1 - 2 * gm;
                 claimed = "st <= n + 1 - 2*gamma2 = " + std::to_string(n + 1 - 2 * gm) + " (delta = " + num(delta) + ")";
             }
             return make_result(id, p, claimed, "st = " + num(s.value) + ", gamma2 = " + num(d.value), pass,
                                {removal_entry("G", g, s), dominating_entry("G", g, d)});
         }},
        {"C25",
         [](std::string_view id, const json& p, Context& cx) {
             Graph g = get_corpus_graph(p, 2);
             auto s = cx.st(g);
             if (s.value != g.order() - 1)
                 throw NotApplicable("st(G) = " + num(s.value) + " != n - 1");
             auto d = cx.gamma2(g);
             return make_result(id, p, "gamma2(G) = 1 (since st(G) = n - 1 = " + num(s.value) + ")",
                                "gamma2(G) = " + num(d.value), d.value == 1,
                                {removal_entry("G", g, s), dominating_entry("G", g, d)});
         }},
        {"C26",
         [](std::string_view id, const json& p, Context& cx) {
             Graph g = get_corpus_graph(p, 1);
             auto d = cx.gamma2(g);
             if (d.value < 2)
                 throw NotApplicable("gamma2(G) = " + num(d.value) + " < 2");
             auto s = cx.st(g);
             const auto bound = g.order() + 1 - d.value;
             return make_result(id, p, "st(G) <= n - gamma2 + 1 = " + num(bound),
                                "st(G) = " + num(s.value) + ", gamma2 = " + num(d.value), s.value <= bound,
                                {removal_entry("G", g, s), dominating_entry("G", g, d)});
         }},
        {"C27",
         [](std::string_view id, const json& p, Context& cx) {
             Graph g = get_corpus_graph(p, 2);
             Graph co = complement(g);
             auto dg = cx.gamma2(g), dc = cx.gamma2(co);
             if (dg.value < 2 || dc.value < 2)
                 throw NotApplicable("gamma2 hypothesis fails");
             auto sg = cx.st(g), sc = cx.st(co);
             const auto bound = 2 * g.order() - 2;
             return make_result(id, p, "st(G) + st(co-G) <= 2n - 2 = " + num(bound),
                                "st(G) + st(co-G) = " + num(sg.value) + " + " + num(sc.value),
                                sg.value + sc.value <= bound,
                                {removal_entry("G", g, sg), removal_entry("co-G", co, sc)});
         }},
        {"C28",
         [](std::string_view id, const json& p, Context& cx) {
             auto [g, h] = get_pair(p, true);
             Graph j = join(g, h);
             auto dg = cx.gamma2(g), dh = cx.gamma2(h), dj = cx.gamma2(j);
             const auto claimed = std::min(dg.value, dh.value);
             return make_result(id, p, "gamma2(G join H) = min(" + num(dg.value) + ", " + num(dh.value) + ") = " + num(claimed),
                                "gamma2(G join H) = " + num(dj.value), dj.value == claimed,
                                {dominating_entry("G join H", j, dj), dominating_entry("G", g, dg),
                                 dominating_entry("H", h, dh)});
         }},
        {"C29",
         [](std::string_view id, const json& p, Context& cx) {
             auto [g, h] = get_pair(p, true);
             Graph j = join(g, h);
             auto sg = cx.st(g), sh = cx.st(h), sj = cx.st(j);
             const auto bound = std::min(sg.value, sh.value);
             return make_result(id, p, "st(G join H) <= min(" + num(sg.value) + ", " + num(sh.value) + ") = " + num(bound),
                                "st(G join H) = " + num(sj.value), sj.value <= bound,
                                {removal_entry("G join H", j, sj), removal_entry("G", g, sg),
                                 removal_entry("H", h, sh)});
         }},
        {"C30",
         [](std::string_view id, const json& p, Context& cx) {
             auto [g, h] = get_pair(p, true);
             Graph l = lexicographic(g, h);
             auto dg = cx.gamma2(g), dl = cx.gamma2(l);
             const auto bound = h.order() * dg.value;
             return make_result(id, p, "gamma2(G[H]) <= |V(H)| gamma2(G) = " + num(bound),
                                "gamma2(G[H]) = " + num(dl.value), dl.value <= bound,
                                {dominating_entry("G[H]", l, dl), dominating_entry("G", g, dg)});
         }},
        {"C31",
         [](std::string_view id, const json& p, Context& cx) {
             auto [g, h] = get_pair(p, true);
             Graph l = lexicographic(g, h);
             auto sg = cx.st(g), sh = cx.st(h), sl = cx.st(l);
             const bool isolated = has_isolated_vertex(g);
             const auto claimed = isolated ? std::min(sg.value, sh.value) : sg.value;
             const std::string rule = isolated ? "min(st(G), st(H))" : "st(G)";
             return make_result(id, p, "st(G[H]) = " + rule + " = " + num(claimed),
                                "st(G[H]) = " + num(sl.value), sl.value == claimed,
                                {removal_entry("G[H]", l, sl), removal_entry("G", g, sg),
                                 removal_entry("H", h, sh)});
         }},
        {"C32",
         [](std::string_view id, const json& p, Context& cx) {
             auto [g, h] = get_pair(p, false);
             Graph c = corona(g, h);
             auto dh = cx.gamma2(h), dc = cx.gamma2(c);
             const bool universal = has_universal_vertex(h);
             const auto claimed = universal ? g.order() : g.order() + dh.value;
             const std::string rule = universal ? "|V(G)| (H has a universal vertex)"
                                                : "|V(G)| + gamma2(H)";
             return make_result(id, p, "gamma2(G o H) = " + rule + " = " + num(claimed),
                                "gamma2(G o H) = " + num(dc.value), dc.value == claimed,
                                {dominating_entry("G o H", c, dc), dominating_entry("H", h, dh)});
         }},
        {"C33",
         [](std::string_view id, const json& p, Context& cx) {
             auto [g, h] = get_pair(p, false);
             Graph c = corona(g, h);
             return st_equals(id, p, "G o H", c, 1, cx);
         }},
    };
    return table;
}

std::string padded_number(std::uint64_t v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%08llu", static_cast<unsigned long long>(v));
    return buf;
}

} // namespace

std::string_view claim_kind_name(ClaimKind kind) {
    switch (kind) {
    case ClaimKind::FormulaEquality: return "formula-equality";
    case ClaimKind::Inequality: return "inequality";
    case ClaimKind::Piecewise: return "piecewise";
    case ClaimKind::Existential: return "existential";
    case ClaimKind::UniversalOverCorpus: return "universal-over-corpus";
    }
    return "unknown";
}

std::string_view verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Skipped: return "SKIPPED";
    }
    return "UNKNOWN";
}

std::span<const Claim> list_claims() { return registry(); }

const Claim& find_claim(std::string_view id) {
    for (const auto& c : registry())
        if (c.id == id)
            return c;
    throw UnknownClaimError("unknown claim id '" + std::string(id) + "'");
}

// ---------------------------------------------------------------------------
// Evaluator

DominationResult Evaluator::gamma2(const Graph& g, const Deadline& deadline) {
    const auto key = write_graph6(g);
    {
        std::lock_guard lock(mutex_);
        if (auto it = gamma2_cache_.find(key); it != gamma2_cache_.end())
            return it->second;
    }
    DominationResult out = domstab::gamma2(g, deadline);
    if (!is_2_dominating(g, out.witness) || out.witness.size() != out.value)
        throw OracleMismatch("solver returned an invalid witness for " + key);
    if (g.order() <= options_.gamma2_oracle_max_order) {
        auto oracle = gamma2_bruteforce(g, deadline);
        if (oracle.value != out.value)
            throw OracleMismatch("gamma2 disagreement on " + key + ": solver " + std::to_string(out.value) +
                                 ", oracle " + std::to_string(oracle.value));
        out = std::move(oracle);
    }
    std::lock_guard lock(mutex_);
    return gamma2_cache_.emplace(key, std::move(out)).first->second;
}

StabilityResult Evaluator::st(const Graph& g, const Deadline& deadline) {
    const auto key = write_graph6(g);
    {
        std::lock_guard lock(mutex_);
        if (auto it = st_cache_.find(key); it != st_cache_.end())
            return it->second;
    }
    StabilityResult out = domstab::st(g, deadline);
    if (g.order() <= options_.st_oracle_max_order) {
        auto oracle = st_bruteforce(g, deadline);
        if (oracle.value != out.value || oracle.gamma2_before != out.gamma2_before)
            throw OracleMismatch("st disagreement on " + key + ": solver " + std::to_string(out.value) +
                                 ", oracle " + std::to_string(oracle.value));
        out = std::move(oracle);
    }
    std::lock_guard lock(mutex_);
    return st_cache_.emplace(key, std::move(out)).first->second;
}

// ---------------------------------------------------------------------------

ClaimInstanceResult evaluate_claim(std::string_view id, const json& params, Evaluator& evaluator,
                                   const Deadline& deadline) {
    find_claim(id);
    const auto& table = evaluators();
    auto it = table.find(std::string(id));
    if (it == table.end())
        throw UnknownClaimError("claim '" + std::string(id) + "' has no evaluator");
    if (!params.is_object())
        throw DomainError("claim parameters must be a JSON object");
    Context cx{evaluator, deadline};
    return it->second(id, params, cx);
}

ClaimInputs default_claim_inputs(const CorpusConfig& config) {
    ClaimInputs inputs;
    inputs.max_n = config.max_n;
    inputs.corpus = default_corpus(config);
    inputs.operands = small_graph_classes(4);
    return inputs;
}

std::vector<json> claim_instances(std::string_view id, const ClaimInputs& inputs) {
    find_claim(id);
    const auto max_n = inputs.max_n;
    std::vector<json> out;
    auto range = [&](std::size_t from) {
        for (std::size_t n = from; n <= max_n; ++n)
            out.push_back(json{{"n", n}});
    };
    auto bipartite = [&] {
        for (std::size_t m = 1; m <= max_n; ++m)
            for (std::size_t n = 1; m + n <= max_n; ++n)
                out.push_back(json{{"m", m}, {"n", n}});
    };
    auto chains = [&](std::initializer_list<const char*> families, std::size_t from) {
        for (const char* f : families)
            for (std::size_t n = from; n <= max_n; ++n)
                out.push_back(json{{"family", f}, {"n", n}});
    };
    auto corpus = [&](auto&& accept) {
        for (const auto& cg : inputs.corpus)
            if (accept(cg.graph))
                out.push_back(json{{"graph", cg.label}, {"graph6", write_graph6(cg.graph)}});
    };
    auto pairs = [&](bool need_edges, auto&& product_order) {
        for (const auto& a : inputs.operands)
            for (const auto& b : inputs.operands) {
                if (need_edges && (a.graph.size() == 0 || b.graph.size() == 0))
                    continue;
                if (product_order(a.graph.order(), b.graph.order()) > 2 * max_n)
                    continue;
                out.push_back(json{{"G", a.label},
                                   {"G6", write_graph6(a.graph)},
                                   {"H", b.label},
                                   {"H6", write_graph6(b.graph)}});
            }
    };
    auto at_least = [](std::size_t n) { return [n](const Graph& g) { return g.order() >= n; }; };
    auto min_degree_2 = [](const Graph& g) { return g.order() >= 1 && min_degree(g) >= 2; };

    const std::string key(id);
    if (key == "C01" || key == "C02" || key == "C03" || key == "C04")
        range(4);
    else if (key == "C05")
        range(5);
    else if (key == "C06" || key == "C17")
        range(1);
    else if (key == "C07" || key == "C08" || key == "C09" || key == "C10" || key == "C13" || key == "C14")
        range(2);
    else if (key == "C11")
        range(3);
    else if (key == "C12" || key == "C15")
        bipartite();
    else if (key == "C16")
        chains({"tri_chain", "para_chain"}, 1);
    else if (key == "C18")
        chains({"tri_chain", "para_chain", "ortho_chain"}, 2);
    else if (key == "C19") {
        for (const char* part : {"helm", "subdivided_wheel"})
            for (std::size_t n = 4; n <= max_n; ++n)
                out.push_back(json{{"part", part}, {"n", n}});
        for (const char* part : {"gap_gamma2", "gap_st"}) {
            if (max_n < (std::string_view(part) == "gap_st" ? 2u : 4u))
                continue;
            for (std::size_t m = 1; m <= 5; ++m)
                out.push_back(json{{"part", part}, {"M", m}, {"max_n", max_n}});
        }
    } else if (key == "C20" || key == "C21" || key == "C25" || key == "C27")
        corpus(at_least(2));
    else if (key == "C22")
        corpus([](const Graph& g) { return g.order() >= 2 && max_induced_star(g) >= 3; });
    else if (key == "C23" || key == "C24")
        corpus(min_degree_2);
    else if (key == "C26")
        corpus(at_least(1));
    else if (key == "C28" || key == "C29")
        pairs(true, [](std::size_t a, std::size_t b) { return a + b; });
    else if (key == "C30" || key == "C31")
        pairs(true, [](std::size_t a, std::size_t b) { return a * b; });
    else if (key == "C32" || key == "C33")
        pairs(false, [](std::size_t a, std::size_t b) { return a * (1 + b); });
    return out;
}

std::string params_sort_key(const json& params) {
    std::string key;
    for (const auto& [k, v] : params.items()) {
        key += k;
        key += '=';
        if (v.is_number_integer() && v.get<std::int64_t>() >= 0)
            key += padded_number(v.get<std::uint64_t>());
        else if (v.is_string())
            key += v.get<std::string>();
        else
            key += v.dump();
        key += ';';
    }
    return key;
}

} // namespace domstab
