#include "domstab/suite.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>

namespace domstab {

using json = nlohmann::ordered_json;

namespace {

struct Task {
    std::string claim_id;
    json params;
};

std::vector<std::string> selected_ids(const SuiteConfig& config) {
    std::vector<std::string> ids;
    if (config.claims.empty()) {
        for (const auto& c : list_claims())
            ids.push_back(c.id);
        return ids;
    }
    for (const auto& id : config.claims)
        ids.push_back(find_claim(id).id);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

json conventions() {
    return json{
        {"star", "K_{1,n} is the star with n leaves (order n + 1); the order-n reading "
                 "K_{1,n-1} is not used"},
        {"removal", "st counts arbitrary vertex subsets whose deletion changes gamma2, "
                    "including subsets that disconnect the graph"},
        {"empty_graph", "gamma2 of the graph with no vertices is 0; st of it is undefined"},
        {"cactus_chains", "T_n: n triangles glued at shared vertices along a path a_1..a_{n+1}; "
                          "Q_n: n 4-cycles a_i x_i a_{i+1} y_i; O_n: n 4-cycles a_i a_{i+1} x_i y_i"},
        {"corona", "G o H: one copy of H per vertex v of G, v joined to every vertex of its copy"},
        {"universal_vertex", "K_1 has a universal vertex"},
        {"nonempty", "nonempty operands have at least one edge"},
        {"corona_remark", "the universal-vertex case gamma2(G o H) = n does not fix n; it is read as "
                          "n = |V(G)|"},
        {"degree_bounds", "rational bounds compared exactly over the integers"},
    };
}

} // namespace

std::size_t default_thread_count() {
    if (const char* env = std::getenv("DOMSTAB_THREADS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return v;
    }
    const auto hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

void finalize_report(ClaimReport& report, const std::vector<std::string>& claim_ids) {
    std::vector<std::pair<std::pair<std::string, std::string>, std::size_t>> order;
    order.reserve(report.rows.size());
    for (std::size_t i = 0; i < report.rows.size(); ++i)
        order.push_back({{report.rows[i].claim_id, params_sort_key(report.rows[i].params)}, i});
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<ClaimInstanceResult> rows;
    rows.reserve(order.size());
    for (const auto& [key, i] : order)
        rows.push_back(std::move(report.rows[i]));
    report.rows = std::move(rows);

    report.summaries.clear();
    for (const auto& id : claim_ids) {
        ClaimSummary s;
        s.claim_id = id;
        for (std::size_t i = 0; i < report.rows.size(); ++i) {
            const auto& row = report.rows[i];
            if (row.claim_id != id)
                continue;
            ++s.instances;
            switch (row.verdict) {
            case Verdict::Pass: ++s.pass; break;
            case Verdict::Fail:
                ++s.fail;
                if (!s.first_counterexample)
                    s.first_counterexample = i;
                break;
            case Verdict::Skipped: ++s.skipped; break;
            }
        }
        report.summaries.push_back(std::move(s));
    }
}

ClaimReport run_suite(const SuiteConfig& config) {
    const auto ids = selected_ids(config);

    CorpusConfig corpus_config;
    corpus_config.max_n = config.max_n;
    corpus_config.seed = config.seed;
    corpus_config.random_count = config.random_count;
    const ClaimInputs inputs = default_claim_inputs(corpus_config);

    std::vector<Task> tasks;
    for (const auto& id : ids)
        for (auto& params : claim_instances(id, inputs))
            tasks.push_back({id, std::move(params)});

    Evaluator evaluator(config.oracle);
    std::vector<std::optional<ClaimInstanceResult>> results(tasks.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (;;) {
            const auto i = next.fetch_add(1);
            if (i >= tasks.size())
                return;
            {
                std::lock_guard lock(failure_mutex);
                if (failure)
                    return;
            }
            const auto& task = tasks[i];
            try {
                const auto deadline = Deadline::after(config.budget);
                deadline.check();
                results[i] = evaluate_claim(task.claim_id, task.params, evaluator, deadline);
            } catch (const NotApplicable&) {
                // hypothesis fails: no row
            } catch (const BudgetExceeded&) {
                ClaimInstanceResult r;
                r.claim_id = task.claim_id;
                r.params = task.params;
                r.claimed = "not evaluated";
                r.computed = "budget of " + std::to_string(config.budget.count()) + " ms exceeded";
                r.verdict = Verdict::Skipped;
                results[i] = std::move(r);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };

    const auto threads = std::max<std::size_t>(
        1, std::min(config.threads ? config.threads : default_thread_count(), tasks.size()));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }
    if (failure)
        std::rethrow_exception(failure);

    ClaimReport report;
    for (auto& r : results)
        if (r)
            report.rows.push_back(std::move(*r));
    finalize_report(report, ids);

    report.metadata = json{
        {"tool", "domstab"},
        {"max_n", config.max_n},
        {"seed", config.seed},
        {"budget_ms", config.budget.count()},
        {"claims", ids},
        {"corpus", describe_corpus(corpus_config)},
        {"operands", "one graph per isomorphism class on 1..4 vertices (18 graphs); product "
                     "instances limited to order <= 2 max_n"},
        {"oracle_guards",
         {{"gamma2_max_order", config.oracle.gamma2_oracle_max_order},
          {"st_max_order", config.oracle.st_oracle_max_order}}},
        {"conventions", conventions()},
    };
    return report;
}

} // namespace domstab
