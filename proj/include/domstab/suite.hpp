#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "domstab/claims.hpp"

namespace domstab {

struct SuiteConfig {
    std::size_t max_n = 10;
    std::uint64_t seed = CorpusConfig{}.seed;
    std::chrono::milliseconds budget{30000}; ///< per instance
    std::vector<std::string> claims;         ///< empty means all
    std::size_t threads = 0;                 ///< 0: DOMSTAB_THREADS, else hardware
    std::size_t random_count = CorpusConfig{}.random_count;
    Evaluator::Options oracle;
};

struct ClaimSummary {
    std::string claim_id;
    std::size_t instances = 0;
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t skipped = 0;
    std::optional<std::size_t> first_counterexample; ///< index into ClaimReport::rows
};

struct ClaimReport {
    nlohmann::ordered_json metadata;
    std::vector<ClaimInstanceResult> rows; ///< sorted by (claim id, params_sort_key)
    std::vector<ClaimSummary> summaries;   ///< one per selected claim, by id
};

/// Worker count from DOMSTAB_THREADS, falling back to hardware concurrency.
std::size_t default_thread_count();

/// Runs every selected claim on its instances. Claim failures and budget
/// overruns become FAIL / SKIPPED rows; OracleMismatch propagates.
/// UnknownClaimError for unregistered ids.
ClaimReport run_suite(const SuiteConfig& config);

/// Builds summaries and sorts rows; used by run_suite and by tests that
/// assemble reports by hand.
void finalize_report(ClaimReport& report, const std::vector<std::string>& claim_ids);

} // namespace domstab
