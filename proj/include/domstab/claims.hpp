#pragma once

#include <cstddef>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "domstab/corpus.hpp"
#include "domstab/deadline.hpp"
#include "domstab/errors.hpp"
#include "domstab/solver.hpp"
#include "domstab/stability.hpp"

namespace domstab {

enum class ClaimKind { FormulaEquality, Inequality, Piecewise, Existential, UniversalOverCorpus };

std::string_view claim_kind_name(ClaimKind kind);

struct Claim {
    std::string id;        ///< C01 .. C33
    ClaimKind kind;
    std::string statement; ///< the relation under test, in plain notation
    std::string domain;    ///< parameter domain / instance source
    std::string anchor;    ///< location and quote the statement was taken from
};

/// All registered claims ordered by id.
std::span<const Claim> list_claims();

/// Throws UnknownClaimError.
const Claim& find_claim(std::string_view id);

enum class Verdict { Pass, Fail, Skipped };

std::string_view verdict_name(Verdict v);

/// One re-checkable certificate: a graph plus the set that certifies `value`
/// (a minimum 2-dominating set, or a minimum gamma_2-changing removal set).
struct WitnessEntry {
    std::string role;
    std::string graph6;
    std::string kind; ///< "dominating_set" or "removal"
    std::vector<Vertex> set;
    std::size_t value = 0;
};

struct ClaimInstanceResult {
    std::string claim_id;
    nlohmann::ordered_json params;
    std::string claimed;
    std::string computed;
    Verdict verdict = Verdict::Skipped;
    std::vector<WitnessEntry> witness; ///< nonempty exactly when verdict is Fail
};

/// The instance does not satisfy the claim's hypothesis (for example
/// min degree < 2 for the degree bounds). The suite omits such rows.
struct NotApplicable : DomainError {
    using DomainError::DomainError;
};

/// Memoizing front end to the solvers used by claim evaluation. Whenever a
/// graph fits an oracle guard, the brute-force result is computed as well,
/// compared with the fast solver, and returned; any disagreement throws
/// OracleMismatch. Thread-safe.
class Evaluator {
public:
    struct Options {
        std::size_t gamma2_oracle_max_order = kGamma2BruteforceMaxOrder;
        std::size_t st_oracle_max_order = kStabilityBruteforceMaxOrder;
    };

    Evaluator() = default;
    explicit Evaluator(Options options) : options_(options) {}

    const Options& options() const { return options_; }

    DominationResult gamma2(const Graph& g, const Deadline& deadline = {});
    StabilityResult st(const Graph& g, const Deadline& deadline = {});

private:
    Options options_;
    std::mutex mutex_;
    std::unordered_map<std::string, DominationResult> gamma2_cache_;
    std::unordered_map<std::string, StabilityResult> st_cache_;
};

/// Evaluates one claim at one instance. `params` uses the same shape the
/// suite emits: {"n": 6}, {"m": 2, "n": 3}, {"family": "tri_chain", "n": 3},
/// {"part": "gap_st", "M": 2, "max_n": 10}, {"graph": label, "graph6": g6}
/// or {"G": label, "G6": g6, "H": label, "H6": g6}.
///
/// Throws UnknownClaimError, DomainError for malformed or out-of-range params,
/// NotApplicable when the claim's hypothesis fails, BudgetExceeded, and
/// OracleMismatch. Never returns Skipped; the suite maps BudgetExceeded to it.
ClaimInstanceResult evaluate_claim(std::string_view id, const nlohmann::ordered_json& params,
                                   Evaluator& evaluator, const Deadline& deadline = {});

/// Instance inputs shared by all claims in one suite run.
struct ClaimInputs {
    std::size_t max_n = 10;
    std::vector<CorpusGraph> corpus;   ///< single graphs for universal claims
    std::vector<CorpusGraph> operands; ///< operands for the product claims
};

ClaimInputs default_claim_inputs(const CorpusConfig& config);

/// Parameter points the suite evaluates for claim `id`.
std::vector<nlohmann::ordered_json> claim_instances(std::string_view id, const ClaimInputs& inputs);

/// Key used to order rows within a claim: params rendered as key=value pairs
/// with integers zero-padded.
std::string params_sort_key(const nlohmann::ordered_json& params);

} // namespace domstab
