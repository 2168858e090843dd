#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "domstab/suite.hpp"

namespace domstab {

enum class ReportFormat { Json, Csv, Markdown };

std::optional<ReportFormat> report_format_from_name(std::string_view name);

nlohmann::ordered_json to_json(const WitnessEntry& entry);
nlohmann::ordered_json to_json(const ClaimInstanceResult& row);

/// Deterministic rendering. JSON is the canonical schema: metadata, summaries,
/// then rows with keys claim_id, params, claimed, computed, verdict, witness.
/// CSV has one line per row under a fixed header. Markdown has one section
/// per claim with its summary table and failing instances.
std::string render_report(const ClaimReport& report, ReportFormat format);

} // namespace domstab
