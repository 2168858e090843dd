#include "domstab/report.hpp"

#include <sstream>

namespace domstab {

using json = nlohmann::ordered_json;

namespace {

constexpr std::size_t kMarkdownFailRows = 20;

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string md_cell(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '|')
            out += "\\|";
        else if (c == '\n')
            out += ' ';
        else
            out += c;
    }
    return out;
}

std::string set_text(const std::vector<Vertex>& set) {
    std::string out = "{";
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(set[i]);
    }
    return out + "}";
}

json summary_json(const ClaimSummary& s) {
    json j{{"claim_id", s.claim_id},
           {"instances", s.instances},
           {"pass", s.pass},
           {"fail", s.fail},
           {"skipped", s.skipped}};
    j["first_counterexample"] = s.first_counterexample ? json(*s.first_counterexample) : json(nullptr);
    return j;
}

std::string render_json(const ClaimReport& report) {
    json rows = json::array();
    for (const auto& r : report.rows)
        rows.push_back(to_json(r));
    json summaries = json::array();
    for (const auto& s : report.summaries)
        summaries.push_back(summary_json(s));
    json doc{{"metadata", report.metadata}, {"summaries", summaries}, {"rows", rows}};
    return doc.dump(2) + "\n";
}

std::string render_csv(const ClaimReport& report) {
    std::string out = "claim_id,params,claimed,computed,verdict,witness\n";
    for (const auto& r : report.rows) {
        const auto j = to_json(r);
        out += csv_field(r.claim_id) + "," + csv_field(r.params.dump()) + "," + csv_field(r.claimed) +
               "," + csv_field(r.computed) + "," + std::string(verdict_name(r.verdict)) + "," +
               csv_field(j["witness"].dump()) + "\n";
    }
    return out;
}

void markdown_row(std::ostringstream& os, const ClaimInstanceResult& r) {
    os << "| " << md_cell(r.params.dump()) << " | " << md_cell(r.claimed) << " | "
       << md_cell(r.computed) << " | " << verdict_name(r.verdict) << " |\n";
}

std::string render_markdown(const ClaimReport& report) {
    std::ostringstream os;
    os << "# Claims verification report\n\n## Run\n\n";
    for (const auto& [k, v] : report.metadata.items()) {
        if (k == "conventions")
            continue;
        os << "- **" << k << "**: " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
    if (auto it = report.metadata.find("conventions"); it != report.metadata.end()) {
        os << "\n## Conventions\n\n";
        for (const auto& [k, v] : it->items())
            os << "- **" << k << "**: " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }

    os << "\n## Summary\n\n| claim | kind | instances | pass | fail | skipped |\n"
          "|---|---|---|---|---|---|\n";
    for (const auto& s : report.summaries)
        os << "| " << s.claim_id << " | " << claim_kind_name(find_claim(s.claim_id).kind) << " | "
           << s.instances << " | " << s.pass << " | " << s.fail << " | " << s.skipped << " |\n";

    for (const auto& s : report.summaries) {
        const auto& claim = find_claim(s.claim_id);
        os << "\n## " << claim.id << "\n\n"
           << "- statement: " << claim.statement << "\n"
           << "- kind: " << claim_kind_name(claim.kind) << "\n"
           << "- domain: " << claim.domain << "\n"
           << "- anchor: " << claim.anchor << "\n"
           << "- instances: " << s.instances << ", pass: " << s.pass << ", fail: " << s.fail
           << ", skipped: " << s.skipped << "\n";
        if (!s.first_counterexample) {
            os << "\nNo counterexample found.\n";
            continue;
        }
        const auto& first = report.rows[*s.first_counterexample];
        os << "\n### First counterexample\n\n"
           << "- params: `" << first.params.dump() << "`\n"
           << "- claimed: " << first.claimed << "\n"
           << "- computed: " << first.computed << "\n";
        for (const auto& w : first.witness)
            os << "- witness " << w.role << " (`" << w.graph6 << "`): " << w.kind << " "
               << set_text(w.set) << ", value " << w.value << "\n";

        os << "\n### Failing instances\n\n| params | claimed | computed | verdict |\n|---|---|---|---|\n";
        std::size_t shown = 0;
        for (std::size_t i = *s.first_counterexample; i < report.rows.size(); ++i) {
            const auto& r = report.rows[i];
            if (r.claim_id != s.claim_id)
                break;
            if (r.verdict != Verdict::Fail)
                continue;
            if (shown == kMarkdownFailRows) {
                os << "\n" << (s.fail - shown) << " further failing instances omitted.\n";
                break;
            }
            markdown_row(os, r);
            ++shown;
        }
    }
    return os.str();
}

} // namespace

std::optional<ReportFormat> report_format_from_name(std::string_view name) {
    if (name == "json")
        return ReportFormat::Json;
    if (name == "csv")
        return ReportFormat::Csv;
    if (name == "markdown" || name == "md")
        return ReportFormat::Markdown;
    return std::nullopt;
}

json to_json(const WitnessEntry& entry) {
    return json{{"role", entry.role},
                {"graph6", entry.graph6},
                {"kind", entry.kind},
                {"set", entry.set},
                {"value", entry.value}};
}

json to_json(const ClaimInstanceResult& row) {
    json j{{"claim_id", row.claim_id},
           {"params", row.params},
           {"claimed", row.claimed},
           {"computed", row.computed},
           {"verdict", std::string(verdict_name(row.verdict))}};
    if (row.verdict == Verdict::Fail) {
        json w = json::array();
        for (const auto& e : row.witness)
            w.push_back(to_json(e));
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

std::string render_report(const ClaimReport& report, ReportFormat format) {
    switch (format) {
    case ReportFormat::Json: return render_json(report);
    case ReportFormat::Csv: return render_csv(report);
    case ReportFormat::Markdown: return render_markdown(report);
    }
    throw DomainError("unknown report format");
}

} // namespace domstab
