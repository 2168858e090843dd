#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "domstab/families.hpp"
#include "domstab/graph6.hpp"
#include "domstab/report.hpp"
#include "domstab/solver.hpp"
#include "domstab/stability.hpp"
#include "domstab/suite.hpp"

namespace domstab {

namespace {

constexpr std::size_t kMaxVerifyN = 40;

struct UsageError : Error {
    using Error::Error;
};

std::string comma_list(const VertexSet& s) {
    std::string out;
    s.for_each([&](Vertex v) {
        if (!out.empty())
            out += ',';
        out += std::to_string(v);
    });
    return out;
}

std::string trim(const std::string& line) {
    const auto first = line.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        return {};
    const auto last = line.find_last_not_of(" \t\r\n");
    return line.substr(first, last - first + 1);
}

std::size_t parse_count(const std::string& text) {
    std::size_t value = 0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end)
        throw UsageError("expected a non-negative integer, got '" + text + "'");
    return value;
}

// Applies `handle` to every nonblank graph6 line; bad lines are reported and
// processing continues.
template <typename Handle>
int for_each_graph(std::istream& in, std::ostream& err, Handle handle) {
    int status = kExitOk;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto text = trim(line);
        if (text.empty())
            continue;
        try {
            handle(text, parse_graph6(text));
        } catch (const Error& e) {
            err << "line " << line_no << ": " << e.what() << "\n";
            status = kExitInputError;
        }
    }
    return status;
}

int with_input(const std::string& path, std::istream& in, std::ostream& err,
               const std::function<int(std::istream&)>& body) {
    if (path.empty() || path == "-")
        return body(in);
    std::ifstream file(path);
    if (!file) {
        err << "cannot open input file '" << path << "'\n";
        return kExitInputError;
    }
    return body(file);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Exact 2-domination number, 2-domination stability and claim verification",
                 "domstab"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "Generate a family member");
    std::string family;
    std::vector<std::string> gen_params;
    std::string gen_format = "g6";
    gen->add_option("family", family, "Family name")->required();
    gen->add_option("params", gen_params, "Family parameters");
    gen->add_option("--format", gen_format, "Output format")
        ->check(CLI::IsMember({"g6", "dot"}));

    auto* g2 = app.add_subcommand("gamma2", "2-domination number of graph6 lines");
    std::string g2_input;
    g2->add_option("--input", g2_input, "Input file (default stdin)");

    auto* stab = app.add_subcommand("stability", "2-domination stability of graph6 lines");
    std::string st_input;
    bool use_oracle = false;
    stab->add_option("--input", st_input, "Input file (default stdin)");
    stab->add_flag("--oracle", use_oracle, "Use exhaustive enumeration");

    auto* verify = app.add_subcommand("verify", "Run the claims verification suite");
    std::vector<std::string> claim_ids{"all"};
    std::size_t max_n = 10;
    std::uint64_t seed = CorpusConfig{}.seed;
    std::string report_name = "json";
    std::string out_path;
    std::int64_t budget_ms = SuiteConfig{}.budget.count();
    verify->add_option("--claims", claim_ids, "'all' or comma-separated claim ids")->delimiter(',');
    verify->add_option("--max-n", max_n, "Largest family parameter / graph order")
        ->check(CLI::Range(std::size_t{1}, kMaxVerifyN));
    verify->add_option("--seed", seed, "Seed for the random corpus");
    verify->add_option("--report", report_name, "Report format")
        ->check(CLI::IsMember({"json", "csv", "markdown"}));
    verify->add_option("--out", out_path, "Report file (default stdout)");
    verify->add_option("--budget-ms", budget_ms, "Time budget per instance in milliseconds")
        ->check(CLI::NonNegativeNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsageError;
    }

    try {
        if (gen->parsed()) {
            auto f = family_from_name(family);
            if (!f)
                throw UsageError("unknown family '" + family + "'");
            FamilySpec spec{*f, {}};
            for (const auto& p : gen_params)
                spec.params.push_back(parse_count(p));
            const Graph g = generate(spec);
            out << (gen_format == "dot" ? write_dot(g) : write_graph6(g) + "\n");
            return kExitOk;
        }

        if (g2->parsed()) {
            return with_input(g2_input, in, err, [&](std::istream& src) {
                return for_each_graph(src, err, [&](const std::string& text, const Graph& g) {
                    const auto r = gamma2(g);
                    out << text << " gamma2=" << r.value << " witness=" << comma_list(r.witness) << "\n";
                });
            });
        }

        if (stab->parsed()) {
            return with_input(st_input, in, err, [&](std::istream& src) {
                return for_each_graph(src, err, [&](const std::string& text, const Graph& g) {
                    const auto r = use_oracle ? st_bruteforce(g) : st(g);
                    out << text << " st=" << r.value << " removal=" << comma_list(r.witness)
                        << " gamma2_before=" << r.gamma2_before << " gamma2_after=" << r.gamma2_after
                        << "\n";
                });
            });
        }

        if (verify->parsed()) {
            SuiteConfig config;
            config.max_n = max_n;
            config.seed = seed;
            config.budget = std::chrono::milliseconds(budget_ms);
            if (!(claim_ids.size() == 1 && claim_ids[0] == "all")) {
                for (const auto& id : claim_ids) {
                    const auto t = trim(id);
                    if (t.empty())
                        continue;
                    find_claim(t);
                    config.claims.push_back(t);
                }
                if (config.claims.empty())
                    throw UsageError("no claim ids given");
            }
            const auto format = *report_format_from_name(report_name);
            const auto report = run_suite(config);
            const auto text = render_report(report, format);
            if (out_path.empty()) {
                out << text;
            } else {
                std::ofstream file(out_path, std::ios::binary);
                if (!file || !(file << text)) {
                    err << "cannot write report to '" << out_path << "'\n";
                    return kExitInputError;
                }
            }
            std::size_t pass = 0, fail = 0, skipped = 0;
            for (const auto& s : report.summaries) {
                pass += s.pass;
                fail += s.fail;
                skipped += s.skipped;
            }
            out << "claims=" << report.summaries.size() << " instances=" << report.rows.size()
                << " pass=" << pass << " fail=" << fail << " skipped=" << skipped << "\n";
            return kExitOk;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsageError;
    } catch (const UnknownClaimError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsageError;
    } catch (const OracleMismatch& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitOracleMismatch;
    } catch (const DomainError& e) {
        // invalid family parameters
        err << "error: " << e.what() << "\n";
        return kExitUsageError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitUsageError;
}

} // namespace domstab
