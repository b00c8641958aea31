#include "curvess/corpus.hpp"

#include "curvess/error.hpp"
#include "curvess/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace curvess {

ParsedCurve load_embedded(std::string_view name)
{
    for (const EmbeddedDocument& d : embedded_corpus())
        if (name == d.name)
            return parse_curve(parse_curve_document(d.content));
    throw Error(ErrorKind::InvalidArgument, "no corpus document named '" + std::string(name) + "'");
}

namespace {

std::size_t count(const std::vector<Check>& checks, CheckStatus s)
{
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [s](const Check& c) { return c.status == s; }));
}

} // namespace

CorpusSummary run_corpus(const ReportOptions& options)
{
    CorpusSummary out;
    for (const EmbeddedDocument& d : embedded_corpus()) {
        try {
            const Report rep = analyze(parse_curve(parse_curve_document(d.content)), options);
            const std::string verdict(to_string(rep.overall_verdict()));
            const std::size_t gp = count(rep.checks, CheckStatus::Pass);
            const std::size_t gf = count(rep.checks, CheckStatus::Fail);
            const std::size_t gs = count(rep.checks, CheckStatus::Skipped);
            if (rep.singularities.empty()) {
                out.rows.push_back({d.name, rep.label, std::nullopt, std::nullopt, std::nullopt, verdict, gp, gf, gs, {}});
            }
            for (std::size_t i = 0; i < rep.singularities.size(); ++i) {
                const SingularityReport& s = rep.singularities[i];
                CorpusRow row{d.name, s.label, std::nullopt, std::nullopt, std::nullopt, verdict, 0, 0, 0, {}};
                if (s.plane) {
                    row.mu = s.plane->invariants.mu;
                    row.tau = s.plane->invariants.tau;
                    row.qh = s.plane->invariants.qh_by_saito;
                }
                row.passed = count(s.checks, CheckStatus::Pass);
                row.failed = count(s.checks, CheckStatus::Fail);
                row.skipped = count(s.checks, CheckStatus::Skipped);
                // Curve-level checks are attributed to the first row.
                if (i == 0) {
                    row.passed += gp;
                    row.failed += gf;
                    row.skipped += gs;
                }
                out.rows.push_back(std::move(row));
            }
            out.any_failed = out.any_failed || rep.any_failed();
        } catch (const Error& e) {
            CorpusRow row;
            row.document = d.name;
            row.label = d.name;
            row.verdict = "error";
            row.failed = 1;
            row.error = std::string(to_string(e.kind())) + ": " + e.what();
            out.rows.push_back(std::move(row));
            out.any_failed = true;
        }
    }
    return out;
}

std::string render_corpus(const CorpusSummary& summary, std::string_view format)
{
    auto opt = [](const auto& o) { return o ? std::to_string(*o) : std::string("-"); };
    if (format == "json") {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const CorpusRow& r : summary.rows) {
            nlohmann::ordered_json j;
            j["document"] = r.document;
            j["label"] = r.label;
            j["mu"] = r.mu ? nlohmann::ordered_json(*r.mu) : nlohmann::ordered_json(nullptr);
            j["tau"] = r.tau ? nlohmann::ordered_json(*r.tau) : nlohmann::ordered_json(nullptr);
            j["qh"] = r.qh ? nlohmann::ordered_json(*r.qh) : nlohmann::ordered_json(nullptr);
            j["verdict"] = r.verdict;
            j["passed"] = r.passed;
            j["failed"] = r.failed;
            j["skipped"] = r.skipped;
            if (!r.error.empty())
                j["error"] = r.error;
            rows.push_back(std::move(j));
        }
        nlohmann::ordered_json j;
        j["rows"] = std::move(rows);
        j["status"] = summary.any_failed ? "fail" : "pass";
        return j.dump(2) + "\n";
    }
    if (format != "text")
        throw Error(ErrorKind::UnknownFormat, "unknown format '" + std::string(format) + "'");

    std::ostringstream os;
    os << std::left << std::setw(26) << "document" << std::setw(30) << "point" << std::right << std::setw(5)
       << "mu" << std::setw(5) << "tau" << std::setw(5) << "qh" << "  " << std::left << std::setw(19) << "verdict"
       << "checks\n";
    for (const CorpusRow& r : summary.rows) {
        std::string label = r.label.size() > 28 ? r.label.substr(0, 25) + "..." : r.label;
        os << std::left << std::setw(26) << r.document << std::setw(30) << label << std::right << std::setw(5)
           << opt(r.mu) << std::setw(5) << opt(r.tau) << std::setw(5)
           << (r.qh ? (*r.qh ? "yes" : "no") : "-") << "  " << std::left << std::setw(19) << r.verdict
           << r.passed << " pass, " << r.failed << " fail, " << r.skipped << " skip";
        if (!r.error.empty())
            os << "  " << r.error;
        os << "\n";
    }
    os << "status: " << (summary.any_failed ? "fail" : "pass") << "\n";
    return os.str();
}

} // namespace curvess
