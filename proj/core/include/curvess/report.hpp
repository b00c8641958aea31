#pragma once

#include "curvess/branch.hpp"
#include "curvess/document.hpp"
#include "curvess/lci.hpp"
#include "curvess/plane.hpp"
#include "curvess/spectral.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace curvess {

enum class CheckStatus { Pass, Fail, Skipped };
std::string_view to_string(CheckStatus s);

struct Check {
    std::string name;
    CheckStatus status = CheckStatus::Skipped;
    std::string detail;
};

struct PlaneAnalysis {
    LocalInvariants invariants;
    std::optional<Weights> weights; // given in the document or found in these coordinates
    bool weights_given = false;
    std::size_t kernel_dim = 0;
    std::size_t cokernel_dim = 0;
    std::optional<TailMap> tail;
    std::optional<TailMap> scalar_tail;
    std::optional<DeltaReport> delta;
    std::optional<AssertedData> asserted;
};

struct LciAnalysis {
    bool complete_intersection = false;
    std::optional<std::size_t> e;
    std::optional<ObstructionReport> obstruction;
    std::optional<bool> parametrization_ok;
    std::optional<std::size_t> delta;
    std::optional<std::size_t> r;
    bool delta_asserted = false;
};

struct SingularityReport {
    std::string label;
    std::string kind; // "plane" or "lci"
    std::vector<std::string> equations;
    std::optional<PlaneAnalysis> plane;
    std::optional<LciAnalysis> lci;
    std::vector<Check> checks;
    std::vector<std::string> notes;
};

struct ReportOptions {
    AnalysisOptions analysis;
    std::pair<int, int> hc_window{-2, 4};
    int tail_window = 4;
    /// Recompute colengths, tail matrices and delta at raised orders.
    bool stabilization = true;
};

struct Report {
    std::string label;
    std::size_t genus = 0;
    std::vector<SingularityReport> singularities;
    std::optional<CurveModel> model; // absent when some point lies outside the lci setting
    std::optional<GlobalInvariants> global;
    std::optional<VerdictReport> verdict;
    std::optional<SSPage> e1;
    std::optional<SSPage> e2;
    std::optional<HCPages> hc;
    std::vector<Check> checks;
    std::vector<std::string> notes;

    bool any_failed() const;
    Verdict overall_verdict() const;
};

/// Runs every local and global analysis with its cross-checks. NonIsolated and
/// NotMPrimary propagate; other failures become failed checks.
Report analyze(const ParsedCurve& curve, const ReportOptions& options = {});

/// "text" or "json"; numbers carry [computed], [asserted-input] or [symbolic].
std::string render_report(const Report& report, std::string_view format);

struct CorpusRow {
    std::string document;
    std::string label;
    std::optional<std::size_t> mu;
    std::optional<std::size_t> tau;
    std::optional<bool> qh;
    std::string verdict;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
    std::string error;
};

struct CorpusSummary {
    std::vector<CorpusRow> rows; // one per singular point (one per curve if smooth)
    bool any_failed = false;
};

/// Analyzes every embedded corpus document.
CorpusSummary run_corpus(const ReportOptions& options = {});
std::string render_corpus(const CorpusSummary& summary, std::string_view format);

/// Parses an embedded document by file name; InvalidArgument if unknown.
ParsedCurve load_embedded(std::string_view name);

} // namespace curvess
