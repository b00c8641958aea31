#pragma once

#include "curvess/lci.hpp"
#include "curvess/plane.hpp"

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace curvess {

struct AssertedData {
    std::size_t delta = 0;
    std::size_t r = 0;
    std::string provenance;

    bool operator==(const AssertedData&) const = default;
};

struct BranchDocument {
    std::vector<std::string> images; // expressions in t, one per variable
    std::optional<std::string> equation;

    bool operator==(const BranchDocument&) const = default;
};

/// One singular point as written in a curve document.
struct SingularityDocument {
    std::string kind; // "plane" or "lci"
    std::optional<std::string> label;
    std::vector<std::string> variables;
    // plane
    std::string f;
    std::optional<std::array<std::string, 2>> weights;
    std::vector<BranchDocument> branches;
    // lci
    std::vector<std::string> equations;
    std::optional<std::vector<std::string>> parametrization;
    std::optional<bool> lci; // declared complete-intersection flag
    // both
    std::optional<AssertedData> asserted;

    bool operator==(const SingularityDocument&) const = default;
};

struct CurveDocument {
    std::string label;
    std::size_t genus = 0;
    std::string notes;
    std::vector<SingularityDocument> singularities;

    bool operator==(const CurveDocument&) const = default;
};

/// Schema-checked parse. Errors: Schema (with a field path such as
/// "singularities[0].variables"), Syntax for malformed JSON.
CurveDocument parse_curve_document(std::string_view json_text);
CurveDocument load_curve_document(const std::filesystem::path& path);

/// Canonical JSON text; parse_curve_document(serialize(d)) == d.
std::string serialize(const CurveDocument& doc);

using Geometry = std::variant<PlaneSingularity, LciPresentation>;

struct ParsedSingularity {
    std::string label;
    Geometry geometry;
    std::optional<AssertedData> asserted;
    std::optional<bool> declared_lci;
};

struct ParsedCurve {
    CurveDocument document;
    std::vector<ParsedSingularity> singularities;
};

/// Parses every expression. An lci entry in two variables with one equation
/// becomes a plane singularity. Expression errors are SyntaxError with the
/// field path prepended.
ParsedCurve parse_curve(const CurveDocument& doc);

/// load_curve_document followed by parse_curve.
ParsedCurve load_curve(const std::filesystem::path& path);

} // namespace curvess
