#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace curvess {

enum class ErrorKind {
    Syntax,
    UndeclaredVariable,
    BadExponent,
    UnknownVariable,
    ArityMismatch,
    ZeroPolynomial,
    InvalidArgument,
    NotMPrimary,
    NotInIdeal,
    NonIsolated,
    WitnessOrderInsufficient,
    MissingWeights,
    DegenerateBranch,
    NoConductor,
    NotTransverseAtOrder,
    MilnorMismatch,
    MissingBranchData,
    NonMinimalPresentation,
    NotCompleteIntersection,
    PlanarNoObstruction,
    NonPlanarInput,
    UnanalyzedSingularity,
    Schema,
    Io,
    UnknownFormat,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `kind()` lets callers map errors onto
/// exit codes without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Parse failure carrying the 0-based character offset into the source text.
class SyntaxError : public Error {
public:
    SyntaxError(ErrorKind kind, std::size_t position, const std::string& message)
        : Error(kind, message + " at position " + std::to_string(position)),
          position_(position), detail_(message) {}

    std::size_t position() const noexcept { return position_; }
    /// The message without the position suffix.
    const std::string& detail() const noexcept { return detail_; }

private:
    std::size_t position_;
    std::string detail_;
};

} // namespace curvess
