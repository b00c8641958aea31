#include "curvess/rational.hpp"

#include "curvess/error.hpp"

#include <cctype>

namespace curvess {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::Syntax: return "Syntax";
    case ErrorKind::UndeclaredVariable: return "UndeclaredVariable";
    case ErrorKind::BadExponent: return "BadExponent";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotMPrimary: return "NotMPrimary";
    case ErrorKind::NotInIdeal: return "NotInIdeal";
    case ErrorKind::NonIsolated: return "NonIsolated";
    case ErrorKind::WitnessOrderInsufficient: return "WitnessOrderInsufficient";
    case ErrorKind::MissingWeights: return "MissingWeights";
    case ErrorKind::DegenerateBranch: return "DegenerateBranch";
    case ErrorKind::NoConductor: return "NoConductor";
    case ErrorKind::NotTransverseAtOrder: return "NotTransverseAtOrder";
    case ErrorKind::MilnorMismatch: return "MilnorMismatch";
    case ErrorKind::MissingBranchData: return "MissingBranchData";
    case ErrorKind::NonMinimalPresentation: return "NonMinimalPresentation";
    case ErrorKind::NotCompleteIntersection: return "NotCompleteIntersection";
    case ErrorKind::PlanarNoObstruction: return "PlanarNoObstruction";
    case ErrorKind::NonPlanarInput: return "NonPlanarInput";
    case ErrorKind::UnanalyzedSingularity: return "UnanalyzedSingularity";
    case ErrorKind::Schema: return "Schema";
    case ErrorKind::Io: return "Io";
    case ErrorKind::UnknownFormat: return "UnknownFormat";
    }
    return "Unknown";
}

std::string to_string(const Rational& q)
{
    return q.get_str(10);
}

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    std::size_t i = 0;
    if (i < s.size() && s[i] == '-')
        ++i;
    const std::size_t num_begin = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        ++i;
    if (i == num_begin)
        throw Error(ErrorKind::Syntax, "malformed rational '" + s + "'");
    if (i < s.size()) {
        if (s[i] != '/')
            throw Error(ErrorKind::Syntax, "malformed rational '" + s + "'");
        const std::size_t den_begin = ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            ++i;
        if (i == den_begin || i != s.size())
            throw Error(ErrorKind::Syntax, "malformed rational '" + s + "'");
        Integer den(s.substr(den_begin), 10);
        if (den == 0)
            throw Error(ErrorKind::Syntax, "zero denominator in '" + s + "'");
        Rational q(Integer(s.substr(0, den_begin - 1), 10), den);
        q.canonicalize();
        return q;
    }
    return Rational(Integer(s, 10));
}

std::int64_t to_int64(const Rational& q)
{
    if (!is_integer(q) || !q.get_num().fits_slong_p())
        throw Error(ErrorKind::InvalidArgument, "value " + to_string(q) + " is not a small integer");
    return q.get_num().get_si();
}

} // namespace curvess
