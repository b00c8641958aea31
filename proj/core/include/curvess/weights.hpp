#pragma once

#include "curvess/poly.hpp"

#include <optional>

namespace curvess {

/// Positive weights normalized so that f has weighted degree 1.
struct Weights {
    Rational w1;
    Rational w2;

    bool operator==(const Weights&) const = default;
};

/// Searches (w1, w2) > 0 with a·w1 + b·w2 = 1 on every support monomial
/// u^a v^b of a two-variable f. When the support does not pin the weights
/// down, the point minimizing |w1 - w2| (then w1) is returned. Only detects
/// weighted homogeneity in the given coordinates.
///
/// Throws Error(ZeroPolynomial) for f = 0 and Error(ArityMismatch) unless f
/// has exactly two ambient variables.
std::optional<Weights> weight_feasibility(const Poly& f);

/// f - w1·u·f_u - w2·v·f_v, which vanishes exactly for a valid weight system.
Poly euler_defect(const Poly& f, const Weights& w);

inline bool satisfies_euler(const Poly& f, const Weights& w)
{
    return euler_defect(f, w).is_zero();
}

/// Weighted degree a·w1 + b·w2 of u^a v^b.
Rational weighted_degree(const Monomial& m, const Weights& w);

} // namespace curvess
