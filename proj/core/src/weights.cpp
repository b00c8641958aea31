#include "curvess/weights.hpp"

#include "curvess/error.hpp"

#include <set>

namespace curvess {

std::optional<Weights> weight_feasibility(const Poly& f)
{
    if (f.arity() != 2)
        throw Error(ErrorKind::ArityMismatch, "weight search needs exactly two variables");
    if (f.is_zero())
        throw Error(ErrorKind::ZeroPolynomial, "weight search on the zero polynomial");

    std::set<std::pair<std::uint32_t, std::uint32_t>> support;
    for (const auto& [m, c] : f.terms())
        support.emplace(m[0], m[1]);
    if (support.count({0, 0}) != 0)
        return std::nullopt;

    // Look for two support points spanning Q^2; they determine the weights.
    const auto first = *support.begin();
    std::optional<std::pair<std::uint32_t, std::uint32_t>> second;
    for (const auto& pt : support) {
        const long det = static_cast<long>(first.first) * pt.second
                         - static_cast<long>(first.second) * pt.first;
        if (det != 0) {
            second = pt;
            break;
        }
    }

    Weights w;
    if (second) {
        // Cramer on [a1 b1; a2 b2] (w1, w2)^T = (1, 1)^T.
        const Rational a1 = first.first, b1 = first.second;
        const Rational a2 = second->first, b2 = second->second;
        const Rational det = a1 * b2 - b1 * a2;
        w.w1 = (b2 - b1) / det;
        w.w2 = (a1 - a2) / det;
    } else {
        // All support points lie on one ray; they must coincide for a solution.
        if (support.size() > 1)
            return std::nullopt;
        const auto [a, b] = first;
        if (a == 0) {
            w.w2 = Rational(1, b);
            w.w1 = w.w2;
        } else if (b == 0) {
            w.w1 = Rational(1, a);
            w.w2 = w.w1;
        } else {
            // The line a·w1 + b·w2 = 1 meets the diagonal inside the open quadrant.
            w.w1 = Rational(1, a + b);
            w.w2 = w.w1;
        }
    }
    w.w1.canonicalize();
    w.w2.canonicalize();
    if (w.w1 <= 0 || w.w2 <= 0)
        return std::nullopt;
    for (const auto& [a, b] : support)
        if (a * w.w1 + b * w.w2 != 1)
            return std::nullopt;
    return w;
}

Poly euler_defect(const Poly& f, const Weights& w)
{
    if (f.arity() != 2)
        throw Error(ErrorKind::ArityMismatch, "Euler relation needs exactly two variables");
    const Poly u = Poly::variable(f.vars(), 0);
    const Poly v = Poly::variable(f.vars(), 1);
    return f - w.w1 * (u * diff(f, 0)) - w.w2 * (v * diff(f, 1));
}

Rational weighted_degree(const Monomial& m, const Weights& w)
{
    return m[0] * w.w1 + m[1] * w.w2;
}

} // namespace curvess
