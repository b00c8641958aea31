#pragma once

#include "curvess/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace curvess {

/// Orders unknown names: kappa, c, k_v first, anything else alphabetically.
struct UnknownOrder {
    bool operator()(const std::string& a, const std::string& b) const;
};

/// constant + sum coeff·unknown with exact coefficients.
class AffineExpr {
public:
    using Terms = std::map<std::string, Rational, UnknownOrder>;

    AffineExpr() = default;
    AffineExpr(const Rational& c) : constant_(c) {} // NOLINT: implicit by design
    AffineExpr(long c) : constant_(c) {}            // NOLINT
    AffineExpr(int c) : constant_(c) {}             // NOLINT
    AffineExpr(unsigned long c) : constant_(c) {}   // NOLINT
    static AffineExpr unknown(const std::string& name);

    const Rational& constant() const { return constant_; }
    const Terms& terms() const { return terms_; }
    Rational coefficient(const std::string& name) const;
    bool is_constant() const { return terms_.empty(); }

    AffineExpr& operator+=(const AffineExpr& o);
    AffineExpr& operator-=(const AffineExpr& o);
    AffineExpr& operator*=(const Rational& c);
    friend AffineExpr operator+(AffineExpr a, const AffineExpr& b) { return a += b; }
    friend AffineExpr operator-(AffineExpr a, const AffineExpr& b) { return a -= b; }
    friend AffineExpr operator*(AffineExpr a, const Rational& c) { return a *= c; }
    AffineExpr operator-() const { return AffineExpr(*this) *= -1; }

    /// Replaces `name` by `value`.
    AffineExpr substituted(const std::string& name, const AffineExpr& value) const;

    bool operator==(const AffineExpr&) const = default;

private:
    Rational constant_{0};
    Terms terms_;
};

/// "kappa + 1 - c"; unknowns first in canonical order, then the constant.
std::string to_string(const AffineExpr& e);

/// A set of linear equations lhs = rhs over the unknowns, kept in solved form.
/// Unknowns are eliminated in the order c, k_v, kappa.
class ConstraintSystem {
public:
    struct Equation {
        AffineExpr lhs;
        AffineExpr rhs;
    };

    void add(const AffineExpr& lhs, const AffineExpr& rhs);

    /// Expression with every solved unknown replaced.
    AffineExpr reduce(const AffineExpr& e) const;

    bool consistent() const { return consistent_; }
    bool empty() const { return equations_.empty(); }
    const std::vector<Equation>& equations() const { return equations_; }
    /// One "unknown = value" per solved unknown, in elimination order.
    std::vector<Equation> solutions() const;
    /// True when lhs = rhs follows from the system.
    bool implies(const AffineExpr& lhs, const AffineExpr& rhs) const;

private:
    std::vector<Equation> equations_;
    std::vector<std::pair<std::string, AffineExpr>> solved_;
    bool consistent_ = true;
};

std::string to_string(const ConstraintSystem::Equation& eq);

} // namespace curvess
