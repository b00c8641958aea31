#pragma once

#include "curvess/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace curvess {

using VarList = std::vector<std::string>;

/// Exponent vector over an ambient variable list.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

    std::size_t arity() const { return exps_.size(); }
    std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return exps_; }

    std::uint32_t degree() const;
    bool divides(const Monomial& other) const;

    Monomial operator*(const Monomial& other) const;

    /// Graded lexicographic: total degree first, then lex in declared order.
    std::strong_ordering operator<=>(const Monomial& other) const;
    bool operator==(const Monomial& other) const = default;

private:
    std::vector<std::uint32_t> exps_;
};

/// Terms are kept in descending graded-lex order.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return a > b; }
};

/// Sparse multivariate polynomial with rational coefficients. Also serves as a
/// truncated power series when combined with `truncated`.
class Poly {
public:
    using TermMap = std::map<Monomial, Rational, GrlexGreater>;

    Poly() = default;
    explicit Poly(VarList vars) : vars_(std::move(vars)) {}

    static Poly constant(VarList vars, const Rational& c);
    static Poly variable(VarList vars, std::size_t index);
    static Poly monomial(VarList vars, Monomial m, const Rational& c = 1);

    const VarList& vars() const { return vars_; }
    std::size_t arity() const { return vars_.size(); }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Index of `name` in the ambient list; throws Error(UnknownVariable).
    std::size_t var_index(std::string_view name) const;

    Rational coefficient(const Monomial& m) const;
    Rational constant_term() const;

    /// Adds c·m; keeps the no-stored-zero invariant.
    void add_term(const Monomial& m, const Rational& c);

    /// Largest total degree; 0 for the zero polynomial.
    std::uint32_t total_degree() const;
    /// Smallest total degree of a term (the t-adic / m-adic order), empty for 0.
    std::optional<std::uint32_t> order() const;

    /// Drops every term of total degree > max_degree.
    Poly truncated(std::uint32_t max_degree) const;
    /// Terms of total degree exactly d.
    Poly homogeneous_part(std::uint32_t d) const;

    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;

    /// Product with all terms above max_degree dropped.
    static Poly mul_truncated(const Poly& a, const Poly& b, std::uint32_t max_degree);
    Poly pow(std::uint32_t n) const;

    bool operator==(const Poly& other) const = default;

private:
    void require_same_ambient(const Poly& other) const;

    VarList vars_;
    TermMap terms_;
};

/// Canonical text: descending graded-lex terms, reduced fractions, "1*" elided.
std::string to_string(const Poly& p);

/// Formal partial derivative.
Poly diff(const Poly& p, std::string_view var);
Poly diff(const Poly& p, std::size_t var_index);

/// Normalization data of one branch: one power series in a parameter per
/// ambient variable, every image without constant term, at least one nonzero.
class BranchParam {
public:
    /// Validates the invariants; the images must share a one-variable ambient.
    explicit BranchParam(std::vector<Poly> images);

    const std::vector<Poly>& images() const { return images_; }
    std::size_t arity() const { return images_.size(); }
    const VarList& parameter() const { return images_.front().vars(); }
    /// Maximum polynomial degree among the images.
    std::uint32_t max_image_degree() const;

private:
    std::vector<Poly> images_;
};

/// Composition p(x_1(t), ..., x_n(t)); truncated at `max_order` when given.
Poly substitute(const Poly& p, const BranchParam& images,
                std::optional<std::uint32_t> max_order = std::nullopt);

} // namespace curvess
