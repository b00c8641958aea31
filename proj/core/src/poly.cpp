#include "curvess/poly.hpp"

#include "curvess/error.hpp"

#include <algorithm>
#include <numeric>

namespace curvess {

std::uint32_t Monomial::degree() const
{
    return std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
}

bool Monomial::divides(const Monomial& other) const
{
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i])
            return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const
{
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i)
        r.exps_[i] += other.exps_[i];
    return r;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const
{
    if (auto c = degree() <=> other.degree(); c != 0)
        return c;
    return exps_ <=> other.exps_;
}

Poly Poly::constant(VarList vars, const Rational& c)
{
    Poly p(std::move(vars));
    p.add_term(Monomial(p.arity()), c);
    return p;
}

Poly Poly::variable(VarList vars, std::size_t index)
{
    Poly p(std::move(vars));
    if (index >= p.arity())
        throw Error(ErrorKind::UnknownVariable, "variable index out of range");
    Monomial m(p.arity());
    m[index] = 1;
    p.add_term(m, 1);
    return p;
}

Poly Poly::monomial(VarList vars, Monomial m, const Rational& c)
{
    Poly p(std::move(vars));
    if (m.arity() != p.arity())
        throw Error(ErrorKind::ArityMismatch, "monomial arity does not match the ambient");
    p.add_term(m, c);
    return p;
}

std::size_t Poly::var_index(std::string_view name) const
{
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end())
        throw Error(ErrorKind::UnknownVariable, "unknown variable '" + std::string(name) + "'");
    return static_cast<std::size_t>(it - vars_.begin());
}

Rational Poly::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::constant_term() const
{
    return coefficient(Monomial(arity()));
}

void Poly::add_term(const Monomial& m, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

std::uint32_t Poly::total_degree() const
{
    // Descending graded order: the first term has the largest degree.
    return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

std::optional<std::uint32_t> Poly::order() const
{
    if (terms_.empty())
        return std::nullopt;
    return terms_.rbegin()->first.degree();
}

Poly Poly::truncated(std::uint32_t max_degree) const
{
    Poly r(vars_);
    for (const auto& [m, c] : terms_)
        if (m.degree() <= max_degree)
            r.terms_.emplace_hint(r.terms_.end(), m, c);
    return r;
}

Poly Poly::homogeneous_part(std::uint32_t d) const
{
    Poly r(vars_);
    for (const auto& [m, c] : terms_)
        if (m.degree() == d)
            r.terms_.emplace_hint(r.terms_.end(), m, c);
    return r;
}

void Poly::require_same_ambient(const Poly& other) const
{
    if (vars_ != other.vars_)
        throw Error(ErrorKind::ArityMismatch, "polynomials live over different variable lists");
}

Poly& Poly::operator+=(const Poly& other)
{
    require_same_ambient(other);
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& other)
{
    require_same_ambient(other);
    for (const auto& [m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_)
        coeff *= c;
    return *this;
}

Poly Poly::operator-() const
{
    Poly r(*this);
    for (auto& [m, c] : r.terms_)
        c = -c;
    return r;
}

Poly operator*(const Poly& a, const Poly& b)
{
    a.require_same_ambient(b);
    Poly r(a.vars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term(ma * mb, ca * cb);
    return r;
}

Poly Poly::mul_truncated(const Poly& a, const Poly& b, std::uint32_t max_degree)
{
    a.require_same_ambient(b);
    Poly r(a.vars_);
    for (const auto& [ma, ca] : a.terms_) {
        const auto da = ma.degree();
        if (da > max_degree)
            continue;
        for (auto it = b.terms_.rbegin(); it != b.terms_.rend(); ++it) {
            // Ascending degree in b: stop once past the bound.
            if (da + it->first.degree() > max_degree)
                break;
            r.add_term(ma * it->first, ca * it->second);
        }
    }
    return r;
}

Poly Poly::pow(std::uint32_t n) const
{
    Poly result = Poly::constant(vars_, 1);
    Poly base = *this;
    while (n > 0) {
        if (n & 1U)
            result = result * base;
        n >>= 1U;
        if (n > 0)
            base = base * base;
    }
    return result;
}

std::string to_string(const Poly& p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;

        std::string factors;
        for (std::size_t i = 0; i < m.arity(); ++i) {
            if (m[i] == 0)
                continue;
            if (!factors.empty())
                factors += '*';
            factors += p.vars()[i];
            if (m[i] > 1)
                factors += '^' + std::to_string(m[i]);
        }
        if (factors.empty())
            out += to_string(mag);
        else if (mag == 1)
            out += factors;
        else
            out += to_string(mag) + '*' + factors;
    }
    return out;
}

Poly diff(const Poly& p, std::size_t var_index)
{
    if (var_index >= p.arity())
        throw Error(ErrorKind::UnknownVariable, "variable index out of range");
    Poly r(p.vars());
    for (const auto& [m, c] : p.terms()) {
        if (m[var_index] == 0)
            continue;
        Monomial dm = m;
        --dm[var_index];
        r.add_term(dm, c * m[var_index]);
    }
    return r;
}

Poly diff(const Poly& p, std::string_view var)
{
    return diff(p, p.var_index(var));
}

BranchParam::BranchParam(std::vector<Poly> images) : images_(std::move(images))
{
    if (images_.empty())
        throw Error(ErrorKind::InvalidArgument, "branch parametrization needs at least one image");
    const VarList& param = images_.front().vars();
    if (param.size() != 1)
        throw Error(ErrorKind::InvalidArgument, "branch images must be univariate in the parameter");
    bool any_nonzero = false;
    for (const Poly& img : images_) {
        if (img.vars() != param)
            throw Error(ErrorKind::InvalidArgument, "branch images use different parameters");
        if (img.constant_term() != 0)
            throw Error(ErrorKind::InvalidArgument,
                        "branch image '" + to_string(img) + "' has a nonzero constant term");
        any_nonzero = any_nonzero || !img.is_zero();
    }
    if (!any_nonzero)
        throw Error(ErrorKind::DegenerateBranch, "all branch images are zero");
}

std::uint32_t BranchParam::max_image_degree() const
{
    std::uint32_t d = 0;
    for (const Poly& img : images_)
        d = std::max(d, img.total_degree());
    return d;
}

Poly substitute(const Poly& p, const BranchParam& images, std::optional<std::uint32_t> max_order)
{
    if (p.arity() != images.arity())
        throw Error(ErrorKind::ArityMismatch,
                    "substitution needs " + std::to_string(p.arity()) + " images, got "
                        + std::to_string(images.arity()));
    const VarList& param = images.parameter();
    auto mul = [&](const Poly& a, const Poly& b) {
        return max_order ? Poly::mul_truncated(a, b, *max_order) : a * b;
    };

    // powers[i][k] = image_i^k, grown on demand.
    std::vector<std::vector<Poly>> powers(p.arity());
    for (std::size_t i = 0; i < p.arity(); ++i)
        powers[i].push_back(Poly::constant(param, 1));
    auto power = [&](std::size_t i, std::uint32_t k) -> const Poly& {
        while (powers[i].size() <= k)
            powers[i].push_back(mul(powers[i].back(), images.images()[i]));
        return powers[i][k];
    };

    Poly result(param);
    for (const auto& [m, c] : p.terms()) {
        Poly term = Poly::constant(param, c);
        for (std::size_t i = 0; i < m.arity() && !term.is_zero(); ++i)
            if (m[i] > 0)
                term = mul(term, power(i, m[i]));
        result += term;
    }
    if (max_order)
        result = result.truncated(*max_order);
    return result;
}

} // namespace curvess
