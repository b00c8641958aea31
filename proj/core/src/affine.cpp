#include "curvess/affine.hpp"

#include <array>
#include <algorithm>

namespace curvess {
namespace {

constexpr std::array<const char*, 3> kCanonical{"kappa", "c", "k_v"};
constexpr std::array<const char*, 3> kElimination{"c", "k_v", "kappa"};

int canonical_rank(const std::string& s)
{
    for (std::size_t i = 0; i < kCanonical.size(); ++i)
        if (s == kCanonical[i])
            return static_cast<int>(i);
    return static_cast<int>(kCanonical.size());
}

int elimination_rank(const std::string& s)
{
    for (std::size_t i = 0; i < kElimination.size(); ++i)
        if (s == kElimination[i])
            return static_cast<int>(i);
    return static_cast<int>(kElimination.size());
}

} // namespace

bool UnknownOrder::operator()(const std::string& a, const std::string& b) const
{
    const int ra = canonical_rank(a);
    const int rb = canonical_rank(b);
    if (ra != rb)
        return ra < rb;
    return a < b;
}

AffineExpr AffineExpr::unknown(const std::string& name)
{
    AffineExpr e;
    e.terms_.emplace(name, 1);
    return e;
}

Rational AffineExpr::coefficient(const std::string& name) const
{
    auto it = terms_.find(name);
    return it == terms_.end() ? Rational(0) : it->second;
}

AffineExpr& AffineExpr::operator+=(const AffineExpr& o)
{
    constant_ += o.constant_;
    for (const auto& [name, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(name, 0);
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
    return *this;
}

AffineExpr& AffineExpr::operator-=(const AffineExpr& o)
{
    return *this += -o;
}

AffineExpr& AffineExpr::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        constant_ = 0;
        return *this;
    }
    constant_ *= c;
    for (auto& [name, coeff] : terms_)
        coeff *= c;
    return *this;
}

AffineExpr AffineExpr::substituted(const std::string& name, const AffineExpr& value) const
{
    const Rational c = coefficient(name);
    if (c == 0)
        return *this;
    AffineExpr r = *this;
    r.terms_.erase(name);
    return r += value * c;
}

std::string to_string(const AffineExpr& e)
{
    std::string out;
    auto append = [&](const Rational& c, const std::string& name) {
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (name.empty())
            out += to_string(mag);
        else if (mag == 1)
            out += name;
        else
            out += to_string(mag) + "*" + name;
    };
    for (const auto& [name, c] : e.terms())
        append(c, name);
    if (e.constant() != 0 || out.empty())
        append(e.constant(), "");
    return out;
}

std::string to_string(const ConstraintSystem::Equation& eq)
{
    return to_string(eq.lhs) + " = " + to_string(eq.rhs);
}

AffineExpr ConstraintSystem::reduce(const AffineExpr& e) const
{
    AffineExpr r = e;
    for (const auto& [name, value] : solved_)
        r = r.substituted(name, value);
    return r;
}

void ConstraintSystem::add(const AffineExpr& lhs, const AffineExpr& rhs)
{
    equations_.push_back({lhs, rhs});
    const AffineExpr diff = reduce(lhs - rhs);
    if (diff.is_constant()) {
        if (diff.constant() != 0)
            consistent_ = false;
        return;
    }
    auto pivot = std::min_element(diff.terms().begin(), diff.terms().end(),
                                  [](const auto& a, const auto& b) {
                                      return elimination_rank(a.first) < elimination_rank(b.first);
                                  });
    const std::string name = pivot->first;
    const Rational coeff = pivot->second;
    // name = -(diff - coeff·name) / coeff
    AffineExpr value = diff.substituted(name, 0) * Rational(-1 / coeff);
    for (auto& [other, expr] : solved_)
        expr = expr.substituted(name, value);
    solved_.emplace_back(name, std::move(value));
}

std::vector<ConstraintSystem::Equation> ConstraintSystem::solutions() const
{
    std::vector<Equation> out;
    for (const auto& [name, value] : solved_)
        out.push_back({AffineExpr::unknown(name), value});
    std::sort(out.begin(), out.end(), [](const Equation& a, const Equation& b) {
        return elimination_rank(a.lhs.terms().begin()->first) < elimination_rank(b.lhs.terms().begin()->first);
    });
    return out;
}

bool ConstraintSystem::implies(const AffineExpr& lhs, const AffineExpr& rhs) const
{
    const AffineExpr d = reduce(lhs - rhs);
    return d.is_constant() && d.constant() == 0;
}

} // namespace curvess
