#include "curvess/lci.hpp"

#include "curvess/error.hpp"

namespace curvess {
namespace {

Integer binom(long n, long k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

} // namespace

LciPresentation::LciPresentation(VarList variables, std::vector<Poly> equations,
                                 std::optional<BranchParam> parametrization, std::string label)
    : variables_(std::move(variables)), equations_(std::move(equations)),
      parametrization_(std::move(parametrization)), label_(std::move(label))
{
    if (variables_.size() < 2)
        throw Error(ErrorKind::InvalidArgument, "a curve germ needs at least two variables");
    for (const Poly& f : equations_) {
        if (f.vars() != variables_)
            throw Error(ErrorKind::ArityMismatch, "equation '" + to_string(f) + "' uses other variables");
        if (f.constant_term() != 0)
            throw Error(ErrorKind::InvalidArgument, "equation '" + to_string(f) + "' has a constant term");
    }
    if (parametrization_ && parametrization_->arity() != variables_.size())
        throw Error(ErrorKind::ArityMismatch, "parametrization needs one image per variable");
}

std::size_t embedding_dimension(const LciPresentation& p)
{
    const std::size_t e = p.variables().size();
    if (p.equations().size() + 1 != e)
        throw Error(ErrorKind::NotCompleteIntersection,
                    std::to_string(p.equations().size()) + " equations in " + std::to_string(e)
                        + " variables do not cut out a complete-intersection curve");
    for (const Poly& f : p.equations()) {
        const Poly linear = f.homogeneous_part(1);
        if (!linear.is_zero())
            throw Error(ErrorKind::NonMinimalPresentation,
                        "equation '" + to_string(f) + "' has linear part " + to_string(linear));
    }
    return e;
}

bool verify_parametrization(const LciPresentation& p)
{
    if (!p.parametrization())
        throw Error(ErrorKind::InvalidArgument, "presentation carries no parametrization");
    if (p.equations().empty())
        throw Error(ErrorKind::InvalidArgument, "presentation has no equations");
    const BranchParam& b = *p.parametrization();
    const std::uint32_t order = 8 * b.max_image_degree();
    for (const Poly& f : p.equations())
        if (!substitute(f, b, order).is_zero())
            return false;
    return true;
}

std::vector<TermRank> complex_term_ranks(std::size_t e, std::size_t p)
{
    if (e < 2 || p < 1)
        throw Error(ErrorKind::InvalidArgument, "term ranks need e >= 2 and p >= 1");
    std::vector<TermRank> out;
    for (std::size_t i = 0; i <= std::min(p, e); ++i) {
        const long sym = static_cast<long>(p - i);
        out.push_back({static_cast<int>(i) - static_cast<int>(p),
                       binom(sym + static_cast<long>(e) - 2, static_cast<long>(e) - 2)
                           * binom(static_cast<long>(e), static_cast<long>(i))});
    }
    return out;
}

ObstructionReport obstruction(const LciPresentation& p)
{
    const std::size_t e = embedding_dimension(p);
    if (e == 2)
        throw Error(ErrorKind::PlanarNoObstruction, "planar germs carry no non-planar obstruction");
    const std::size_t k = e - 1; // rank of F

    ObstructionReport rep;
    rep.e = e;
    rep.term_ranks = complex_term_ranks(e, e + 1);

    // J(i, l) = ∂f_i/∂x_l modulo m.
    Matrix J0(k, e);
    rep.jacobian_in_m = true;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t l = 0; l < e; ++l) {
            J0(i, l) = diff(p.equations()[i], l).constant_term();
            rep.jacobian_in_m = rep.jacobian_in_m && J0(i, l) == 0;
        }
    }

    // Basis of Sym^2 F ⊗ ∧^(e-1) G: pairs a <= b times the (e-1)-forms ω_l that
    // omit γ_l. The differential sends ε_a ε_b ⊗ ω_l to
    // ε_b ⊗ dε_a ∧ ω_l + ε_a ⊗ dε_b ∧ ω_l with dε_i ∧ ω_l = (-1)^l J(i, l) vol.
    const std::size_t pairs = k * (k + 1) / 2;
    rep.phi_at_origin = Matrix(k, pairs * e);
    std::size_t col = 0;
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a; b < k; ++b) {
            for (std::size_t l = 0; l < e; ++l, ++col) {
                const Rational sign = (l % 2 == 0) ? 1 : -1;
                rep.phi_at_origin(b, col) += sign * J0(a, l);
                rep.phi_at_origin(a, col) += sign * J0(b, l);
            }
        }
    }
    rep.coker_mod_m_dim = k - rank(rep.phi_at_origin);
    rep.nonzero_H_minus1 = rep.coker_mod_m_dim > 0;
    rep.obstruction_position = {static_cast<int>(e) + 1, -1};
    rep.total_degree = e;
    return rep;
}

} // namespace curvess
