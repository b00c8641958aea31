#include "curvess/plane.hpp"

#include "curvess/error.hpp"

#include <algorithm>
#include <map>

namespace curvess {
namespace {

JetAlgebra build_local(std::vector<Poly> gens, const AnalysisOptions& opts, bool track,
                       ErrorKind cap_error)
{
    JetOptions jo;
    jo.track_sources = track;
    if (opts.truncation)
        return JetAlgebra::build(std::move(gens), *opts.truncation + opts.bump, jo);
    try {
        JetAlgebra J = JetAlgebra::build_adaptive(gens, opts.cap, jo);
        if (opts.bump == 0)
            return J;
        return JetAlgebra::build(std::move(gens), J.truncation_order() + opts.bump, jo);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotMPrimary)
            throw;
        throw Error(cap_error, std::string(e.what()) + " (cap " + std::to_string(opts.cap) + ")");
    }
}

} // namespace

PlaneSingularity::PlaneSingularity(Poly f, std::optional<Weights> weights,
                                   std::vector<BranchData> branches, std::string label)
    : f_(std::move(f)), weights_(std::move(weights)), branches_(std::move(branches)),
      label_(std::move(label))
{
    if (f_.arity() != 2)
        throw Error(ErrorKind::ArityMismatch, "plane singularity needs exactly two variables");
    if (f_.is_zero())
        throw Error(ErrorKind::ZeroPolynomial, "plane singularity equation is zero");
    if (f_.constant_term() != 0)
        throw Error(ErrorKind::InvalidArgument, "equation does not vanish at the origin");
    if (weights_) {
        if (weights_->w1 <= 0 || weights_->w2 <= 0)
            throw Error(ErrorKind::InvalidArgument, "weights must be positive");
        if (!satisfies_euler(f_, *weights_))
            throw Error(ErrorKind::InvalidArgument,
                        "weights (" + to_string(weights_->w1) + ", " + to_string(weights_->w2)
                            + ") violate the Euler relation");
    }
    for (const BranchData& b : branches_) {
        if (b.param.arity() != 2)
            throw Error(ErrorKind::ArityMismatch, "branch needs one image per plane variable");
        const std::uint32_t order = 8 * b.param.max_image_degree();
        if (!substitute(f_, b.param, order).is_zero())
            throw Error(ErrorKind::InvalidArgument, "branch does not lie on f = 0");
        if (b.equation) {
            if (b.equation->vars() != f_.vars())
                throw Error(ErrorKind::ArityMismatch, "branch equation uses other variables");
            if (!substitute(*b.equation, b.param, order).is_zero())
                throw Error(ErrorKind::InvalidArgument,
                            "branch equation '" + to_string(*b.equation)
                                + "' does not vanish on its parametrization");
        }
    }
}

JetAlgebra milnor_algebra(const PlaneSingularity& s, const AnalysisOptions& opts, bool track_sources)
{
    return build_local({s.f_u(), s.f_v()}, opts, track_sources, ErrorKind::NonIsolated);
}

JetAlgebra tjurina_algebra(const PlaneSingularity& s, const AnalysisOptions& opts)
{
    return build_local({s.f(), s.f_u(), s.f_v()}, opts, false, ErrorKind::NonIsolated);
}

MilnorTjurina milnor_tjurina(const PlaneSingularity& s, const AnalysisOptions& opts)
{
    return {milnor_algebra(s, opts).colength(), tjurina_algebra(s, opts).colength()};
}

bool saito_test(const PlaneSingularity& s, const AnalysisOptions& opts)
{
    const auto [mu, tau] = milnor_tjurina(s, opts);
    return mu == tau;
}

LocalInvariants local_invariants(const PlaneSingularity& s, const AnalysisOptions& opts)
{
    LocalInvariants inv;
    const auto [mu, tau] = milnor_tjurina(s, opts);
    inv.mu = mu;
    inv.tau = tau;
    inv.qh_by_saito = mu == tau;
    inv.wh_in_coords = s.weights().has_value() || weight_feasibility(s.f()).has_value();
    return inv;
}

MultByF mult_by_f(const PlaneSingularity& s, const JetAlgebra& milnor)
{
    const std::size_t n = milnor.colength();
    MultByF out;
    out.matrix = Matrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const Vector col = milnor.normal_form(s.f() * Poly::monomial(s.f().vars(), milnor.basis()[j]));
        for (std::size_t i = 0; i < n; ++i)
            out.matrix(i, j) = col[i];
    }
    out.kernel_basis = nullspace(out.matrix);
    out.kernel_dim = out.kernel_basis.size();

    // Rows of the transpose span the image; uncovered coordinates complete it.
    Matrix image_rows(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            image_rows(j, i) = out.matrix(i, j);
    std::vector<std::size_t> pivots;
    rref(image_rows, &pivots);
    for (std::size_t k = 0; k < n; ++k) {
        if (std::find(pivots.begin(), pivots.end(), k) != pivots.end())
            continue;
        Vector e(n);
        e[k] = 1;
        out.cokernel_basis.push_back(std::move(e));
    }
    out.cokernel_dim = out.cokernel_basis.size();
    return out;
}

MultByF mult_by_f(const PlaneSingularity& s, const AnalysisOptions& opts)
{
    return mult_by_f(s, milnor_algebra(s, opts));
}

TailMap tail_map_general(const PlaneSingularity& s, const AnalysisOptions& opts)
{
    const JetAlgebra M = milnor_algebra(s, opts);
    const JetAlgebra T = tjurina_algebra(s, opts);
    const MultByF mf = mult_by_f(s, M);
    const Poly fu = s.f_u();
    const Poly fv = s.f_v();

    std::map<std::uint32_t, JetAlgebra> witness_algebras;
    auto witness_algebra = [&](std::uint32_t order) -> const JetAlgebra& {
        auto it = witness_algebras.find(order);
        if (it == witness_algebras.end()) {
            JetOptions jo;
            jo.seed = opts.witness_seed;
            jo.track_sources = true;
            it = witness_algebras.emplace(order, JetAlgebra::build({fu, fv}, order, jo)).first;
        }
        return it->second;
    };
    auto image_class = [&](const Poly& g, std::uint32_t order) {
        const MembershipWitness w = witness_algebra(order).membership_with_witness(g, order);
        return T.normal_form(diff(w.cofactors[0], 0) + diff(w.cofactors[1], 1));
    };

    TailMap tm;
    tm.source_basis = mf.kernel_basis;
    tm.target_basis = T.basis();
    tm.matrix = Matrix(T.colength(), mf.kernel_dim);
    const std::uint32_t nm = M.primality_bound();
    const std::uint32_t nt = T.primality_bound();
    for (std::size_t j = 0; j < mf.kernel_dim; ++j) {
        const Poly g = s.f() * M.lift(mf.kernel_basis[j]);
        // A defect in m^(order+1) moves the cofactors by elements of
        // m^(order+1-nm), hence the divergence by m^(order-nm) ⊆ m^nt.
        const std::uint32_t order = std::max(nm + nt, nt + g.total_degree()) + 2 + opts.bump;
        const Vector cls = image_class(g, order);
        if (image_class(g, order + 2) != cls)
            throw Error(ErrorKind::WitnessOrderInsufficient,
                        "tail class changed between witness orders " + std::to_string(order)
                            + " and " + std::to_string(order + 2));
        for (std::size_t i = 0; i < cls.size(); ++i)
            tm.matrix(i, j) = cls[i];
    }
    tm.rank = rank(tm.matrix);
    return tm;
}

TailMap tail_map_wh_scalar(const PlaneSingularity& s, const AnalysisOptions& opts)
{
    const std::optional<Weights> found = s.weights() ? s.weights() : weight_feasibility(s.f());
    if (!found)
        throw Error(ErrorKind::MissingWeights,
                    "scalar tail formula needs weights for '" + to_string(s.f()) + "'");
    const Weights& w = *found;
    const JetAlgebra M = milnor_algebra(s, opts);
    const JetAlgebra T = tjurina_algebra(s, opts);
    const std::size_t n = M.colength();

    TailMap tm;
    tm.target_basis = T.basis();
    tm.matrix = Matrix(T.colength(), n);
    for (std::size_t j = 0; j < n; ++j) {
        Vector e(n);
        e[j] = 1;
        tm.source_basis.push_back(std::move(e));
        // Multiplication by f vanishes on M_f, so both algebras share the basis.
        const Rational scalar = weighted_degree(M.basis()[j], w) + w.w1 + w.w2;
        const Vector cls = T.normal_form(Poly::monomial(s.f().vars(), M.basis()[j], scalar));
        for (std::size_t i = 0; i < cls.size(); ++i)
            tm.matrix(i, j) = cls[i];
    }
    tm.rank = rank(tm.matrix);
    return tm;
}

std::size_t d10_local_rank(const PlaneSingularity& s, const AnalysisOptions& opts)
{
    return tail_map_general(s, opts).rank;
}

} // namespace curvess
