#include "curvess/jets.hpp"

#include "curvess/error.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace curvess {
namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

// Exponent vectors of length k summing to s.
std::uint64_t compositions(std::uint64_t s, std::uint64_t k)
{
    if (k == 0)
        return s == 0 ? 1 : 0;
    return binomial(s + k - 1, k - 1);
}

void append_degree(std::size_t arity, std::uint32_t d, std::vector<std::uint32_t>& cur,
                   std::vector<Monomial>& out)
{
    // Lexicographically ascending exponent vectors of total degree d.
    const std::size_t i = cur.size();
    const std::uint32_t used = std::accumulate(cur.begin(), cur.end(), std::uint32_t{0});
    if (i + 1 == arity) {
        cur.push_back(d - used);
        out.emplace_back(cur);
        cur.pop_back();
        return;
    }
    for (std::uint32_t x = 0; x <= d - used; ++x) {
        cur.push_back(x);
        append_degree(arity, d, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Monomial> monomials_up_to(std::size_t arity, std::uint32_t max_degree)
{
    std::vector<Monomial> out;
    if (arity == 0) {
        out.emplace_back(0);
        return out;
    }
    std::vector<std::uint32_t> cur;
    for (std::uint32_t d = 0; d <= max_degree; ++d)
        append_degree(arity, d, cur, out);
    return out;
}

std::uint32_t monomial_rank(const Monomial& m)
{
    const std::size_t n = m.arity();
    const std::uint32_t d = m.degree();
    std::uint64_t rank = n == 0 ? 0 : binomial(d - 1 + n, n); // monomials of degree < d
    if (d == 0)
        rank = 0;
    std::uint32_t used = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::uint32_t x = 0; x < m[i]; ++x)
            rank += compositions(d - used - x, n - i - 1);
        used += m[i];
    }
    return static_cast<std::uint32_t>(rank);
}

std::uint32_t JetAlgebra::default_truncation(const std::vector<Poly>& generators)
{
    std::uint32_t d = 0;
    for (const Poly& g : generators)
        d = std::max(d, g.total_degree());
    return 4 + 2 * d;
}

JetAlgebra JetAlgebra::build(std::vector<Poly> generators, std::uint32_t truncation,
                             JetOptions options)
{
    if (generators.empty())
        throw Error(ErrorKind::InvalidArgument, "jet algebra needs at least one generator");
    if (truncation < 1)
        throw Error(ErrorKind::InvalidArgument, "truncation order must be at least 1");
    for (const Poly& g : generators)
        if (g.vars() != generators.front().vars())
            throw Error(ErrorKind::ArityMismatch, "generators live over different variable lists");

    JetAlgebra J;
    J.ambient_ = generators.front().vars();
    J.generators_ = std::move(generators);
    J.truncation_ = truncation;
    J.monomials_ = monomials_up_to(J.ambient_.size(), truncation);

    const auto nmon = static_cast<std::uint32_t>(J.monomials_.size());
    std::vector<std::uint32_t> sources;
    for (std::uint32_t g = 0; g < J.generators_.size(); ++g) {
        const auto ord = J.generators_[g].order();
        if (!ord)
            continue;
        for (std::uint32_t k = 0; k < nmon && J.monomials_[k].degree() + *ord <= truncation; ++k)
            sources.push_back(g * nmon + k);
    }
    if (options.seed != 0) {
        std::mt19937_64 rng(options.seed);
        std::shuffle(sources.begin(), sources.end(), rng);
    }

    auto echelon = std::make_shared<SparseEchelon>(nmon, options.track_sources);
    for (std::uint32_t id : sources) {
        const Poly& g = J.generators_[id / nmon];
        const Monomial& m = J.monomials_[id % nmon];
        SparseVec row;
        for (const auto& [gm, c] : g.terms()) {
            const Monomial prod = gm * m;
            if (prod.degree() <= truncation)
                row.emplace(monomial_rank(prod), c);
        }
        echelon->insert(row, id);
    }

    // Pivots are closed under multiplication by variables, so the first
    // fully-pivoted degree bounds the staircase.
    std::optional<std::uint32_t> bound;
    for (std::uint32_t d = 0, k = 0; d <= truncation && !bound; ++d) {
        bool all = true;
        for (; k < nmon && J.monomials_[k].degree() == d; ++k)
            all = all && echelon->is_pivot(k);
        if (all)
            bound = d;
    }
    if (!bound)
        throw Error(ErrorKind::NotMPrimary,
                    "ideal is not m-primary up to truncation order " + std::to_string(truncation));
    J.primality_bound_ = *bound;

    J.basis_index_.assign(nmon, -1);
    for (std::uint32_t k = 0; k < nmon; ++k) {
        if (!echelon->is_pivot(k)) {
            J.basis_index_[k] = static_cast<std::int64_t>(J.basis_.size());
            J.basis_.push_back(J.monomials_[k]);
        }
    }
    J.echelon_ = std::move(echelon);
    return J;
}

JetAlgebra JetAlgebra::build_adaptive(std::vector<Poly> generators, std::uint32_t cap,
                                      JetOptions options)
{
    std::uint32_t T = std::min(default_truncation(generators), cap);
    for (;;) {
        try {
            return build(generators, T, options);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NotMPrimary || T >= cap)
                throw;
        }
        T = std::min(2 * T, cap);
    }
}

SparseVec JetAlgebra::to_jet(const Poly& p) const
{
    if (p.vars() != ambient_)
        throw Error(ErrorKind::ArityMismatch, "polynomial ambient does not match the jet algebra");
    SparseVec v;
    for (const auto& [m, c] : p.terms())
        if (m.degree() <= truncation_)
            v.emplace(monomial_rank(m), c);
    return v;
}

Vector JetAlgebra::normal_form(const Poly& p) const
{
    Vector out(basis_.size());
    for (const auto& [col, c] : echelon_->reduce(to_jet(p)).remainder)
        out[static_cast<std::size_t>(basis_index_[col])] = c;
    return out;
}

Poly JetAlgebra::normal_form_poly(const Poly& p) const
{
    return lift(normal_form(p));
}

Poly JetAlgebra::lift(const Vector& coords) const
{
    if (coords.size() != basis_.size())
        throw Error(ErrorKind::InvalidArgument, "coordinate vector has the wrong length");
    Poly r(ambient_);
    for (std::size_t i = 0; i < coords.size(); ++i)
        r.add_term(basis_[i], coords[i]);
    return r;
}

MembershipWitness JetAlgebra::membership_with_witness(const Poly& p, std::uint32_t order) const
{
    if (!echelon_->tracks_sources())
        throw Error(ErrorKind::InvalidArgument, "witnesses need a jet algebra built with source tracking");
    if (order > truncation_)
        throw Error(ErrorKind::InvalidArgument,
                    "witness order " + std::to_string(order) + " exceeds truncation "
                        + std::to_string(truncation_));
    const SparseEchelon::Reduction red = echelon_->reduce(to_jet(p));
    if (!red.remainder.empty())
        throw Error(ErrorKind::NotInIdeal, "'" + to_string(p) + "' is not in the ideal");

    const auto nmon = static_cast<std::uint32_t>(monomials_.size());
    MembershipWitness w;
    w.cofactors.assign(generators_.size(), Poly(ambient_));
    for (const auto& [id, c] : red.sources)
        w.cofactors[id / nmon].add_term(monomials_[id % nmon], c);

    Poly defect = p;
    for (std::size_t i = 0; i < generators_.size(); ++i)
        defect -= w.cofactors[i] * generators_[i];
    if (auto ord = defect.order(); ord && *ord <= order)
        throw Error(ErrorKind::WitnessOrderInsufficient,
                    "witness defect has a term of degree " + std::to_string(*ord));
    w.order_verified = order;
    return w;
}

} // namespace curvess
