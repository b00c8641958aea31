#include "curvess/branch.hpp"

#include "curvess/error.hpp"
#include "curvess/sparse_echelon.hpp"

#include <algorithm>

namespace curvess {
namespace {

constexpr std::uint32_t kMaxWorkingOrder = 1024;

SparseVec series_row(const Poly& p)
{
    SparseVec row;
    for (const auto& [m, c] : p.terms())
        row.emplace(m[0], c);
    return row;
}

} // namespace

std::vector<std::uint32_t> branch_semigroup(const BranchParam& b, std::uint32_t order)
{
    std::vector<Poly> images;
    for (const Poly& img : b.images())
        if (Poly tr = img.truncated(order); !tr.is_zero())
            images.push_back(std::move(tr));
    if (images.empty())
        throw Error(ErrorKind::DegenerateBranch,
                    "every branch image vanishes to order " + std::to_string(order));

    // Monomials in the images whose t-order stays within range; their span
    // truncated at t^(order+1) is the truncated branch ring.
    SparseEchelon ech(order + 1, false);
    std::uint32_t id = 0;
    std::vector<std::pair<Poly, std::uint32_t>> frontier{{Poly::constant(b.parameter(), 1), 0}};
    ech.insert(series_row(frontier.front().first), id++);
    // Generate products with non-decreasing image index to visit each monomial once.
    std::vector<std::pair<Poly, std::uint32_t>> next;
    while (!frontier.empty()) {
        next.clear();
        for (const auto& [p, first] : frontier) {
            for (std::uint32_t i = first; i < images.size(); ++i) {
                Poly q = Poly::mul_truncated(p, images[i], order);
                if (q.is_zero())
                    continue;
                ech.insert(series_row(q), id++);
                next.emplace_back(std::move(q), i);
            }
        }
        frontier.swap(next);
    }

    std::vector<std::uint32_t> values;
    for (std::uint32_t k = 0; k <= order; ++k)
        if (ech.is_pivot(k))
            values.push_back(k);
    return values;
}

std::size_t delta_one_branch(const BranchParam& b, std::uint32_t order)
{
    const std::vector<std::uint32_t> values = branch_semigroup(b, order);
    if (values.size() < 2)
        throw Error(ErrorKind::NoConductor, "no positive value up to order " + std::to_string(order));
    const std::uint32_t smallest = values[1];
    std::uint32_t run_start = values[0];
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] != values[i - 1] + 1)
            run_start = values[i];
        if (values[i] - run_start + 1 >= smallest) {
            // Everything from run_start on lies in the semigroup.
            return run_start - static_cast<std::size_t>(
                       std::lower_bound(values.begin(), values.end(), run_start) - values.begin());
        }
    }
    throw Error(ErrorKind::NoConductor, "semigroup conductor not reached by order " + std::to_string(order));
}

std::uint32_t intersection_multiplicity(const Poly& f_other, const BranchParam& b, std::uint32_t order)
{
    const auto ord = substitute(f_other, b, order).order();
    if (!ord)
        throw Error(ErrorKind::NotTransverseAtOrder,
                    "'" + to_string(f_other) + "' vanishes on the branch to order "
                        + std::to_string(order));
    return *ord;
}

DeltaReport delta_report(const PlaneSingularity& s, const AnalysisOptions& opts,
                         std::optional<std::uint32_t> working_order)
{
    const auto& branches = s.branches();
    if (branches.empty())
        throw Error(ErrorKind::MissingBranchData, "no branch data for '" + to_string(s.f()) + "'");
    if (branches.size() > 1)
        for (const BranchData& b : branches)
            if (!b.equation)
                throw Error(ErrorKind::MissingBranchData,
                            "several branches need one equation each for intersection numbers");

    std::uint32_t order = working_order.value_or(0);
    if (!working_order)
        for (const BranchData& b : branches)
            order = std::max(order, 8 * b.param.max_image_degree());

    for (;;) {
        try {
            DeltaReport rep;
            rep.working_order = order;
            rep.r = branches.size();
            for (const BranchData& b : branches) {
                if (!substitute(s.f(), b.param, order).is_zero())
                    throw Error(ErrorKind::InvalidArgument, "branch does not lie on f = 0");
                rep.per_branch_delta.push_back(delta_one_branch(b.param, order));
            }
            rep.delta = 0;
            for (std::size_t d : rep.per_branch_delta)
                rep.delta += d;
            rep.pairwise.assign(rep.r, std::vector<std::uint32_t>(rep.r, 0));
            for (std::size_t i = 0; i < rep.r; ++i)
                for (std::size_t j = 0; j < rep.r; ++j)
                    if (i != j)
                        rep.pairwise[i][j] = intersection_multiplicity(*branches[i].equation,
                                                                       branches[j].param, order);
            for (std::size_t i = 0; i < rep.r; ++i) {
                for (std::size_t j = i + 1; j < rep.r; ++j) {
                    if (rep.pairwise[i][j] != rep.pairwise[j][i])
                        throw Error(ErrorKind::InvalidArgument,
                                    "intersection numbers of branches " + std::to_string(i) + " and "
                                        + std::to_string(j) + " disagree");
                    rep.delta += rep.pairwise[i][j];
                }
            }

            const std::size_t mu = milnor_algebra(s, opts).colength();
            if (mu + rep.r != 2 * rep.delta + 1)
                throw Error(ErrorKind::MilnorMismatch,
                            "mu = " + std::to_string(mu) + " but 2*delta - r + 1 = "
                                + std::to_string(2 * static_cast<long long>(rep.delta)
                                                 - static_cast<long long>(rep.r) + 1));
            return rep;
        } catch (const Error& e) {
            const bool retry = e.kind() == ErrorKind::NoConductor
                               || e.kind() == ErrorKind::NotTransverseAtOrder;
            if (!retry || working_order || order >= kMaxWorkingOrder)
                throw;
        }
        order *= 2;
    }
}

} // namespace curvess
