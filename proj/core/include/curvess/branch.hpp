#pragma once

#include "curvess/plane.hpp"
#include "curvess/poly.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace curvess {

/// Values ord_t(p(x(t), ...)) <= order of polynomials p in the images,
/// ascending. Works for any number of images.
std::vector<std::uint32_t> branch_semigroup(const BranchParam& b, std::uint32_t order);

/// Gap count of the value semigroup. Raises NoConductor unless a run of
/// consecutive values as long as the smallest positive value ends by `order`.
std::size_t delta_one_branch(const BranchParam& b, std::uint32_t order);

/// ord_t f_other(b(t)); raises NotTransverseAtOrder when it vanishes to `order`.
std::uint32_t intersection_multiplicity(const Poly& f_other, const BranchParam& b,
                                        std::uint32_t order);

struct DeltaReport {
    std::size_t delta = 0;
    std::size_t r = 0;
    std::vector<std::size_t> per_branch_delta;
    std::vector<std::vector<std::uint32_t>> pairwise; // symmetric, zero diagonal
    std::uint32_t working_order = 0;
};

/// delta = sum of branch deltas + sum_{i<j} (C_i·C_j), checked against mu by
/// Milnor's formula (MilnorMismatch). Needs branch data (MissingBranchData)
/// and one equation per branch when there are several.
DeltaReport delta_report(const PlaneSingularity& s, const AnalysisOptions& opts = {},
                         std::optional<std::uint32_t> working_order = std::nullopt);

} // namespace curvess
