#pragma once

#include "curvess/jets.hpp"
#include "curvess/linalg.hpp"
#include "curvess/poly.hpp"
#include "curvess/weights.hpp"

#include <optional>
#include <string>
#include <vector>

namespace curvess {

/// One branch of a germ: its parametrization and, for multibranch germs, a
/// local equation of that branch alone.
struct BranchData {
    BranchParam param;
    std::optional<Poly> equation;
};

/// An isolated plane curve germ f(u, v) = 0 at the origin.
class PlaneSingularity {
public:
    /// Checks: two variables, f nonzero without constant term, the Euler
    /// relation for given weights, and that every branch (and its own
    /// equation) annihilates f up to 8·(max image degree).
    PlaneSingularity(Poly f, std::optional<Weights> weights, std::vector<BranchData> branches,
                     std::string label = {});

    const Poly& f() const { return f_; }
    const std::optional<Weights>& weights() const { return weights_; }
    const std::vector<BranchData>& branches() const { return branches_; }
    const std::string& label() const { return label_; }

    Poly f_u() const { return diff(f_, 0); }
    Poly f_v() const { return diff(f_, 1); }

private:
    Poly f_;
    std::optional<Weights> weights_;
    std::vector<BranchData> branches_;
    std::string label_;
};

struct AnalysisOptions {
    /// Fixed truncation order; when absent the default order is doubled
    /// until the ideal is m-primary or `cap` is reached.
    std::optional<std::uint32_t> truncation;
    std::uint32_t cap = 64;
    /// Added to every truncation order; used by stabilization re-checks.
    std::uint32_t bump = 0;
    /// Row-order seed for witness solves (0 = natural order).
    std::uint64_t witness_seed = 0;
};

struct LocalInvariants {
    std::size_t mu = 0;
    std::size_t tau = 0;
    bool qh_by_saito = false;
    bool wh_in_coords = false;
    std::optional<std::size_t> delta;
    std::optional<std::size_t> r;

    /// tau = mu although no rational weights exist in these coordinates.
    bool qh_without_rational_weights() const { return qh_by_saito && !wh_in_coords; }
};

/// Matrix of d1 from (0 :_{M_f} f) to T_f. Column j is the image of
/// source_basis[j]; rows are coordinates over target_basis.
struct TailMap {
    std::vector<Vector> source_basis; // in M_f coordinates
    std::vector<Monomial> target_basis;
    Matrix matrix;
    std::size_t rank = 0;
};

struct MultByF {
    Matrix matrix; // multiplication by f on M_f, standard-monomial basis
    std::size_t kernel_dim = 0;
    std::size_t cokernel_dim = 0;
    std::vector<Vector> kernel_basis;
    std::vector<Vector> cokernel_basis; // unit vectors spanning a complement of the image
};

/// M_f = R/(f_u, f_v). Raises NonIsolated when no m-primary truncation exists
/// up to the cap (NotMPrimary for a fixed truncation).
JetAlgebra milnor_algebra(const PlaneSingularity& s, const AnalysisOptions& opts = {},
                          bool track_sources = false);
/// T_f = R/(f, f_u, f_v).
JetAlgebra tjurina_algebra(const PlaneSingularity& s, const AnalysisOptions& opts = {});

struct MilnorTjurina {
    std::size_t mu;
    std::size_t tau;
};
MilnorTjurina milnor_tjurina(const PlaneSingularity& s, const AnalysisOptions& opts = {});
bool saito_test(const PlaneSingularity& s, const AnalysisOptions& opts = {});

/// mu, tau and both quasihomogeneity flags; delta and r are left empty.
LocalInvariants local_invariants(const PlaneSingularity& s, const AnalysisOptions& opts = {});

MultByF mult_by_f(const PlaneSingularity& s, const AnalysisOptions& opts = {});
MultByF mult_by_f(const PlaneSingularity& s, const JetAlgebra& milnor);

/// d1 for arbitrary isolated f: lift a kernel class m, solve f·m = a·f_u + b·f_v
/// and take the class of a_u + b_v in T_f. Raises WitnessOrderInsufficient if
/// the class changes when the witness order is raised by 2.
TailMap tail_map_general(const PlaneSingularity& s, const AnalysisOptions& opts = {});

/// d1 for weighted-homogeneous f: the scalar (lambda + w1 + w2) on each standard
/// monomial of weighted degree lambda. Uses the given weights, else searches
/// for some in these coordinates; MissingWeights if there are none.
TailMap tail_map_wh_scalar(const PlaneSingularity& s, const AnalysisOptions& opts = {});

/// Rank of the local chain map H^{-1} -> H^0 behind d1^{1,0}; the same
/// Koszul-level map as the tail differential.
std::size_t d10_local_rank(const PlaneSingularity& s, const AnalysisOptions& opts = {});

} // namespace curvess
