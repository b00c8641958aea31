#pragma once

#include "curvess/linalg.hpp"
#include "curvess/poly.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace curvess {

/// Curve germ Q/(f_1, ..., f_k) with Q = Q[[x_1..x_e]].
class LciPresentation {
public:
    /// Checks the shared ambient and zero constant terms; the equation count is
    /// validated by embedding_dimension so that non-CI germs stay representable.
    LciPresentation(VarList variables, std::vector<Poly> equations,
                    std::optional<BranchParam> parametrization = std::nullopt,
                    std::string label = {});

    const VarList& variables() const { return variables_; }
    const std::vector<Poly>& equations() const { return equations_; }
    const std::optional<BranchParam>& parametrization() const { return parametrization_; }
    const std::string& label() const { return label_; }

private:
    VarList variables_;
    std::vector<Poly> equations_;
    std::optional<BranchParam> parametrization_;
    std::string label_;
};

/// e = number of variables for a minimal presentation. Raises
/// NotCompleteIntersection unless there are e - 1 equations and
/// NonMinimalPresentation if an equation has a linear part.
std::size_t embedding_dimension(const LciPresentation& p);

/// True when every equation vanishes on the parametrization up to
/// 8·(max image degree). InvalidArgument without a parametrization or equations.
bool verify_parametrization(const LciPresentation& p);

struct TermRank {
    int degree;
    Integer rank;

    bool operator==(const TermRank&) const = default;
};

/// Ranks of Sym^(p-i) F ⊗ ∧^i G (F of rank e-1, G of rank e) at degree -p+i.
std::vector<TermRank> complex_term_ranks(std::size_t e, std::size_t p);

struct ObstructionReport {
    std::size_t e = 0;
    std::vector<TermRank> term_ranks; // of the complex in weight e + 1
    bool jacobian_in_m = false;
    Matrix phi_at_origin; // Sym^2 F ⊗ ∧^(e-1) G -> F ⊗ ∧^e G modulo m
    std::size_t coker_mod_m_dim = 0;
    bool nonzero_H_minus1 = false;
    std::pair<int, int> obstruction_position{0, 0};
    std::size_t total_degree = 0;
};

/// Certifies H^-1 ≠ 0 in weight e + 1: all Jacobian entries lie in m, so the
/// last differential vanishes modulo m and its cokernel has fibre dimension
/// e - 1. PlanarNoObstruction when e = 2.
ObstructionReport obstruction(const LciPresentation& p);

} // namespace curvess
