#pragma once

#include "curvess/linalg.hpp"
#include "curvess/poly.hpp"
#include "curvess/sparse_echelon.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace curvess {

/// Certificate target - sum cofactors[i]·generators[i] ∈ m^(order_verified + 1).
struct MembershipWitness {
    std::vector<Poly> cofactors;
    std::uint32_t order_verified = 0;
};

struct JetOptions {
    /// 0 keeps the natural row order; anything else shuffles rows before
    /// elimination, which yields a different (equally valid) witness.
    std::uint64_t seed = 0;
    /// Needed by membership_with_witness; costs memory on large truncations.
    bool track_sources = false;
};

/// The quotient R/(I + m^(T+1)) of the power-series ring R by an ideal I,
/// realized as jets of degree <= T modulo the span of the truncated multiples
/// m·g. Pivots are taken on the smallest monomial so the standard monomials
/// form a downward-closed staircase, as for a local ordering.
///
/// Construction fails with NotMPrimary unless every monomial of some degree
/// N <= T is a pivot; that N certifies m^N ⊆ I, so the quotient is exact.
class JetAlgebra {
public:
    static JetAlgebra build(std::vector<Poly> generators, std::uint32_t truncation,
                            JetOptions options = {});

    /// T0 = 4 + 2·(max generator degree), doubled on NotMPrimary until `cap`.
    static JetAlgebra build_adaptive(std::vector<Poly> generators, std::uint32_t cap = 64,
                                     JetOptions options = {});
    static std::uint32_t default_truncation(const std::vector<Poly>& generators);

    const VarList& ambient() const { return ambient_; }
    const std::vector<Poly>& generators() const { return generators_; }
    std::uint32_t truncation_order() const { return truncation_; }
    std::uint32_t primality_bound() const { return primality_bound_; }

    /// Standard monomials in ascending graded-lex order.
    const std::vector<Monomial>& basis() const { return basis_; }
    std::size_t colength() const { return basis_.size(); }

    /// Coordinates of the class of p over `basis()`.
    Vector normal_form(const Poly& p) const;
    Poly normal_form_poly(const Poly& p) const;
    /// Polynomial representative sum coords[i]·basis[i].
    Poly lift(const Vector& coords) const;

    /// Requires normal_form(p) = 0 (else NotInIdeal) and order <= T.
    MembershipWitness membership_with_witness(const Poly& p, std::uint32_t order) const;

private:
    JetAlgebra() = default;

    SparseVec to_jet(const Poly& p) const;

    VarList ambient_;
    std::vector<Poly> generators_;
    std::uint32_t truncation_ = 0;
    std::uint32_t primality_bound_ = 0;
    std::vector<Monomial> monomials_; // column index -> monomial, ascending
    std::vector<std::int64_t> basis_index_; // column -> position in basis_, or -1
    std::vector<Monomial> basis_;
    std::shared_ptr<const SparseEchelon> echelon_;
};

/// All monomials in `arity` variables of degree <= max_degree, ascending grlex.
std::vector<Monomial> monomials_up_to(std::size_t arity, std::uint32_t max_degree);

/// Position of m in the list produced by monomials_up_to(arity, ·).
std::uint32_t monomial_rank(const Monomial& m);

} // namespace curvess
