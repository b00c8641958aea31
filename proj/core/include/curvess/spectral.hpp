#pragma once

#include "curvess/affine.hpp"
#include "curvess/lci.hpp"
#include "curvess/plane.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace curvess {

/// Plane singular point with its local analysis.
struct PlaneRecord {
    std::string label;
    std::optional<LocalInvariants> invariants; // absent = not analyzed
    std::optional<std::size_t> tail_rank;
};

/// Non-planar complete-intersection point.
struct LciRecord {
    std::string label;
    ObstructionReport obstruction;
    std::optional<std::size_t> delta;
    std::optional<std::size_t> r;
};

using SingularityRecord = std::variant<PlaneRecord, LciRecord>;

/// Integral projective curve: genus of the normalization plus its singular points.
struct CurveModel {
    std::size_t genus = 0;
    std::vector<SingularityRecord> singularities;
    std::string label;
};

struct GlobalInvariants {
    std::size_t delta_total = 0;
    std::size_t tau_total = 0; // plane points only
    std::size_t mu_total = 0;  // 2·delta - R, summing Milnor's formula
    std::size_t R = 0;         // sum of (r - 1)
    std::size_t p_a = 0;
    std::size_t b0 = 1, b1 = 0, b2 = 1;
};

/// MissingBranchData if some point has no delta or r.
GlobalInvariants global_invariants(const CurveModel& c);

enum class Verdict { Degenerates, FailsViaTau, FailsViaNonPlanar, Undetermined };
std::string_view to_string(Verdict v);

enum class EntryKind { Exact, Symbolic, Positive };

struct Entry {
    EntryKind kind = EntryKind::Exact;
    AffineExpr value; // unused for Positive

    static Entry of(const AffineExpr& e)
    {
        return {e.is_constant() ? EntryKind::Exact : EntryKind::Symbolic, e};
    }
    static Entry positive() { return {EntryKind::Positive, {}}; }
    bool is_zero() const { return kind == EntryKind::Exact && value.constant() == 0; }
    bool operator==(const Entry&) const = default;
};

std::string to_string(const Entry& e);

using Position = std::pair<int, int>; // (column, q)

struct SSPage {
    std::string name;
    std::string column_name = "p";
    std::map<Position, Entry> entries;
    std::map<Position, Entry> d1_ranks; // rank of d1 leaving a position (E1 pages)
    ConstraintSystem constraints;
    Verdict verdict = Verdict::Undetermined;
    int tail_window = 4;
    std::vector<std::string> notes;

    /// Entry at a position, exact 0 if absent.
    Entry at(int col, int q) const;
};

struct VerdictReport {
    Verdict verdict = Verdict::Undetermined;
    std::optional<std::size_t> witness; // index into the singularity list
    std::string witness_label;
    std::optional<ObstructionReport> obstruction;
    std::optional<Position> obstruction_position;
    std::optional<bool> tau_equals_2delta_minus_R; // planar curves with branch data
    /// The identity tau = 2·delta - R holds exactly when the verdict is Degenerates.
    std::optional<bool> ledger_consistent;
};

/// Degenerates iff every point is a plane point with tau = mu. Raises
/// UnanalyzedSingularity for plane records without invariants.
VerdictReport degeneration_verdict(const CurveModel& c);

/// E1 of the Hodge-to-de Rham sequence for a curve with plane singularities,
/// tails shown for 1 <= p <= tail_window. NonPlanarInput otherwise.
SSPage e1_page(const CurveModel& c, int tail_window = 4);

/// E2 with the unknowns kappa = dim ker u, c = dim coker u, k_v = dim ker v,
/// simplified by every identity the verdict makes available.
SSPage e2_page(const CurveModel& c, int tail_window = 4);

struct HCPages {
    std::map<int, SSPage> per_m; // E2 of F_m, column a = p - m
    Verdict verdict = Verdict::Undetermined;
    bool agrees_with_hodge = false;
};

HCPages hc_pages(const CurveModel& c, std::pair<int, int> window = {-2, 4}, int tail_window = 4);

/// True when no d_r (r >= 2) joins two possibly-nonzero entries of the page.
bool higher_differentials_vanish(const SSPage& page);

/// Under degeneration: E2 total degree 1 sums to b1 and total degree 2 to b2,
/// as consequences of the page constraints.
bool betti_consistent(const SSPage& e2, const GlobalInvariants& g);

/// "text" (fixed-width grid, q descending) or "json". UnknownFormat otherwise.
std::string render_page(const SSPage& page, std::string_view format);

} // namespace curvess
