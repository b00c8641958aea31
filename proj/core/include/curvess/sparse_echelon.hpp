#pragma once

#include "curvess/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace curvess {

using SparseVec = std::map<std::uint32_t, Rational>;

/// Incremental row echelon form over Q with sparse rows. The pivot of a row is
/// its smallest column index, so columns must be numbered in the order in
/// which they should be eliminated first (ascending monomial order for local
/// rings, ascending t-order for value semigroups).
///
/// With source tracking on, every stored row remembers how it was combined
/// from the inserted input rows; `reduce` then reports a certificate
/// v - remainder = sum_s sources[s] * input_s.
class SparseEchelon {
public:
    SparseEchelon(std::size_t columns, bool track_sources)
        : pivots_(columns), track_(track_sources) {}

    /// Adds the row produced by input `source_id`. Returns true when the row
    /// was independent of the rows seen so far.
    bool insert(const SparseVec& row, std::uint32_t source_id);

    struct Reduction {
        SparseVec remainder; // supported on non-pivot columns only
        SparseVec sources;   // empty unless sources are tracked
    };
    Reduction reduce(const SparseVec& v) const;

    std::size_t columns() const { return pivots_.size(); }
    bool is_pivot(std::uint32_t column) const { return pivots_.at(column).has_value(); }
    std::size_t rank() const { return rank_; }
    bool tracks_sources() const { return track_; }

private:
    struct Row {
        std::vector<std::pair<std::uint32_t, Rational>> entries; // sorted, entries[0] = (pivot, 1)
        SparseVec sources;
    };

    std::vector<std::optional<Row>> pivots_;
    std::size_t rank_ = 0;
    bool track_;
};

} // namespace curvess
