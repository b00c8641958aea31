#include "curvess/sparse_echelon.hpp"

#include "curvess/error.hpp"

namespace curvess {

SparseEchelon::Reduction SparseEchelon::reduce(const SparseVec& v) const
{
    Reduction out;
    SparseVec acc = v;
    while (!acc.empty()) {
        auto head = acc.begin();
        const std::uint32_t col = head->first;
        if (col >= pivots_.size())
            throw Error(ErrorKind::InvalidArgument, "column index out of range in reduction");
        const Rational coef = head->second;
        const auto& pivot = pivots_[col];
        if (!pivot) {
            out.remainder.emplace_hint(out.remainder.end(), col, coef);
            acc.erase(head);
            continue;
        }
        for (const auto& [j, c] : pivot->entries) {
            auto [it, inserted] = acc.try_emplace(j, 0);
            it->second -= coef * c;
            if (it->second == 0)
                acc.erase(it);
        }
        if (track_) {
            for (const auto& [s, c] : pivot->sources) {
                auto [it, inserted] = out.sources.try_emplace(s, 0);
                it->second += coef * c;
                if (it->second == 0)
                    out.sources.erase(it);
            }
        }
    }
    return out;
}

bool SparseEchelon::insert(const SparseVec& row, std::uint32_t source_id)
{
    Reduction red = reduce(row);
    if (red.remainder.empty())
        return false;

    const std::uint32_t pivot_col = red.remainder.begin()->first;
    const Rational inv = 1 / red.remainder.begin()->second;

    Row stored;
    stored.entries.reserve(red.remainder.size());
    for (const auto& [j, c] : red.remainder)
        stored.entries.emplace_back(j, c * inv);
    if (track_) {
        // remainder = input - sum sources[s] * input_s
        for (auto& [s, c] : red.sources)
            stored.sources.emplace(s, -c * inv);
        auto [it, inserted] = stored.sources.try_emplace(source_id, 0);
        it->second += inv;
        if (it->second == 0)
            stored.sources.erase(it);
    }
    pivots_[pivot_col] = std::move(stored);
    ++rank_;
    return true;
}

} // namespace curvess
