// Copyright 2026 The lucastile Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LUCASTILE_INDEX_SET_HPP
#define LUCASTILE_INDEX_SET_HPP

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "lucastile/errors.hpp"

namespace lucastile {

/// A subset of [n] = {1, ..., n} for n <= 63. Positions are 1-based.
class IndexSet {
public:
    IndexSet() = default;

    IndexSet(std::initializer_list<int> positions)
    {
        for (int p : positions) {
            insert(p);
        }
    }

    static IndexSet from_mask(std::uint64_t mask)
    {
        IndexSet s;
        s.mask_ = mask;
        return s;
    }

    void insert(int position)
    {
        detail::require(position >= 1 && position <= 63, "IndexSet: position out of range");
        mask_ |= std::uint64_t{1} << (position - 1);
    }

    bool contains(int position) const noexcept
    {
        return position >= 1 && position <= 63 && ((mask_ >> (position - 1)) & 1U) != 0;
    }

    bool empty() const noexcept { return mask_ == 0; }
    int size() const noexcept { return std::popcount(mask_); }
    std::uint64_t mask() const noexcept { return mask_; }

    /// Largest member, or 0 when empty.
    int max() const noexcept { return mask_ == 0 ? 0 : 64 - std::countl_zero(mask_); }
    int min() const noexcept { return mask_ == 0 ? 0 : std::countr_zero(mask_) + 1; }

    std::vector<int> positions() const
    {
        std::vector<int> out;
        for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
            out.push_back(std::countr_zero(m) + 1);
        }
        return out;
    }

    /// {i + delta : i in this}; every shifted element must stay in [1, 63].
    IndexSet shifted(int delta) const
    {
        IndexSet out;
        for (int p : positions()) {
            out.insert(p + delta);
        }
        return out;
    }

    friend bool operator==(const IndexSet&, const IndexSet&) = default;
    friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

private:
    std::uint64_t mask_ = 0;
};

/// True iff no two members of `s` are adjacent in the path 1-2-...-n, or in
/// the cycle when `cyclic` (then 1 and n are adjacent; for n = 1 the single
/// vertex is adjacent to itself).
inline bool is_independent(IndexSet s, int n, bool cyclic)
{
    const std::uint64_t m = s.mask();
    if ((m & (m << 1)) != 0) {
        return false;
    }
    if (cyclic && n >= 1 && s.contains(1) && s.contains(n)) {
        return false;
    }
    return true;
}

/**
 * All independent sets of the path (or cycle) on [n], including the empty
 * set, in increasing order of their bitmask.
 */
inline std::vector<IndexSet> independent_sets(int n, bool cyclic)
{
    detail::require(n >= 1 && n <= 63, "independent_sets: n must be in [1, 63]");
    std::vector<IndexSet> out;
    // Depth-first over positions n..1, so each set is emitted exactly once.
    struct Frame {
        int next;          // next position to decide, counting down
        std::uint64_t mask;
    };
    std::vector<Frame> frames{{n, 0}};
    while (!frames.empty()) {
        Frame f = frames.back();
        frames.pop_back();
        if (f.next == 0) {
            out.push_back(IndexSet::from_mask(f.mask));
            continue;
        }
        frames.push_back({f.next - 1, f.mask});
        const std::uint64_t bit = std::uint64_t{1} << (f.next - 1);
        const bool right_taken = (f.mask & (bit << 1)) != 0;
        const bool wraps = cyclic && f.next == 1 && (n == 1 || (f.mask & (std::uint64_t{1} << (n - 1))) != 0);
        if (!right_taken && !wraps) {
            frames.push_back({f.next - 1, f.mask | bit});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace lucastile

#endif
