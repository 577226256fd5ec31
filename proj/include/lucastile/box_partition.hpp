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

#ifndef LUCASTILE_BOX_PARTITION_HPP
#define LUCASTILE_BOX_PARTITION_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lucastile/circulant_code.hpp"
#include "lucastile/errors.hpp"
#include "lucastile/index_set.hpp"
#include "lucastile/residue_vector.hpp"

namespace lucastile {

/// One factor of a box inside [0,2)^n.
enum class Factor { Lo, Hi, Full }; // [0,1), [1,2), [0,2)

enum class FactorSelector { Lo, Hi, Full, LoOrHi };

inline std::string_view to_string(Factor f)
{
    switch (f) {
    case Factor::Lo: return "[0,1)";
    case Factor::Hi: return "[1,2)";
    case Factor::Full: return "[0,2)";
    }
    return "?";
}

/**
 * The intersection of [0,2)^n with [0,2)^n + v - 1, for a word v without entries 3.
 *
 * Voxels of [0,2)^n are addressed by n-bit masks: bit i-1 set means the
 * unit voxel lies in [1,2) along coordinate i. The box is then the set of
 * voxels x with (x & ~full_mask) == hi_mask.
 */
class PartBox {
public:
    static std::optional<PartBox> from_source(const ResidueVector& v)
    {
        PartBox box;
        box.source_ = v;
        for (int i = 0; i < v.dimension(); ++i) {
            const std::uint64_t bit = std::uint64_t{1} << i;
            switch (v[i]) {
            case 0: break;
            case 1: box.full_mask_ |= bit; break;
            case 2: box.hi_mask_ |= bit; break;
            default: return std::nullopt;
            }
        }
        return box;
    }

    int dimension() const noexcept { return source_.dimension(); }
    const ResidueVector& source() const noexcept { return source_; }
    std::uint64_t full_mask() const noexcept { return full_mask_; }
    std::uint64_t hi_mask() const noexcept { return hi_mask_; }

    /// Factor at a 1-based position.
    Factor factor(int position) const
    {
        detail::require(position >= 1 && position <= dimension(), "PartBox::factor: position out of range");
        const std::uint64_t bit = std::uint64_t{1} << (position - 1);
        if ((full_mask_ & bit) != 0) {
            return Factor::Full;
        }
        return (hi_mask_ & bit) != 0 ? Factor::Hi : Factor::Lo;
    }

    std::vector<Factor> factors() const
    {
        std::vector<Factor> out;
        for (int p = 1; p <= dimension(); ++p) {
            out.push_back(factor(p));
        }
        return out;
    }

    /// Number of Full factors; the volume is 2^weight.
    int weight() const noexcept { return std::popcount(full_mask_); }
    std::uint64_t volume() const noexcept { return std::uint64_t{1} << weight(); }

    bool contains_voxel(std::uint64_t voxel) const noexcept { return (voxel & ~full_mask_) == hi_mask_; }

    template <typename Visit>
    void for_each_voxel(Visit&& visit) const
    {
        std::uint64_t s = full_mask_;
        while (true) {
            visit(hi_mask_ | s);
            if (s == 0) {
                break;
            }
            s = (s - 1) & full_mask_;
        }
    }

    friend bool operator==(const PartBox& a, const PartBox& b) { return a.source_ == b.source_; }

private:
    ResidueVector source_;
    std::uint64_t full_mask_ = 0;
    std::uint64_t hi_mask_ = 0;
};

/// Entry 0 -> Lo, 1 -> Full, 2 -> Hi; an entry 3 empties the intersection.
inline std::optional<PartBox> intersect_with_base(const ResidueVector& v)
{
    return PartBox::from_source(v);
}

enum class FamilyLabel { F, G, Sub };

class BoxFamily {
public:
    BoxFamily(int dimension, std::vector<PartBox> boxes, FamilyLabel label)
        : dimension_(dimension), label_(label), boxes_(std::move(boxes))
    {
        for (const auto& b : boxes_) {
            detail::require(b.dimension() == dimension_, "BoxFamily: box of the wrong dimension");
        }
        std::sort(boxes_.begin(), boxes_.end(),
                  [](const PartBox& a, const PartBox& b) { return a.source() < b.source(); });
    }

    int dimension() const noexcept { return dimension_; }
    FamilyLabel label() const noexcept { return label_; }
    std::size_t size() const noexcept { return boxes_.size(); }
    std::span<const PartBox> boxes() const noexcept { return boxes_; }
    auto begin() const noexcept { return boxes_.begin(); }
    auto end() const noexcept { return boxes_.end(); }

    std::vector<ResidueVector> sources() const
    {
        std::vector<ResidueVector> out;
        for (const auto& b : boxes_) {
            out.push_back(b.source());
        }
        return out;
    }

private:
    int dimension_;
    FamilyLabel label_;
    std::vector<PartBox> boxes_;
};

namespace detail {

inline BoxFamily family_from_words(int n, std::span<const ResidueVector> words, FamilyLabel label)
{
    std::vector<PartBox> boxes;
    boxes.reserve(words.size());
    for (const auto& w : words) {
        auto box = intersect_with_base(w);
        if (!box) {
            throw std::logic_error("box family: generating word " + w.to_string() + " misses the base cube");
        }
        boxes.push_back(*box);
    }
    return BoxFamily(n, std::move(boxes), label);
}

} // namespace detail

/// F(n): boxes cut from [0,2)^n by the tiles of U(n) u {0, (2,...,2)}.
inline BoxFamily build_F(int n)
{
    detail::require_odd_at_least(n, 3, "build_F");
    const CodeSet words = augmented_U(n);
    return detail::family_from_words(n, words.words(), FamilyLabel::F);
}

/**
 * G(n-1) inside F(n): boxes generated by nonempty sums of rows r_1..r_{n-1}
 * of A(n) over independent sets of the cycle on [n-1].
 */
inline BoxFamily build_G(int n)
{
    detail::require_odd_at_least(n, 3, "build_G");
    const CirculantMatrix a = lagarias_shor_matrix(n);
    std::vector<ResidueVector> words;
    for (const IndexSet& s : independent_sets(n - 1, true)) {
        if (!s.empty()) {
            words.push_back(row_sum(a, s));
        }
    }
    return detail::family_from_words(n, words, FamilyLabel::G);
}

inline std::uint64_t volume_sum(const BoxFamily& fam)
{
    std::uint64_t total = 0;
    for (const auto& b : fam) {
        total += b.volume();
    }
    return total;
}

inline bool matches(Factor f, FactorSelector which) noexcept
{
    switch (which) {
    case FactorSelector::Lo: return f == Factor::Lo;
    case FactorSelector::Hi: return f == Factor::Hi;
    case FactorSelector::Full: return f == Factor::Full;
    case FactorSelector::LoOrHi: return f != Factor::Full;
    }
    return false;
}

/// Boxes whose factor at `position` (1-based) matches `which`.
inline BoxFamily subfamily(const BoxFamily& fam, int position, FactorSelector which)
{
    detail::require(position >= 1 && position <= fam.dimension(),
                    "subfamily: position " + std::to_string(position) + " outside [1, " +
                        std::to_string(fam.dimension()) + "]");
    std::vector<PartBox> kept;
    for (const auto& b : fam) {
        if (matches(b.factor(position), which)) {
            kept.push_back(b);
        }
    }
    return BoxFamily(fam.dimension(), std::move(kept), FamilyLabel::Sub);
}

/// k -> M_k, the number of boxes of volume exactly 2^k.
inline std::map<int, std::uint64_t> weight_census(const BoxFamily& fam)
{
    std::map<int, std::uint64_t> census;
    for (const auto& b : fam) {
        ++census[b.weight()];
    }
    return census;
}

struct VoxelCoverResult {
    bool ok = false;
    std::uint64_t voxels = 0;
    std::optional<std::uint64_t> bad_voxel; // first voxel violating the condition
    std::uint32_t bad_count = 0;
};

namespace detail {

inline std::vector<std::uint8_t> voxel_cover_counts(const BoxFamily& fam)
{
    const int n = fam.dimension();
    require(n <= 30, "voxel cover: n too large for a dense voxel grid");
    std::vector<std::uint8_t> cover(std::size_t{1} << n, 0);
    for (const auto& b : fam) {
        b.for_each_voxel([&](std::uint64_t x) {
            auto& c = cover[static_cast<std::size_t>(x)];
            if (c < 255) {
                ++c;
            }
        });
    }
    return cover;
}

} // namespace detail

/// Every unit voxel of [0,2)^n is covered by exactly one box.
inline VoxelCoverResult verify_partition(const BoxFamily& fam)
{
    const auto cover = detail::voxel_cover_counts(fam);
    VoxelCoverResult result{true, cover.size(), std::nullopt, 0};
    for (std::size_t x = 0; x < cover.size(); ++x) {
        if (cover[x] != 1) {
            result = {false, cover.size(), x, cover[x]};
            break;
        }
    }
    return result;
}

/// No unit voxel is covered twice.
inline VoxelCoverResult verify_disjoint(const BoxFamily& fam)
{
    const auto cover = detail::voxel_cover_counts(fam);
    VoxelCoverResult result{true, cover.size(), std::nullopt, 0};
    for (std::size_t x = 0; x < cover.size(); ++x) {
        if (cover[x] > 1) {
            result = {false, cover.size(), x, cover[x]};
            break;
        }
    }
    return result;
}

/**
 * True iff the union of `fam` is an i-cylinder for i = `position`: every
 * column of two voxels along axis i is covered entirely or not at all.
 */
inline bool cylinder_check(const BoxFamily& fam, int position)
{
    const int n = fam.dimension();
    detail::require(position >= 1 && position <= n, "cylinder_check: position out of range");
    const auto cover = detail::voxel_cover_counts(fam);
    const std::uint64_t bit = std::uint64_t{1} << (position - 1);
    for (std::uint64_t x = 0; x < cover.size(); ++x) {
        if ((x & bit) != 0) {
            continue;
        }
        if ((cover[x] != 0) != (cover[x | bit] != 0)) {
            return false;
        }
    }
    return true;
}

/// A sum of rows of A(n) together with the index set that produced it.
struct RowSum {
    IndexSet rows;
    ResidueVector word;
    friend bool operator==(const RowSum&, const RowSum&) = default;
};

/**
 * R: sums of rows r_i of A(n) over the independent sets I of the path on
 * {2, ..., n-3} (2 and n-3 not adjacent), the empty sum included.
 */
inline std::vector<RowSum> build_R(int n)
{
    detail::require_odd_at_least(n, 5, "build_R");
    const CirculantMatrix a = lagarias_shor_matrix(n);
    std::vector<RowSum> out;
    const int path_length = n - 4; // positions 2..n-3
    for (const IndexSet& s : independent_sets(path_length, false)) {
        const IndexSet rows = s.shifted(1);
        out.push_back({rows, row_sum(a, rows)});
    }
    return out;
}

inline CodeSet R_code(int n)
{
    std::vector<ResidueVector> words;
    for (const auto& r : build_R(n)) {
        words.push_back(r.word);
    }
    return CodeSet(n, std::move(words), CodeLabel::R);
}

/**
 * b(u) = sum of h_{i-1} over i in I, where h are the rows of A(n-2) and u is
 * the sum of rows r_i of A(n) over I.
 */
inline ResidueVector bijection_b(const ResidueVector& u, IndexSet rows)
{
    const int n = u.dimension();
    detail::require_odd_at_least(n, 5, "bijection_b");
    for (int p : rows.positions()) {
        detail::require(p >= 2 && p <= n - 3, "bijection_b: index " + std::to_string(p) + " outside {2..n-3}");
    }
    detail::require(is_independent(rows, n, false), "bijection_b: index set has adjacent members");
    detail::require(row_sum(lagarias_shor_matrix(n), rows) == u, "bijection_b: word is not the sum over the index set");
    return row_sum(lagarias_shor_matrix(n - 2), rows.shifted(-1));
}

struct BijectionReport {
    int n = 0;
    std::size_t sources = 0;
    std::size_t targets = 0;
    bool injective = false;
    bool image_exact = false;
    bool ok = false;
};

/// Checks that b maps R onto the words of U(n-2) u {0} whose last entry is 0.
inline BijectionReport verify_bijection(int n)
{
    detail::require_odd_at_least(n, 5, "verify_bijection");
    BijectionReport report;
    report.n = n;
    const auto r = build_R(n);
    report.sources = r.size();

    std::set<ResidueVector> image;
    for (const auto& entry : r) {
        image.insert(bijection_b(entry.word, entry.rows));
    }
    report.injective = image.size() == r.size();

    std::set<ResidueVector> targets;
    targets.insert(ResidueVector::zero(n - 2));
    if (n - 2 >= 3) {
        for (const auto& w : enumerate_U(n - 2)) {
            if (w[n - 3] == 0) {
                targets.insert(w);
            }
        }
    }
    report.targets = targets.size();
    report.image_exact = image == targets;
    report.ok = report.injective && report.image_exact;
    return report;
}

} // namespace lucastile

#endif
