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

#ifndef LUCASTILE_TILING_CHECK_HPP
#define LUCASTILE_TILING_CHECK_HPP

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lucastile/circulant_code.hpp"
#include "lucastile/errors.hpp"
#include "lucastile/residue_vector.hpp"

namespace lucastile {

enum class TilingMethod { TwinPair, VoxelCover };

inline std::string_view to_string(TilingMethod m)
{
    return m == TilingMethod::TwinPair ? "twin_pair" : "voxel_cover";
}

struct SizeWitness {
    std::uint64_t expected;
    std::uint64_t actual;
    friend bool operator==(const SizeWitness&, const SizeWitness&) = default;
};

/// Two words with no coordinate difference equal to 2 mod 4: their cubes overlap.
struct PairWitness {
    ResidueVector u;
    ResidueVector v;
    friend bool operator==(const PairWitness&, const PairWitness&) = default;
};

/// A unit voxel of the torus [0,4)^n covered `count` != 1 times.
struct VoxelWitness {
    std::vector<int> voxel;
    std::uint32_t count;
    friend bool operator==(const VoxelWitness&, const VoxelWitness&) = default;
};

using TilingWitness = std::variant<std::monostate, SizeWitness, PairWitness, VoxelWitness>;

struct TilingVerdict {
    TilingMethod method;
    int dimension = 0;
    std::uint64_t code_size = 0;
    bool ok = false;
    TilingWitness witness;

    bool has_witness() const noexcept { return !std::holds_alternative<std::monostate>(witness); }
    friend bool operator==(const TilingVerdict&, const TilingVerdict&) = default;
};

/// Voxel budget for voxel_cover_check: 4^9 unit voxels unless overridden.
inline constexpr std::uint64_t default_voxel_budget = std::uint64_t{1} << 18;

/// Default budget, overridable through LUCASTILE_VOXEL_BUDGET.
inline std::uint64_t voxel_budget_from_environment()
{
    if (const char* text = std::getenv("LUCASTILE_VOXEL_BUDGET"); text != nullptr && *text != '\0') {
        char* end = nullptr;
        const unsigned long long value = std::strtoull(text, &end, 10);
        if (end != nullptr && *end == '\0' && value > 0) {
            return value;
        }
    }
    return default_voxel_budget;
}

/**
 * Checks the twin-pair criterion for side-2 cubes placed with period 4:
 * the family [0,2)^n + code - 1 + 4Z^n tiles R^n iff |code| = 2^n and every
 * two distinct words differ by exactly 2 mod 4 in some coordinate.
 */
inline TilingVerdict twin_pair_check(const CodeSet& code)
{
    const int n = code.dimension();
    TilingVerdict verdict{TilingMethod::TwinPair, n, code.size(), false, {}};
    const std::uint64_t expected = std::uint64_t{1} << n;
    if (code.size() != expected) {
        verdict.witness = SizeWitness{expected, code.size()};
        return verdict;
    }
    const auto words = code.words();
    const std::uint64_t lo = ResidueVector::low_lanes(n);
    for (std::size_t a = 0; a < words.size(); ++a) {
        const std::uint64_t x = words[a].packed();
        for (std::size_t b = a + 1; b < words.size(); ++b) {
            const std::uint64_t d = x ^ words[b].packed();
            if ((((d >> 1) & lo) & ~d) == 0) {
                verdict.witness = PairWitness{words[a], words[b]};
                return verdict;
            }
        }
    }
    verdict.ok = true;
    return verdict;
}

/**
 * Exact-cover oracle: splits the torus [0,4)^n into 4^n unit voxels and
 * counts how many translates [0,2)^n + v - 1 (mod 4) cover each one.
 * Throws budget_exceeded instead of truncating when 4^n > budget.
 */
inline TilingVerdict voxel_cover_check(const CodeSet& code, std::uint64_t budget = voxel_budget_from_environment())
{
    const int n = code.dimension();
    if (n > 31 || (std::uint64_t{1} << (2 * n)) > budget) {
        throw budget_exceeded("voxel_cover_check: 4^" + std::to_string(n) +
                              " voxels exceed the budget of " + std::to_string(budget));
    }
    TilingVerdict verdict{TilingMethod::VoxelCover, n, code.size(), false, {}};

    // Voxel index packs coordinate c_i in {0..3} into lane i, the same
    // layout as ResidueVector, so a voxel index is a ResidueVector.
    const std::size_t voxels = std::size_t{1} << (2 * n);
    std::vector<std::uint32_t> cover(voxels, 0);
    const std::size_t corners = std::size_t{1} << n;
    const ResidueVector ones = ResidueVector::constant(n, 1);
    for (const auto& v : code) {
        const ResidueVector origin = v - ones;
        // Bit i of corner c selects offset 0 or 1 in coordinate i.
        for (std::size_t c = 0; c < corners; ++c) {
            std::uint64_t offset = 0;
            for (int i = 0; i < n; ++i) {
                if ((c >> i) & 1U) {
                    offset |= std::uint64_t{1} << (2 * (n - 1 - i));
                }
            }
            const ResidueVector voxel = origin + ResidueVector::from_packed(n, offset);
            ++cover[static_cast<std::size_t>(voxel.packed())];
        }
    }
    for (std::size_t index = 0; index < voxels; ++index) {
        if (cover[index] != 1) {
            const auto entries = ResidueVector::from_packed(n, index).entries();
            verdict.witness = VoxelWitness{std::vector<int>(entries.begin(), entries.end()), cover[index]};
            return verdict;
        }
    }
    verdict.ok = true;
    return verdict;
}

/// True iff v has an entry 3, which makes [0,2)^n + v - 1 disjoint from [0,2)^n.
inline bool disjoint_from_base(const ResidueVector& v)
{
    return v.count(3) > 0;
}

} // namespace lucastile

#endif
