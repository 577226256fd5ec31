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

#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "lucastile/tiling_check.hpp"

namespace lucastile {
namespace {

CodeSet without_word(const CodeSet& code, std::size_t index)
{
    std::vector<ResidueVector> words(code.begin(), code.end());
    words.erase(words.begin() + static_cast<std::ptrdiff_t>(index));
    return CodeSet(code.dimension(), std::move(words));
}

/// One word replaced by a different, uniformly random word of Z_4^n.
CodeSet mutated(const CodeSet& code, std::mt19937_64& rng)
{
    const int n = code.dimension();
    std::vector<ResidueVector> words(code.begin(), code.end());
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
    std::uniform_int_distribution<std::uint64_t> packed(0, (std::uint64_t{1} << (2 * n)) - 1);
    auto& victim = words[pick(rng)];
    ResidueVector replacement = victim;
    while (replacement == victim) {
        replacement = ResidueVector::from_packed(n, packed(rng));
    }
    victim = replacement;
    return CodeSet(n, std::move(words));
}

TEST(TwinPairCheck, LagariasShorCodeTiles)
{
    for (int n = 3; n <= 11; n += 2) {
        const auto v = twin_pair_check(lagarias_shor_code(n));
        EXPECT_TRUE(v.ok) << "n=" << n;
        EXPECT_FALSE(v.has_witness());
        EXPECT_EQ(v.method, TilingMethod::TwinPair);
    }
}

TEST(TwinPairCheck, WrongSizeGivesSizeWitness)
{
    const auto v = twin_pair_check(without_word(lagarias_shor_code(3), 0));
    EXPECT_FALSE(v.ok);
    ASSERT_TRUE(std::holds_alternative<SizeWitness>(v.witness));
    EXPECT_EQ(std::get<SizeWitness>(v.witness).expected, 8U);
    EXPECT_EQ(std::get<SizeWitness>(v.witness).actual, 7U);
}

TEST(TwinPairCheck, OverlappingPairIsReported)
{
    // Replace 222 by 111: 000 and 111 differ by 1 everywhere.
    std::vector<ResidueVector> words;
    for (const auto& w : lagarias_shor_code(3)) {
        words.push_back(w == ResidueVector{2, 2, 2} ? ResidueVector{1, 1, 1} : w);
    }
    const auto v = twin_pair_check(CodeSet(3, words));
    EXPECT_FALSE(v.ok);
    ASSERT_TRUE(std::holds_alternative<PairWitness>(v.witness));
    const auto& p = std::get<PairWitness>(v.witness);
    EXPECT_FALSE(differs_by_two_somewhere(p.u, p.v));
    EXPECT_EQ(p.u, (ResidueVector{0, 0, 0}));
    EXPECT_EQ(p.v, (ResidueVector{1, 1, 1}));
}

TEST(VoxelCoverCheck, LagariasShorCodeCoversTorus)
{
    for (int n : {3, 5, 7}) {
        const auto v = voxel_cover_check(lagarias_shor_code(n));
        EXPECT_TRUE(v.ok) << "n=" << n;
        EXPECT_EQ(v.method, TilingMethod::VoxelCover);
    }
}

TEST(VoxelCoverCheck, MissingTileLeavesUncoveredVoxel)
{
    const auto code = lagarias_shor_code(3);
    const auto v = voxel_cover_check(without_word(code, 3));
    EXPECT_FALSE(v.ok);
    ASSERT_TRUE(std::holds_alternative<VoxelWitness>(v.witness));
    const auto& w = std::get<VoxelWitness>(v.witness);
    EXPECT_EQ(w.count, 0U);
    // The hole lies in the cube of the removed word.
    const auto removed = code.words()[3];
    for (int i = 0; i < 3; ++i) {
        const int offset = ((w.voxel[static_cast<std::size_t>(i)] - (removed[i] - 1)) % 4 + 4) % 4;
        EXPECT_TRUE(offset == 0 || offset == 1);
    }
}

TEST(VoxelCoverCheck, RefusesOverBudget)
{
    const auto code = lagarias_shor_code(5);
    EXPECT_THROW(voxel_cover_check(code, 1023), budget_exceeded);
    EXPECT_NO_THROW(voxel_cover_check(code, 1024));
    EXPECT_THROW(voxel_cover_check(lagarias_shor_code(11)), budget_exceeded);
}

TEST(TilingOracles, AgreeOnMutatedCodes)
{
    std::mt19937_64 rng(42);
    for (int n : {3, 5, 7}) {
        const auto code = lagarias_shor_code(n);
        for (int trial = 0; trial < 50; ++trial) {
            const auto broken = mutated(code, rng);
            const auto twin = twin_pair_check(broken);
            const auto voxel = voxel_cover_check(broken);
            ASSERT_EQ(twin.ok, voxel.ok) << "n=" << n << " trial=" << trial;
            EXPECT_FALSE(twin.ok);
            EXPECT_TRUE(twin.has_witness());
            EXPECT_TRUE(voxel.has_witness());
        }
    }
}

TEST(TilingOracles, AgreeOnRandomFullSizeCodes)
{
    // Random codes of size 2^n almost never tile; both oracles must say so together.
    std::mt19937_64 rng(99);
    for (int n : {2, 3, 4}) {
        std::uniform_int_distribution<std::uint64_t> packed(0, (std::uint64_t{1} << (2 * n)) - 1);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<ResidueVector> words;
            while (CodeSet(n, words).size() < (std::size_t{1} << n)) {
                words.push_back(ResidueVector::from_packed(n, packed(rng)));
            }
            const CodeSet code(n, words);
            ASSERT_EQ(twin_pair_check(code).ok, voxel_cover_check(code).ok) << "n=" << n;
        }
    }
}

TEST(TilingOracles, AgreeOnAKnownNonLagariasShorTiling)
{
    // The lattice tiling 2{0,1}^n is a tiling code for every n.
    for (int n = 1; n <= 6; ++n) {
        std::vector<ResidueVector> words;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            std::vector<int> e;
            for (int i = 0; i < n; ++i) {
                e.push_back(((mask >> i) & 1U) ? 2 : 0);
            }
            words.emplace_back(std::span<const int>(e));
        }
        const CodeSet code(n, words);
        EXPECT_TRUE(twin_pair_check(code).ok);
        EXPECT_TRUE(voxel_cover_check(code).ok);
    }
}

TEST(DisjointFromBase, Examples)
{
    EXPECT_TRUE(disjoint_from_base(ResidueVector{1, 3, 0}));
    EXPECT_FALSE(disjoint_from_base(ResidueVector::zero(3)));
    EXPECT_FALSE(disjoint_from_base(ResidueVector{2, 2, 2}));
}

TEST(DisjointFromBase, MeetingTilesAreUPlusZeroAndTwos)
{
    for (int n = 3; n <= 13; n += 2) {
        std::vector<ResidueVector> meeting;
        for (const auto& w : lagarias_shor_code(n)) {
            if (!disjoint_from_base(w)) {
                meeting.push_back(w);
            }
        }
        EXPECT_EQ(CodeSet(n, meeting), augmented_U(n)) << "n=" << n;
    }
}

TEST(DisjointFromBase, ImpliesGeometricDisjointness)
{
    // [0,2) and [v-1, v+1) along one axis are disjoint exactly when v = 3.
    for (int v = 0; v <= 3; ++v) {
        const bool disjoint = std::max(0, v - 1) >= std::min(2, v + 1);
        EXPECT_EQ(disjoint, v == 3);
    }
}

} // namespace
} // namespace lucastile
