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
#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "lucastile/circulant_code.hpp"
#include "lucastile/lucas_cube.hpp"
#include "reference.hpp"

namespace lucastile {
namespace {

std::set<std::string> strings(const CodeSet& c)
{
    std::set<std::string> out;
    for (const auto& w : c) {
        out.insert(w.to_string());
    }
    return out;
}

std::set<reference::Word> unpacked(const CodeSet& c)
{
    std::set<reference::Word> out;
    for (const auto& w : c) {
        const auto e = w.entries();
        out.insert(reference::Word(e.begin(), e.end()));
    }
    return out;
}

ResidueVector random_word(std::mt19937_64& rng, int n)
{
    std::uniform_int_distribution<int> residue(0, 3);
    std::vector<int> e(static_cast<std::size_t>(n));
    for (auto& x : e) {
        x = residue(rng);
    }
    return ResidueVector(std::span<const int>(e));
}

// ------------------------------------------------------------ ResidueVector

TEST(ResidueVector, RejectsEntriesOutsideZ4)
{
    EXPECT_THROW((ResidueVector{1, 4}), precondition_error);
    EXPECT_THROW((ResidueVector{-1}), precondition_error);
    EXPECT_THROW(ResidueVector::parse("15"), precondition_error);
    EXPECT_THROW(ResidueVector::zero(33), precondition_error);
}

TEST(ResidueVector, PackedArithmeticMatchesUnpacked)
{
    std::mt19937_64 rng(20261018);
    std::uniform_int_distribution<int> dim(1, ResidueVector::max_dimension);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = dim(rng);
        const auto a = random_word(rng, n);
        const auto b = random_word(rng, n);
        const auto ea = a.entries();
        const auto eb = b.entries();
        reference::Word sum;
        reference::Word diff;
        int threes = 0;
        int zeros = 0;
        bool two_apart = false;
        for (int i = 0; i < n; ++i) {
            const int x = ea[static_cast<std::size_t>(i)];
            const int y = eb[static_cast<std::size_t>(i)];
            sum.push_back((x + y) % 4);
            diff.push_back(((x - y) % 4 + 4) % 4);
            threes += x == 3;
            zeros += x == 0;
            two_apart = two_apart || ((x - y) % 4 + 4) % 4 == 2;
        }
        const auto s = (a + b).entries();
        const auto d = (a - b).entries();
        ASSERT_EQ(reference::Word(s.begin(), s.end()), sum);
        ASSERT_EQ(reference::Word(d.begin(), d.end()), diff);
        ASSERT_EQ(a.count(3), threes);
        ASSERT_EQ(a.count(0), zeros);
        ASSERT_EQ(differs_by_two_somewhere(a, b), two_apart);
        ASSERT_EQ(ResidueVector::parse(a.to_string()), a);
        ASSERT_EQ(a.negated() + a, ResidueVector::zero(n));
    }
}

TEST(ResidueVector, OrderingIsLexicographic)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        const auto a = random_word(rng, 9);
        const auto b = random_word(rng, 9);
        const auto ea = a.entries();
        const auto eb = b.entries();
        EXPECT_EQ(a < b, ea < eb);
    }
}

// ------------------------------------------------------------ circulant rows

TEST(CirculantRows, ThreeByThree)
{
    const auto m = circulant_rows(3, ResidueVector{1, 2, 0});
    ASSERT_EQ(m.dimension(), 3);
    EXPECT_EQ(m.row(1), (ResidueVector{1, 2, 0}));
    EXPECT_EQ(m.row(2), (ResidueVector{0, 1, 2}));
    EXPECT_EQ(m.row(3), (ResidueVector{2, 0, 1}));
}

TEST(CirculantRows, MatchesDisplayedA5)
{
    const auto m = circulant_rows(5, ResidueVector{1, 2, 0, 0, 0});
    const std::vector<std::string> expected{"12000", "01200", "00120", "00012", "20001"};
    for (int i = 1; i <= 5; ++i) {
        EXPECT_EQ(m.row(i).to_string(), expected[static_cast<std::size_t>(i - 1)]);
    }
    EXPECT_EQ(m, lagarias_shor_matrix(5));
}

TEST(CirculantRows, SingleRowAndMismatch)
{
    const auto m = circulant_rows(1, ResidueVector{1});
    ASSERT_EQ(m.dimension(), 1);
    EXPECT_EQ(m.row(1), ResidueVector{1});
    EXPECT_THROW(circulant_rows(4, ResidueVector{1, 2, 0}), precondition_error);
}

TEST(Transpose, ThreeByThreeAndInvolution)
{
    const auto t = transpose(lagarias_shor_matrix(3));
    EXPECT_EQ(t.row(1), (ResidueVector{1, 0, 2}));
    EXPECT_EQ(t.row(2), (ResidueVector{2, 1, 0}));
    EXPECT_EQ(t.row(3), (ResidueVector{0, 2, 1}));
    EXPECT_EQ(transpose(lagarias_shor_matrix(1)), lagarias_shor_matrix(1));
    EXPECT_EQ(transpose(transpose(lagarias_shor_matrix(5))), lagarias_shor_matrix(5));
}

TEST(Transpose, AgreesWithEntrywiseTranspose)
{
    for (int n : {2, 3, 4, 7, 10}) {
        const auto t = transpose(lagarias_shor_matrix(n));
        const auto ref = reference::transposed(reference::circulant(n));
        for (int i = 1; i <= n; ++i) {
            const auto e = t.row(i).entries();
            EXPECT_EQ(reference::Word(e.begin(), e.end()), ref[static_cast<std::size_t>(i - 1)]) << "n=" << n;
        }
    }
}

// ---------------------------------------------------------- subset row sums

TEST(SubsetRowSums, ThreeByThree)
{
    const auto c = subset_row_sums(lagarias_shor_matrix(3));
    EXPECT_EQ(strings(c), (std::set<std::string>{"000", "120", "012", "201", "132", "321", "213", "333"}));
}

TEST(SubsetRowSums, OneByOneAndFive)
{
    EXPECT_EQ(strings(subset_row_sums(lagarias_shor_matrix(1))), (std::set<std::string>{"0", "1"}));
    EXPECT_EQ(subset_row_sums(lagarias_shor_matrix(5)).size(), 32U);
}

TEST(SubsetRowSums, GrayCodeMatchesDirectSummation)
{
    for (int n = 1; n <= 12; ++n) {
        const auto a = lagarias_shor_matrix(n);
        EXPECT_EQ(unpacked(subset_row_sums(a)), reference::subset_sums(reference::circulant(n))) << "n=" << n;
        EXPECT_EQ(unpacked(subset_row_sums(transpose(a))),
                  reference::subset_sums(reference::transposed(reference::circulant(n))))
            << "n=" << n;
    }
}

TEST(SubsetRowSums, AllSumsDistinctAndContainZero)
{
    for (int n = 1; n <= 16; ++n) {
        const auto c = subset_row_sums(lagarias_shor_matrix(n));
        EXPECT_EQ(c.size(), std::size_t{1} << n) << "n=" << n;
        EXPECT_TRUE(c.contains(ResidueVector::zero(n)));
    }
}

// -------------------------------------------------------------------- filters

TEST(Filters, EvenThrees)
{
    EXPECT_EQ(strings(filter_even_threes(subset_row_sums(lagarias_shor_matrix(3)))),
              (std::set<std::string>{"000", "120", "012", "201"}));
    EXPECT_TRUE(filter_even_threes(CodeSet(3, {})).empty());
    EXPECT_EQ(strings(filter_even_threes(CodeSet(2, {ResidueVector{3, 3}}))), (std::set<std::string>{"33"}));
}

TEST(Filters, OddZeros)
{
    EXPECT_EQ(strings(filter_odd_zeros(subset_row_sums(transpose(lagarias_shor_matrix(3))))),
              (std::set<std::string>{"000", "102", "210", "021"}));
    EXPECT_TRUE(filter_odd_zeros(CodeSet(2, {ResidueVector{1, 1}})).empty());
    EXPECT_EQ(strings(filter_odd_zeros(CodeSet(2, {ResidueVector{0, 1}}))), (std::set<std::string>{"01"}));
}

// --------------------------------------------------------- the code V itself

TEST(LagariasShorCode, NEquals3)
{
    EXPECT_EQ(strings(lagarias_shor_code(3)),
              (std::set<std::string>{"000", "120", "012", "201", "222", "320", "032", "203"}));
}

TEST(LagariasShorCode, SizeIsTwoToTheN)
{
    for (int n = 3; n <= 15; n += 2) {
        EXPECT_EQ(lagarias_shor_code(n).size(), std::size_t{1} << n) << "n=" << n;
    }
}

TEST(LagariasShorCode, MatchesUnpackedReference)
{
    for (int n = 3; n <= 11; n += 2) {
        EXPECT_EQ(unpacked(lagarias_shor_code(n)), reference::lagarias_shor(n)) << "n=" << n;
    }
}

TEST(LagariasShorCode, RejectsEvenOrSmallN)
{
    EXPECT_THROW(lagarias_shor_code(4), precondition_error);
    EXPECT_THROW(lagarias_shor_code(1), precondition_error);
    EXPECT_THROW(lagarias_shor_code(-3), precondition_error);
}

// ------------------------------------------------------------------------ U(n)

TEST(EnumerateU, Fig1Vectors)
{
    EXPECT_EQ(strings(enumerate_U(3)), (std::set<std::string>{"120", "012", "201"}));
}

TEST(EnumerateU, DisplayedU5)
{
    EXPECT_EQ(strings(enumerate_U(5)), (std::set<std::string>{"12000", "01200", "00120", "00012", "20001", "12120",
                                                              "12012", "01212", "21201", "20121"}));
}

TEST(EnumerateU, SizesAreLucasMinusOne)
{
    EXPECT_EQ(enumerate_U(7).size(), 28U);
    for (int n = 3; n <= 21; n += 2) {
        EXPECT_EQ(enumerate_U(n).size() + 1, lucas_vertices(n).size()) << "n=" << n;
    }
}

TEST(EnumerateU, MatchesBruteForceAndExcludesZero)
{
    for (int n = 3; n <= 15; n += 2) {
        const auto u = enumerate_U(n);
        EXPECT_EQ(unpacked(u), reference::u_code(n)) << "n=" << n;
        EXPECT_FALSE(u.contains(ResidueVector::zero(n)));
    }
    EXPECT_THROW(enumerate_U(6), precondition_error);
}

TEST(EnumerateU, TwoToZeroSubstitutionGivesLucasVertices)
{
    for (int n = 3; n <= 15; n += 2) {
        std::set<std::uint64_t> substituted{0};
        for (const auto& w : enumerate_U(n)) {
            std::uint64_t bits = 0;
            for (int i = 0; i < n; ++i) {
                if (w[i] == 1) {
                    bits |= std::uint64_t{1} << i;
                }
            }
            substituted.insert(bits);
        }
        std::set<std::uint64_t> vertices;
        for (const auto& v : lucas_vertices(n)) {
            vertices.insert(v.bits);
        }
        EXPECT_EQ(substituted, vertices) << "n=" << n;
    }
}

// ------------------------------------------------------------ independent sets

std::set<std::vector<int>> as_positions(const std::vector<IndexSet>& sets)
{
    std::set<std::vector<int>> out;
    for (const auto& s : sets) {
        out.insert(s.positions());
    }
    return out;
}

TEST(IndependentSets, SmallCases)
{
    EXPECT_EQ(as_positions(independent_sets(3, true)), (std::set<std::vector<int>>{{}, {1}, {2}, {3}}));
    EXPECT_EQ(as_positions(independent_sets(4, true)),
              (std::set<std::vector<int>>{{}, {1}, {2}, {3}, {4}, {1, 3}, {2, 4}}));
    EXPECT_EQ(as_positions(independent_sets(2, false)), (std::set<std::vector<int>>{{}, {1}, {2}}));
    EXPECT_EQ(as_positions(independent_sets(1, false)), (std::set<std::vector<int>>{{}, {1}}));
    EXPECT_EQ(as_positions(independent_sets(1, true)), (std::set<std::vector<int>>{{}}));
}

TEST(IndependentSets, MatchBruteForce)
{
    for (int n = 1; n <= 16; ++n) {
        for (bool cyclic : {false, true}) {
            std::set<std::uint64_t> brute;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                if (cyclic ? reference::cycle_independent(mask, n) : reference::path_independent(mask, n)) {
                    brute.insert(mask);
                }
            }
            std::set<std::uint64_t> generated;
            const auto sets = independent_sets(n, cyclic);
            for (const auto& s : sets) {
                generated.insert(s.mask());
                EXPECT_TRUE(is_independent(s, n, cyclic));
            }
            EXPECT_EQ(generated.size(), sets.size()) << "duplicates at n=" << n;
            EXPECT_EQ(generated, brute) << "n=" << n << " cyclic=" << cyclic;
        }
    }
}

} // namespace
} // namespace lucastile
