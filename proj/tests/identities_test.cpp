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

#include <gtest/gtest.h>

#include "lucastile/identities.hpp"
#include "lucastile/lucas_cube.hpp"

namespace lucastile {
namespace {

TEST(Identities, LeftHandSideExamples)
{
    EXPECT_EQ(lhs(1, 3), 7);
    EXPECT_EQ(lhs(2, 3), 5);
    EXPECT_EQ(lhs(3, 4), 6);
    EXPECT_EQ(lhs(3, 1), 0);
    EXPECT_THROW(lhs(4, 3), precondition_error);
    EXPECT_THROW(lhs(1, 0), precondition_error);
}

TEST(Identities, RightHandSideExamples)
{
    EXPECT_EQ(rhs(1, 3), 7);
    EXPECT_EQ(rhs(2, 4), 11);
    EXPECT_EQ(rhs(3, 3), 2);
    EXPECT_EQ(rhs(1, 1), 1);
    EXPECT_EQ(rhs(3, 1), 0);
}

TEST(Identities, ClosedFormToTwoHundred)
{
    for (int id = 1; id <= 3; ++id) {
        const auto reports = verify_closed_form(id, 200);
        ASSERT_EQ(reports.size(), 200U);
        for (const auto& r : reports) {
            EXPECT_TRUE(r.ok) << "id=" << id << " n=" << r.n;
            EXPECT_EQ(r.path, IdentityPath::ClosedForm);
            EXPECT_EQ(r.id, id);
        }
        EXPECT_EQ(reports.back().n, 200);
    }
}

TEST(Identities, SummandsAreLucasCounts)
{
    for (int n = 1; n <= 60; ++n) {
        for (int k = 0; k <= n / 2; ++k) {
            EXPECT_EQ(summand_coefficient(1, n, k), weight_count(n, k));
            EXPECT_EQ(summand_coefficient(2, n, k), weight_count_zero_at(n, k, 1));
            EXPECT_EQ(summand_coefficient(3, n, k), weight_count_one_at(n, k, 1));
        }
        EXPECT_EQ(summand_coefficient(1, n, n / 2 + 1), 0);
    }
}

TEST(Identities, TermwiseDecomposition)
{
    EXPECT_EQ(summand_coefficient(1, 5, 2) * 4, summand_coefficient(2, 5, 2) * 4 + summand_coefficient(3, 5, 2) * 4);
    EXPECT_EQ(summand_coefficient(1, 5, 2), 5);
    for (int n = 1; n <= 200; ++n) {
        EXPECT_TRUE(termwise_decomposition_check(n)) << "n=" << n;
    }
}

TEST(IdentitiesTiling, OddExamples)
{
    const auto one = verify_via_tiling_odd(1, 5);
    EXPECT_EQ(one.lhs, 31);
    EXPECT_TRUE(one.ok);
    EXPECT_EQ(one.path, IdentityPath::TilingOdd);
    EXPECT_FALSE(one.aux_n.has_value());

    const auto three = verify_via_tiling_odd(3, 5);
    EXPECT_EQ(three.lhs, 10);
    EXPECT_TRUE(three.ok);

    const auto two = verify_via_tiling_odd(2, 5);
    EXPECT_EQ(two.lhs, 21);
    EXPECT_TRUE(two.ok);

    EXPECT_THROW(verify_via_tiling_odd(1, 4), precondition_error);
    EXPECT_THROW(verify_via_tiling_odd(1, build_G(5)), precondition_error);
}

TEST(IdentitiesTiling, EvenExamples)
{
    const auto one = verify_via_tiling_even(1, 4);
    EXPECT_EQ(one.lhs, 17);
    EXPECT_EQ(one.n, 4);
    EXPECT_EQ(one.aux_n, 5);
    EXPECT_TRUE(one.ok);
    EXPECT_EQ(verify_via_tiling_even(3, 4).lhs, 6);
    EXPECT_EQ(verify_via_tiling_even(2, 4).lhs, 11);
    EXPECT_TRUE(verify_via_tiling_even(2, 2).ok);
    EXPECT_THROW(verify_via_tiling_even(1, 5), precondition_error);
    EXPECT_THROW(verify_via_tiling_even(1, 0), precondition_error);
}

TEST(IdentitiesTiling, PathsAgreeWithClosedForm)
{
    for (int n = 2; n <= 21; ++n) {
        for (int id = 1; id <= 3; ++id) {
            const auto tiled = verify_via_tiling(id, n);
            EXPECT_TRUE(tiled.ok) << "id=" << id << " n=" << n;
            EXPECT_EQ(tiled.lhs, lhs(id, n));
            EXPECT_EQ(tiled.path, n % 2 == 1 ? IdentityPath::TilingOdd : IdentityPath::TilingEven);
        }
    }
    EXPECT_THROW(verify_via_tiling(1, 1), precondition_error);
}

TEST(IdentityPath, StringRoundTrip)
{
    for (auto p : {IdentityPath::ClosedForm, IdentityPath::TilingOdd, IdentityPath::TilingEven}) {
        EXPECT_EQ(identity_path_from_string(to_string(p)), p);
    }
    EXPECT_EQ(to_string(IdentityPath::TilingEven), "tiling_even");
    EXPECT_FALSE(identity_path_from_string("tiling").has_value());
}

} // namespace
} // namespace lucastile
