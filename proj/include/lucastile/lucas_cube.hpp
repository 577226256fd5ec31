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

#ifndef LUCASTILE_LUCAS_CUBE_HPP
#define LUCASTILE_LUCAS_CUBE_HPP

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "lucastile/bigint.hpp"
#include "lucastile/errors.hpp"

namespace lucastile {

/// A word in {0,1}^n; bit i-1 of `bits` holds position i.
struct BinaryWord {
    std::uint64_t bits = 0;
    int dimension = 0;

    static BinaryWord parse(const std::string& text)
    {
        detail::require(!text.empty() && text.size() <= 63, "BinaryWord::parse: bad length");
        BinaryWord w{0, static_cast<int>(text.size())};
        for (std::size_t i = 0; i < text.size(); ++i) {
            detail::require(text[i] == '0' || text[i] == '1', "BinaryWord::parse: expected 0 or 1");
            if (text[i] == '1') {
                w.bits |= std::uint64_t{1} << i;
            }
        }
        return w;
    }

    bool at(int position) const noexcept { return ((bits >> (position - 1)) & 1U) != 0; }
    int weight() const noexcept { return std::popcount(bits); }

    std::string to_string() const
    {
        std::string s;
        for (int p = 1; p <= dimension; ++p) {
            s.push_back(at(p) ? '1' : '0');
        }
        return s;
    }

    friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
    friend auto operator<=>(const BinaryWord&, const BinaryWord&) = default;
};

using LucasVertex = BinaryWord;

/**
 * No two cyclically adjacent 1s. Positions 1 and n are adjacent; for n = 1
 * the single position is adjacent to itself, so Lambda_1 = {0}.
 */
inline bool is_lucas_word(std::uint64_t bits, int n) noexcept
{
    if ((bits & (bits >> 1)) != 0) {
        return false;
    }
    return !((bits & 1U) != 0 && ((bits >> (n - 1)) & 1U) != 0);
}

/// Brute force over all 2^n binary words.
inline std::vector<LucasVertex> lucas_vertices(int n)
{
    detail::require(n >= 1 && n <= 30, "lucas_vertices: n must be in [1, 30]");
    std::vector<LucasVertex> out;
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t bits = 0; bits < count; ++bits) {
        if (is_lucas_word(bits, n)) {
            out.push_back({bits, n});
        }
    }
    return out;
}

/// Exact C(n, k); 0 when k < 0 or k > n.
inline BigInt binomial(int n, int k)
{
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    BigInt result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i; // exact: result is C(n-k+i, i) here
    }
    return result;
}

inline bool weight_in_range(int n, int k) noexcept
{
    return n >= 1 && k >= 0 && k <= n / 2;
}

/// C(n-k, k) * n / (n-k): Lucas vertices of weight k.
inline BigInt weight_count(int n, int k)
{
    if (!weight_in_range(n, k)) {
        return 0;
    }
    if (k == 0) {
        return 1;
    }
    return exact_div(binomial(n - k, k) * n, BigInt(n - k), "weight_count");
}

/// C(n-k, k) * k / (n-k): weight-k Lucas vertices with 1 at `position`.
inline BigInt weight_count_one_at(int n, int k, int position)
{
    detail::require(position >= 1 && position <= n, "weight_count_one_at: position outside [1, n]");
    if (!weight_in_range(n, k) || k == 0) {
        return 0;
    }
    return exact_div(binomial(n - k, k) * k, BigInt(n - k), "weight_count_one_at");
}

/// C(n-k, k): weight-k Lucas vertices with 0 at `position`.
inline BigInt weight_count_zero_at(int n, int k, int position)
{
    detail::require(position >= 1 && position <= n, "weight_count_zero_at: position outside [1, n]");
    if (!weight_in_range(n, k)) {
        return 0;
    }
    return binomial(n - k, k);
}

/// Counts gathered from an explicit vertex list.
struct LucasCensus {
    int n = 0;
    std::uint64_t vertices = 0;
    std::vector<std::uint64_t> by_weight;             // [k]
    std::vector<std::vector<std::uint64_t>> one_at;   // [k][position - 1]
    std::vector<std::vector<std::uint64_t>> zero_at;  // [k][position - 1]
};

inline LucasCensus census_of(int n, const std::vector<LucasVertex>& vertices)
{
    LucasCensus c;
    c.n = n;
    c.vertices = vertices.size();
    const auto weights = static_cast<std::size_t>(n + 1);
    c.by_weight.assign(weights, 0);
    c.one_at.assign(weights, std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0));
    c.zero_at = c.one_at;
    for (const auto& v : vertices) {
        const auto k = static_cast<std::size_t>(v.weight());
        ++c.by_weight[k];
        for (int p = 1; p <= n; ++p) {
            ++(v.at(p) ? c.one_at : c.zero_at)[k][static_cast<std::size_t>(p - 1)];
        }
    }
    return c;
}

inline LucasCensus brute_force_census(int n)
{
    return census_of(n, lucas_vertices(n));
}

} // namespace lucastile

#endif
