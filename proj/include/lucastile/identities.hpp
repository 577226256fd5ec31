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

#ifndef LUCASTILE_IDENTITIES_HPP
#define LUCASTILE_IDENTITIES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lucastile/bigint.hpp"
#include "lucastile/box_partition.hpp"
#include "lucastile/errors.hpp"
#include "lucastile/lucas_cube.hpp"

// The three Lucas-cube identities, for n >= 1:
//
//   (1)  sum_k C(n-k,k) * n/(n-k) * 2^k = 2^n + (-1)^n
//   (2)  sum_k C(n-k,k)           * 2^k = (2^(n+1) + (-1)^n) / 3
//   (3)  sum_k C(n-k,k) * k/(n-k) * 2^k = (2^n + 2(-1)^n) / 3
//
// with k running over 0..floor(n/2).

namespace lucastile {

enum class IdentityPath { ClosedForm, TilingOdd, TilingEven };

inline std::string_view to_string(IdentityPath p)
{
    switch (p) {
    case IdentityPath::ClosedForm: return "closed_form";
    case IdentityPath::TilingOdd: return "tiling_odd";
    case IdentityPath::TilingEven: return "tiling_even";
    }
    return "?";
}

inline std::optional<IdentityPath> identity_path_from_string(std::string_view s)
{
    if (s == "closed_form") return IdentityPath::ClosedForm;
    if (s == "tiling_odd") return IdentityPath::TilingOdd;
    if (s == "tiling_even") return IdentityPath::TilingEven;
    return std::nullopt;
}

struct IdentityReport {
    int id = 0;
    int n = 0;
    BigInt lhs;
    BigInt rhs;
    IdentityPath path = IdentityPath::ClosedForm;
    bool ok = false;
    /// Odd dimension of the partition used by the even-index path.
    std::optional<int> aux_n;

    friend bool operator==(const IdentityReport&, const IdentityReport&) = default;
};

namespace detail {

inline void require_identity(int id)
{
    require(id >= 1 && id <= 3, "identity id must be 1, 2 or 3 (got " + std::to_string(id) + ")");
}

inline IdentityReport make_report(int id, int n, BigInt lhs, BigInt rhs, IdentityPath path,
                                  std::optional<int> aux_n = std::nullopt)
{
    IdentityReport r{id, n, std::move(lhs), std::move(rhs), path, false, aux_n};
    r.ok = r.lhs == r.rhs;
    return r;
}

} // namespace detail

/// The integer coefficient of 2^k in the left-hand side of identity `id`.
inline BigInt summand_coefficient(int id, int n, int k)
{
    detail::require_identity(id);
    if (n < 1 || k < 0 || k > n / 2) {
        return 0;
    }
    const BigInt c = binomial(n - k, k);
    switch (id) {
    case 1: return k == 0 ? BigInt(1) : exact_div(c * n, BigInt(n - k), "identity 1 summand");
    case 2: return c;
    default: return k == 0 ? BigInt(0) : exact_div(c * k, BigInt(n - k), "identity 3 summand");
    }
}

inline BigInt lhs(int id, int n)
{
    detail::require_identity(id);
    detail::require(n >= 1, "lhs: n must be >= 1");
    BigInt total = 0;
    for (int k = 0; k <= n / 2; ++k) {
        total += summand_coefficient(id, n, k) << k;
    }
    return total;
}

inline BigInt rhs(int id, int n)
{
    detail::require_identity(id);
    detail::require(n >= 1, "rhs: n must be >= 1");
    const int sign = sign_power(n);
    switch (id) {
    case 1: return pow2(static_cast<unsigned>(n)) + sign;
    case 2: return exact_div(pow2(static_cast<unsigned>(n + 1)) + sign, BigInt(3), "identity 2 right-hand side");
    default: return exact_div(pow2(static_cast<unsigned>(n)) + 2 * sign, BigInt(3), "identity 3 right-hand side");
    }
}

inline std::vector<IdentityReport> verify_closed_form(int id, int n_max)
{
    detail::require_identity(id);
    std::vector<IdentityReport> out;
    for (int n = 1; n <= n_max; ++n) {
        out.push_back(detail::make_report(id, n, lhs(id, n), rhs(id, n), IdentityPath::ClosedForm));
    }
    return out;
}

/**
 * Odd n >= 3, from the partition F(n) of [0,2)^n:
 *  (1) 1 + sum_{k>=1} M_k 2^k, the census of F without the two unit cubes;
 *  (3) the volume of F^1_Full;
 *  (2) the volume of F^1_{LoOrHi} with the two unit cubes replaced by the
 *      k = 0 summand 1.
 */
inline IdentityReport verify_via_tiling_odd(int id, const BoxFamily& f)
{
    detail::require_identity(id);
    const int n = f.dimension();
    detail::require_odd_at_least(n, 3, "verify_via_tiling_odd");
    detail::require(f.label() == FamilyLabel::F, "verify_via_tiling_odd: expected the family F(n)");
    BigInt value;
    switch (id) {
    case 1: {
        value = 1;
        for (const auto& [k, count] : weight_census(f)) {
            if (k >= 1) {
                value += BigInt(count) << k;
            }
        }
        break;
    }
    case 2: value = BigInt(volume_sum(subfamily(f, 1, FactorSelector::LoOrHi))) - 2 + 1; break;
    default: value = BigInt(volume_sum(subfamily(f, 1, FactorSelector::Full))); break;
    }
    return detail::make_report(id, n, std::move(value), rhs(id, n), IdentityPath::TilingOdd);
}

inline IdentityReport verify_via_tiling_odd(int id, int n)
{
    detail::require_identity(id);
    detail::require_odd_at_least(n, 3, "verify_via_tiling_odd");
    return verify_via_tiling_odd(id, build_F(n));
}

/**
 * Even m >= 2, from G = G(m) inside F(m + 1):
 *  (1) 1 + m(G);  (3) m(G^1_Full);  (2) the difference of the two.
 */
inline IdentityReport verify_via_tiling_even(int id, const BoxFamily& g)
{
    detail::require_identity(id);
    const int n = g.dimension();
    const int m = n - 1;
    detail::require(g.label() == FamilyLabel::G && n >= 3 && n % 2 == 1,
                    "verify_via_tiling_even: expected the family G(m) inside F(m + 1)");
    const BigInt total = BigInt(1) + volume_sum(g);
    const BigInt one_at_first = volume_sum(subfamily(g, 1, FactorSelector::Full));
    BigInt value;
    switch (id) {
    case 1: value = total; break;
    case 2: value = total - one_at_first; break;
    default: value = one_at_first; break;
    }
    return detail::make_report(id, m, std::move(value), rhs(id, m), IdentityPath::TilingEven, n);
}

inline IdentityReport verify_via_tiling_even(int id, int m)
{
    detail::require_identity(id);
    if (m < 2 || m % 2 != 0) {
        throw precondition_error("verify_via_tiling_even: m must be even and >= 2 (got " + std::to_string(m) + ")");
    }
    return verify_via_tiling_even(id, build_G(m + 1));
}

/// Dispatches on parity; n = 1 has no tiling derivation.
inline IdentityReport verify_via_tiling(int id, int n)
{
    if (n >= 3 && n % 2 == 1) {
        return verify_via_tiling_odd(id, n);
    }
    return verify_via_tiling_even(id, n);
}

/// Per k: the identity-1 summand is the sum of the identity-2 and identity-3 summands.
inline bool termwise_decomposition_check(int n)
{
    detail::require(n >= 1, "termwise_decomposition_check: n must be >= 1");
    for (int k = 0; k <= n / 2; ++k) {
        if (summand_coefficient(1, n, k) != summand_coefficient(2, n, k) + summand_coefficient(3, n, k)) {
            return false;
        }
    }
    return true;
}

} // namespace lucastile

#endif
