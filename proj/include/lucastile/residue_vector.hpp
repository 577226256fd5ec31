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

#ifndef LUCASTILE_RESIDUE_VECTOR_HPP
#define LUCASTILE_RESIDUE_VECTOR_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lucastile/errors.hpp"

namespace lucastile {

/**
 * A word of length n over Z_4, packed two bits per entry into one 64-bit
 * word. Entry 0 occupies the most significant lane, so comparing the packed
 * value of two words of equal dimension is lexicographic comparison on
 * their entries.
 *
 * Entry indices on this type are 0-based, like any container.
 */
class ResidueVector {
public:
    static constexpr int max_dimension = 32;

    ResidueVector() = default;

    ResidueVector(std::initializer_list<int> entries)
    {
        assign(std::span<const int>(entries.begin(), entries.size()));
    }

    explicit ResidueVector(std::span<const int> entries) { assign(entries); }

    explicit ResidueVector(std::span<const std::uint8_t> entries)
    {
        std::vector<int> widened(entries.begin(), entries.end());
        assign(std::span<const int>(widened));
    }

    /// Parses a digit string such as "12000".
    static ResidueVector parse(std::string_view digits)
    {
        std::vector<int> entries;
        entries.reserve(digits.size());
        for (char c : digits) {
            detail::require(c >= '0' && c <= '3', "ResidueVector::parse: bad residue digit");
            entries.push_back(c - '0');
        }
        return ResidueVector(std::span<const int>(entries));
    }

    static ResidueVector constant(int dimension, int residue)
    {
        check_dimension(dimension);
        detail::require(residue >= 0 && residue <= 3, "ResidueVector::constant: residue out of Z_4");
        ResidueVector v;
        v.dimension_ = dimension;
        v.bits_ = low_lanes(dimension) * static_cast<std::uint64_t>(residue);
        return v;
    }

    static ResidueVector zero(int dimension) { return constant(dimension, 0); }

    static ResidueVector from_packed(int dimension, std::uint64_t bits)
    {
        check_dimension(dimension);
        ResidueVector v;
        v.dimension_ = dimension;
        v.bits_ = bits & lane_mask(dimension);
        return v;
    }

    int dimension() const noexcept { return dimension_; }
    std::uint64_t packed() const noexcept { return bits_; }

    int operator[](int index) const noexcept
    {
        return static_cast<int>((bits_ >> shift(index)) & 3U);
    }

    ResidueVector with(int index, int residue) const
    {
        detail::require(index >= 0 && index < dimension_, "ResidueVector::with: index out of range");
        detail::require(residue >= 0 && residue <= 3, "ResidueVector::with: residue out of Z_4");
        ResidueVector v = *this;
        v.bits_ &= ~(std::uint64_t{3} << shift(index));
        v.bits_ |= static_cast<std::uint64_t>(residue) << shift(index);
        return v;
    }

    std::vector<std::uint8_t> entries() const
    {
        std::vector<std::uint8_t> out(static_cast<std::size_t>(dimension_));
        for (int i = 0; i < dimension_; ++i) {
            out[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((*this)[i]);
        }
        return out;
    }

    /// Number of entries equal to `residue`.
    int count(int residue) const noexcept
    {
        // Lanes equal to `residue` become 00 after the xor.
        const std::uint64_t x = bits_ ^ (low_lanes(dimension_) * static_cast<std::uint64_t>(residue & 3));
        const std::uint64_t nonzero = (x | (x >> 1)) & low_lanes(dimension_);
        return dimension_ - std::popcount(nonzero);
    }

    /// Entrywise sum mod 4, carries confined to each 2-bit lane.
    friend ResidueVector operator+(const ResidueVector& a, const ResidueVector& b)
    {
        detail::require(a.dimension_ == b.dimension_, "ResidueVector: dimension mismatch in sum");
        const std::uint64_t lo = low_lanes(a.dimension_);
        const std::uint64_t carry = (a.bits_ & b.bits_ & lo) << 1;
        const std::uint64_t sum = ((a.bits_ ^ b.bits_) & lo) | ((a.bits_ ^ b.bits_ ^ carry) & (lo << 1));
        return from_packed(a.dimension_, sum);
    }

    /// Entrywise additive inverse mod 4.
    ResidueVector negated() const
    {
        // -x = (~x) + 1 per lane; x + 3x = 0 mod 4 so use 3x = x + 2x.
        const std::uint64_t lo = low_lanes(dimension_);
        const std::uint64_t doubled = (bits_ & lo) << 1; // 2x mod 4
        return *this + from_packed(dimension_, doubled);
    }

    friend ResidueVector operator-(const ResidueVector& a, const ResidueVector& b) { return a + b.negated(); }

    /// Cyclic rotation to the right: entry i moves to position i + steps.
    ResidueVector rotated_right(int steps) const
    {
        if (dimension_ == 0) {
            return *this;
        }
        const int s = ((steps % dimension_) + dimension_) % dimension_;
        ResidueVector v;
        v.dimension_ = dimension_;
        for (int i = 0; i < dimension_; ++i) {
            v.bits_ |= static_cast<std::uint64_t>((*this)[i]) << shift((i + s) % dimension_);
        }
        return v;
    }

    std::string to_string() const
    {
        std::string s(static_cast<std::size_t>(dimension_), '0');
        for (int i = 0; i < dimension_; ++i) {
            s[static_cast<std::size_t>(i)] = static_cast<char>('0' + (*this)[i]);
        }
        return s;
    }

    friend bool operator==(const ResidueVector&, const ResidueVector&) = default;

    friend std::strong_ordering operator<=>(const ResidueVector& a, const ResidueVector& b)
    {
        if (auto c = a.dimension_ <=> b.dimension_; c != 0) {
            return c;
        }
        return a.bits_ <=> b.bits_;
    }

    /// 0x...0101 over the lanes of a dimension-n word.
    static constexpr std::uint64_t low_lanes(int dimension) noexcept
    {
        return 0x5555555555555555ULL & lane_mask(dimension);
    }

    static constexpr std::uint64_t lane_mask(int dimension) noexcept
    {
        return dimension >= 32 ? ~std::uint64_t{0} : (std::uint64_t{1} << (2 * dimension)) - 1;
    }

private:
    static void check_dimension(int dimension)
    {
        detail::require(dimension >= 1 && dimension <= max_dimension,
                        "ResidueVector: dimension must be in [1, 32]");
    }

    int shift(int index) const noexcept { return 2 * (dimension_ - 1 - index); }

    template <typename Int>
    void assign(std::span<const Int> entries)
    {
        check_dimension(static_cast<int>(entries.size()));
        dimension_ = static_cast<int>(entries.size());
        bits_ = 0;
        for (int i = 0; i < dimension_; ++i) {
            const Int r = entries[static_cast<std::size_t>(i)];
            detail::require(r >= 0 && r <= 3, "ResidueVector: entry outside {0,1,2,3}");
            bits_ |= static_cast<std::uint64_t>(r) << shift(i);
        }
    }

    std::uint64_t bits_ = 0;
    int dimension_ = 0;
};

/// True iff some coordinate of u - v is exactly 2 mod 4.
inline bool differs_by_two_somewhere(const ResidueVector& u, const ResidueVector& v) noexcept
{
    // Lane difference is 2 mod 4 iff low bits agree and high bits differ.
    const std::uint64_t d = u.packed() ^ v.packed();
    const std::uint64_t lo = ResidueVector::low_lanes(u.dimension());
    return (((d >> 1) & lo) & ~d & lo) != 0;
}

} // namespace lucastile

#endif
