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

#ifndef LUCASTILE_CIRCULANT_CODE_HPP
#define LUCASTILE_CIRCULANT_CODE_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lucastile/errors.hpp"
#include "lucastile/index_set.hpp"
#include "lucastile/residue_vector.hpp"

namespace lucastile {

enum class CodeLabel { V_A, V_AT, V_e, V_o, V, U, R, Custom };

inline std::string_view to_string(CodeLabel label)
{
    switch (label) {
    case CodeLabel::V_A: return "V(A)";
    case CodeLabel::V_AT: return "V(A^T)";
    case CodeLabel::V_e: return "V_e";
    case CodeLabel::V_o: return "V_o";
    case CodeLabel::V: return "V";
    case CodeLabel::U: return "U";
    case CodeLabel::R: return "R";
    case CodeLabel::Custom: return "custom";
    }
    return "?";
}

/**
 * A finite set of distinct residue vectors of one common dimension, kept in
 * canonical (lexicographic) order. Immutable after construction.
 */
class CodeSet {
public:
    CodeSet(int dimension, std::vector<ResidueVector> words, CodeLabel label = CodeLabel::Custom)
        : dimension_(dimension), label_(label), words_(std::move(words))
    {
        detail::require(dimension >= 1 && dimension <= ResidueVector::max_dimension,
                        "CodeSet: dimension must be in [1, 32]");
        for (const auto& w : words_) {
            detail::require(w.dimension() == dimension, "CodeSet: word of the wrong dimension");
        }
        std::sort(words_.begin(), words_.end());
        words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
    }

    int dimension() const noexcept { return dimension_; }
    CodeLabel label() const noexcept { return label_; }
    std::size_t size() const noexcept { return words_.size(); }
    bool empty() const noexcept { return words_.empty(); }
    std::span<const ResidueVector> words() const noexcept { return words_; }
    auto begin() const noexcept { return words_.begin(); }
    auto end() const noexcept { return words_.end(); }

    bool contains(const ResidueVector& v) const
    {
        return std::binary_search(words_.begin(), words_.end(), v);
    }

    CodeSet relabeled(CodeLabel label) const
    {
        CodeSet copy = *this;
        copy.label_ = label;
        return copy;
    }

    friend bool operator==(const CodeSet& a, const CodeSet& b)
    {
        return a.dimension_ == b.dimension_ && a.words_ == b.words_;
    }

private:
    int dimension_;
    CodeLabel label_;
    std::vector<ResidueVector> words_;
};

/// n x n matrix over Z_4 whose row i+1 is row i rotated right by one.
class CirculantMatrix {
public:
    explicit CirculantMatrix(const ResidueVector& first_row)
    {
        const int n = first_row.dimension();
        rows_.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            rows_.push_back(first_row.rotated_right(i));
        }
    }

    int dimension() const noexcept { return static_cast<int>(rows_.size()); }
    std::span<const ResidueVector> rows() const noexcept { return rows_; }

    /// Row `position`, 1-based.
    const ResidueVector& row(int position) const
    {
        detail::require(position >= 1 && position <= dimension(), "CirculantMatrix::row: position out of range");
        return rows_[static_cast<std::size_t>(position - 1)];
    }

    int at(int row_index, int column_index) const
    {
        return row(row_index)[column_index - 1];
    }

    friend bool operator==(const CirculantMatrix&, const CirculantMatrix&) = default;

private:
    std::vector<ResidueVector> rows_;
};

inline CirculantMatrix circulant_rows(int n, const ResidueVector& first_row)
{
    detail::require(n == first_row.dimension(), "circulant_rows: first row has dimension " +
                                                     std::to_string(first_row.dimension()) +
                                                     ", expected " + std::to_string(n));
    return CirculantMatrix(first_row);
}

/// The transpose of a circulant is the circulant generated by its first column.
inline CirculantMatrix transpose(const CirculantMatrix& m)
{
    const int n = m.dimension();
    std::vector<int> column(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        column[static_cast<std::size_t>(i - 1)] = m.at(i, 1);
    }
    return CirculantMatrix(ResidueVector(std::span<const int>(column)));
}

/// A(n) = circ(1, 2, 0, ..., 0). For n = 1 the first row is (1).
inline CirculantMatrix lagarias_shor_matrix(int n)
{
    detail::require(n >= 1 && n <= ResidueVector::max_dimension, "lagarias_shor_matrix: n out of range");
    std::vector<int> first(static_cast<std::size_t>(n), 0);
    first[0] = 1;
    if (n >= 2) {
        first[1] = 2;
    }
    return CirculantMatrix(ResidueVector(std::span<const int>(first)));
}

/// Sum of the rows of `m` indexed by the 1-based set `rows`, mod 4.
inline ResidueVector row_sum(const CirculantMatrix& m, IndexSet rows)
{
    ResidueVector sum = ResidueVector::zero(m.dimension());
    for (int p : rows.positions()) {
        sum = sum + m.row(p);
    }
    return sum;
}

/**
 * { sum of rows in S mod 4 : S subset of [n] }, the empty subset giving the
 * zero vector. Subsets are visited in Gray-code order so each step adds or
 * removes exactly one row.
 */
inline CodeSet subset_row_sums(const CirculantMatrix& m, CodeLabel label = CodeLabel::Custom)
{
    const int n = m.dimension();
    detail::require(n <= 30, "subset_row_sums: n too large to enumerate 2^n subsets");
    const std::size_t count = std::size_t{1} << n;
    std::vector<ResidueVector> negated;
    negated.reserve(static_cast<std::size_t>(n));
    for (const auto& r : m.rows()) {
        negated.push_back(r.negated());
    }
    std::vector<ResidueVector> words;
    words.reserve(count);
    ResidueVector sum = ResidueVector::zero(n);
    words.push_back(sum);
    std::uint64_t gray = 0;
    for (std::size_t step = 1; step < count; ++step) {
        const int flip = std::countr_zero(step);
        const std::uint64_t bit = std::uint64_t{1} << flip;
        const auto row = static_cast<std::size_t>(flip);
        sum = sum + ((gray & bit) != 0 ? negated[row] : m.rows()[row]);
        gray ^= bit;
        words.push_back(sum);
    }
    return CodeSet(n, std::move(words), label);
}

/// Words with an even number of entries equal to 3.
inline CodeSet filter_even_threes(const CodeSet& c)
{
    std::vector<ResidueVector> kept;
    for (const auto& w : c) {
        if (w.count(3) % 2 == 0) {
            kept.push_back(w);
        }
    }
    return CodeSet(c.dimension(), std::move(kept), CodeLabel::V_e);
}

/// Words with an odd number of entries equal to 0.
inline CodeSet filter_odd_zeros(const CodeSet& c)
{
    std::vector<ResidueVector> kept;
    for (const auto& w : c) {
        if (w.count(0) % 2 == 1) {
            kept.push_back(w);
        }
    }
    return CodeSet(c.dimension(), std::move(kept), CodeLabel::V_o);
}

/**
 * V = V_e(A) u (V_o(A^T) + (2,...,2)) mod 4 for odd n >= 3. Throws
 * std::logic_error if the result does not have exactly 2^n words.
 */
inline CodeSet lagarias_shor_code(int n)
{
    detail::require_odd_at_least(n, 3, "lagarias_shor_code");
    detail::require(n <= 29, "lagarias_shor_code: n too large");
    const CirculantMatrix a = lagarias_shor_matrix(n);
    const CodeSet even = filter_even_threes(subset_row_sums(a, CodeLabel::V_A));
    const CodeSet odd = filter_odd_zeros(subset_row_sums(transpose(a), CodeLabel::V_AT));
    const ResidueVector twos = ResidueVector::constant(n, 2);

    std::vector<ResidueVector> words(even.begin(), even.end());
    for (const auto& w : odd) {
        words.push_back(w + twos);
    }
    CodeSet code(n, std::move(words), CodeLabel::V);
    if (code.size() != (std::size_t{1} << n)) {
        throw std::logic_error("lagarias_shor_code: expected 2^n distinct words, got " +
                               std::to_string(code.size()));
    }
    return code;
}

/**
 * U(n): sums of rows of A(n) over nonempty independent sets of the cycle on
 * [n]. The zero vector is not a member.
 */
inline CodeSet enumerate_U(int n)
{
    detail::require_odd_at_least(n, 3, "enumerate_U");
    detail::require(n <= ResidueVector::max_dimension, "enumerate_U: n too large");
    const CirculantMatrix a = lagarias_shor_matrix(n);
    std::vector<ResidueVector> words;
    for (const IndexSet& s : independent_sets(n, true)) {
        if (!s.empty()) {
            words.push_back(row_sum(a, s));
        }
    }
    const std::size_t generated = words.size();
    CodeSet u(n, std::move(words), CodeLabel::U);
    if (u.size() != generated) {
        throw std::logic_error("enumerate_U: distinct independent sets produced equal sums");
    }
    return u;
}

/// U(n) together with (0,...,0) and (2,...,2): the words whose cubes meet [0,2)^n.
inline CodeSet augmented_U(int n)
{
    const CodeSet u = enumerate_U(n);
    std::vector<ResidueVector> words(u.begin(), u.end());
    words.push_back(ResidueVector::zero(n));
    words.push_back(ResidueVector::constant(n, 2));
    return CodeSet(n, std::move(words), CodeLabel::Custom);
}

} // namespace lucastile

#endif
