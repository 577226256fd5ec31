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

#ifndef LUCASTILE_SELECTOR_HPP
#define LUCASTILE_SELECTOR_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lucastile/circulant_code.hpp"
#include "lucastile/errors.hpp"
#include "lucastile/lucas_cube.hpp"

namespace lucastile {

/// A word over {0, 1, *}; bit p-1 of each mask describes position p.
struct StarWord {
    std::uint64_t star_mask = 0;
    std::uint64_t one_mask = 0;
    int dimension = 0;

    static StarWord parse(const std::string& text)
    {
        detail::require(!text.empty() && text.size() <= 63, "StarWord::parse: bad length");
        StarWord w{0, 0, static_cast<int>(text.size())};
        for (std::size_t i = 0; i < text.size(); ++i) {
            const std::uint64_t bit = std::uint64_t{1} << i;
            switch (text[i]) {
            case '0': break;
            case '1': w.one_mask |= bit; break;
            case '*': w.star_mask |= bit; break;
            default: throw precondition_error("StarWord::parse: expected 0, 1 or *");
            }
        }
        return w;
    }

    char at(int position) const noexcept
    {
        const std::uint64_t bit = std::uint64_t{1} << (position - 1);
        if ((star_mask & bit) != 0) {
            return '*';
        }
        return (one_mask & bit) != 0 ? '1' : '0';
    }

    std::string to_string() const
    {
        std::string s;
        for (int p = 1; p <= dimension; ++p) {
            s.push_back(at(p));
        }
        return s;
    }

    friend bool operator==(const StarWord&, const StarWord&) = default;
    friend auto operator<=>(const StarWord&, const StarWord&) = default;
};

/// Entrywise 0 -> 0, 2 -> 1, 1 -> *. Words must not contain a 3.
inline std::vector<StarWord> to_star_code(const CodeSet& code)
{
    std::vector<StarWord> out;
    out.reserve(code.size());
    for (const auto& v : code) {
        StarWord w{0, 0, v.dimension()};
        for (int i = 0; i < v.dimension(); ++i) {
            const std::uint64_t bit = std::uint64_t{1} << i;
            switch (v[i]) {
            case 0: break;
            case 1: w.star_mask |= bit; break;
            case 2: w.one_mask |= bit; break;
            default: throw precondition_error("to_star_code: word " + v.to_string() + " contains a 3");
            }
        }
        out.push_back(w);
    }
    return out;
}

/// The star code of U(n) u {0, (2,...,2)}: L plus the all-0 and all-1 words.
inline std::vector<StarWord> star_code(int n)
{
    detail::require_odd_at_least(n, 3, "star_code");
    return to_star_code(augmented_U(n));
}

/// K(l): factor {0}, {1} or {0,1} per position. Points are BinaryWord bitmasks.
struct DiscreteBox {
    std::uint64_t free_mask = 0;
    std::uint64_t one_mask = 0;
    int dimension = 0;
    StarWord source;

    std::uint64_t cardinality() const noexcept { return std::uint64_t{1} << std::popcount(free_mask); }
    bool contains(std::uint64_t point) const noexcept { return (point & ~free_mask) == one_mask; }

    bool is_all_ones() const noexcept
    {
        return free_mask == 0 && one_mask == (dimension >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << dimension) - 1);
    }

    template <typename Visit>
    void for_each_point(Visit&& visit) const
    {
        std::uint64_t s = free_mask;
        while (true) {
            visit(one_mask | s);
            if (s == 0) {
                break;
            }
            s = (s - 1) & free_mask;
        }
    }
};

inline DiscreteBox star_to_box(const StarWord& l)
{
    return DiscreteBox{l.star_mask, l.one_mask, l.dimension, l};
}

inline std::vector<DiscreteBox> star_boxes(int n)
{
    std::vector<DiscreteBox> out;
    for (const auto& l : star_code(n)) {
        out.push_back(star_to_box(l));
    }
    return out;
}

/// Every point of {0,1}^n lies in exactly one of `boxes`.
inline bool verify_discrete_partition(std::span<const DiscreteBox> boxes, int n)
{
    detail::require(n >= 1 && n <= 30, "verify_discrete_partition: n must be in [1, 30]");
    std::vector<std::uint8_t> cover(std::size_t{1} << n, 0);
    for (const auto& b : boxes) {
        detail::require(b.dimension == n, "verify_discrete_partition: box of the wrong dimension");
        bool overlap = false;
        b.for_each_point([&](std::uint64_t x) {
            auto& c = cover[static_cast<std::size_t>(x)];
            overlap = overlap || c != 0;
            c = 1;
        });
        if (overlap) {
            return false;
        }
    }
    for (auto c : cover) {
        if (c == 0) {
            return false;
        }
    }
    return true;
}

inline bool verify_discrete_partition(int n)
{
    detail::require_odd_at_least(n, 3, "verify_discrete_partition");
    const auto boxes = star_boxes(n);
    return verify_discrete_partition(boxes, n);
}

/// The point of `b` that takes 0 at every free position.
inline LucasVertex canonical_vertex(const DiscreteBox& b)
{
    detail::require(!b.is_all_ones(), "canonical_vertex: the all-ones box has no canonical vertex");
    return LucasVertex{b.one_mask, b.dimension};
}

/**
 * Ternary trie over box words: position p branches on 0, 1 or *. Looking up
 * a point follows both its own symbol and * at each level, so it visits
 * only the boxes that agree with the point on a prefix.
 */
class BoxIndex {
public:
    BoxIndex(std::span<const DiscreteBox> boxes, int n) : dimension_(n)
    {
        nodes_.push_back({});
        for (std::size_t id = 0; id < boxes.size(); ++id) {
            const auto& b = boxes[id];
            detail::require(b.dimension == n, "BoxIndex: box of the wrong dimension");
            std::size_t node = 0;
            for (int p = 1; p <= n; ++p) {
                const std::uint64_t bit = std::uint64_t{1} << (p - 1);
                const int symbol = (b.free_mask & bit) != 0 ? 2 : ((b.one_mask & bit) != 0 ? 1 : 0);
                auto child = nodes_[node].child[static_cast<std::size_t>(symbol)];
                if (child == none) {
                    child = nodes_.size();
                    nodes_[node].child[static_cast<std::size_t>(symbol)] = child;
                    nodes_.push_back({});
                }
                node = child;
            }
            nodes_[node].boxes.push_back(id);
        }
    }

    /// Ids of every indexed box containing `point`.
    std::vector<std::size_t> lookup(std::uint64_t point) const
    {
        std::vector<std::size_t> found;
        struct Frame {
            std::size_t node;
            int position;
        };
        std::vector<Frame> stack{{0, 1}};
        while (!stack.empty()) {
            const Frame f = stack.back();
            stack.pop_back();
            if (f.position > dimension_) {
                const auto& ids = nodes_[f.node].boxes;
                found.insert(found.end(), ids.begin(), ids.end());
                continue;
            }
            const std::size_t symbol = (point >> (f.position - 1)) & 1U;
            for (std::size_t s : {symbol, std::size_t{2}}) {
                if (const auto child = nodes_[f.node].child[s]; child != none) {
                    stack.push_back({child, f.position + 1});
                }
            }
        }
        return found;
    }

private:
    static constexpr std::size_t none = static_cast<std::size_t>(-1);
    struct Node {
        std::array<std::size_t, 3> child{none, none, none};
        std::vector<std::size_t> boxes;
    };
    int dimension_;
    std::vector<Node> nodes_;
};

struct SelectorReport {
    int n = 0;
    std::size_t vertices = 0;
    std::size_t boxes = 0; // excluding the all-ones box
    bool ok = false;
    std::string failure;
};

namespace detail {

template <typename Lookup>
SelectorReport check_selector(std::span<const DiscreteBox> all_boxes, int n, Lookup&& containing)
{
    SelectorReport report;
    report.n = n;
    std::vector<std::size_t> kept; // ids into all_boxes
    bool has_all_ones = false;
    for (std::size_t id = 0; id < all_boxes.size(); ++id) {
        if (all_boxes[id].is_all_ones()) {
            has_all_ones = true;
        } else {
            kept.push_back(id);
        }
    }
    report.boxes = kept.size();
    const auto vertices = lucas_vertices(n);
    report.vertices = vertices.size();

    if (has_all_ones) {
        const std::uint64_t ones = (std::uint64_t{1} << n) - 1;
        if (is_lucas_word(ones, n)) {
            report.failure = "the all-ones box contains a Lucas vertex";
            return report;
        }
    }

    std::vector<std::size_t> hits(all_boxes.size(), 0);
    std::vector<std::uint64_t> hit_by(all_boxes.size(), 0);
    for (const auto& v : vertices) {
        std::size_t inside = 0;
        for (std::size_t id : containing(v.bits)) {
            if (all_boxes[id].is_all_ones()) {
                continue;
            }
            ++inside;
            ++hits[id];
            hit_by[id] = v.bits;
        }
        if (inside != 1) {
            report.failure = "vertex " + v.to_string() + " lies in " + std::to_string(inside) + " boxes";
            return report;
        }
    }
    for (std::size_t id : kept) {
        if (hits[id] != 1) {
            report.failure = "box " + all_boxes[id].source.to_string() + " contains " + std::to_string(hits[id]) +
                             " Lucas vertices";
            return report;
        }
        if (canonical_vertex(all_boxes[id]).bits != hit_by[id]) {
            report.failure = "box " + all_boxes[id].source.to_string() + " is not hit at its canonical vertex";
            return report;
        }
    }
    report.ok = true;
    return report;
}

} // namespace detail

/**
 * The Lucas vertices form a selector of the boxes other than {1}^n: each
 * vertex lies in exactly one box and each box holds exactly one vertex,
 * its canonical one. Indexed lookup.
 */
inline SelectorReport verify_selector(std::span<const DiscreteBox> boxes, int n)
{
    const BoxIndex index(boxes, n);
    return detail::check_selector(boxes, n, [&](std::uint64_t point) { return index.lookup(point); });
}

inline SelectorReport verify_selector(int n)
{
    detail::require_odd_at_least(n, 3, "verify_selector");
    const auto boxes = star_boxes(n);
    return verify_selector(boxes, n);
}

/// Same check with a linear scan of all boxes per vertex.
inline SelectorReport verify_selector_quadratic(std::span<const DiscreteBox> boxes, int n)
{
    return detail::check_selector(boxes, n, [&](std::uint64_t point) {
        std::vector<std::size_t> found;
        for (std::size_t id = 0; id < boxes.size(); ++id) {
            if (boxes[id].contains(point)) {
                found.push_back(id);
            }
        }
        return found;
    });
}

inline SelectorReport verify_selector_quadratic(int n)
{
    detail::require_odd_at_least(n, 3, "verify_selector_quadratic");
    const auto boxes = star_boxes(n);
    return verify_selector_quadratic(boxes, n);
}

} // namespace lucastile

#endif
