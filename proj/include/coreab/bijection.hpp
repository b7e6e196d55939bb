#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <vector>

#include "coreab/abacus.hpp"
#include "coreab/arith.hpp"
#include "coreab/enumerate.hpp"
#include "coreab/partition.hpp"

namespace coreab {

/// Composition: an ordered sequence of positive integers.
class Composition {
public:
    Composition() = default;

    explicit Composition(std::vector<Int> parts) : parts_(std::move(parts)) {
        for (Int p : parts_)
            if (p < 1) throw std::invalid_argument("Composition: parts must be positive");
    }

    Composition(std::initializer_list<Int> parts) : Composition(std::vector<Int>(parts)) {}

    const std::vector<Int>& parts() const { return parts_; }
    Int num_parts() const { return static_cast<Int>(parts_.size()); }

    Int size() const {
        Int total = 0;
        for (Int p : parts_) total = checked_add(total, p);
        return total;
    }

    std::string str() const {
        std::ostringstream out;
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) out << ",";
            out << parts_[i];
        }
        return out.str();
    }

    bool operator==(const Composition& o) const { return parts_ == o.parts_; }

private:
    std::vector<Int> parts_;
};

namespace detail {

/// True when p is an (s, 2s-1)-core partition into distinct parts.
inline bool in_two_row_family(const Partition& p, Int s) {
    return is_d_distinct(p, 1) && is_t_core_direct(p, s) && is_t_core_direct(p, 2 * s - 1);
}

} // namespace detail

/**
 * The composition of s attached to an (s, 2s-1)-core partition into distinct
 * parts.  On the s-abacus of the partition (two rows, every occupied column
 * holding a bead prefix), the first entry counts the empty columns before the
 * first bead; then the beads are read in increasing position order, each
 * contributing one entry:
 *   - the only bead of its column:    1 + the number of empty columns
 *                                     between it and the next occupied column
 *                                     (or the right edge);
 *   - lower bead of a full column:    1;
 *   - upper bead of a full column:    the number of empty columns between its
 *                                     column and the next occupied column.
 * The entries always add up to s; the empty partition maps to (s).
 */
inline Composition partition_to_composition(const Partition& p, Int s) {
    if (s < 2) throw std::invalid_argument("partition_to_composition: s must be at least 2");
    if (!detail::in_two_row_family(p, s))
        throw std::domain_error("partition_to_composition: partition not in family");
    Abacus a = to_abacus(p, s);
    if (a.empty()) return Composition{s};

    std::vector<Int> height(static_cast<size_t>(s), 0);
    for (Int pos : a.beads()) ++height[static_cast<size_t>(pos % s)];

    auto gap_after = [&](Int col) {
        Int next = col + 1;
        while (next < s && height[static_cast<size_t>(next)] == 0) ++next;
        return next - col - 1;
    };

    std::vector<Int> mu;
    mu.push_back(a.beads().front() % s); // empty columns before the first bead
    for (Int pos : a.beads()) {
        Int col = pos % s, row = pos / s;
        if (height[static_cast<size_t>(col)] == 1)
            mu.push_back(1 + gap_after(col));
        else if (row == 0)
            mu.push_back(1);
        else
            mu.push_back(gap_after(col));
    }
    Composition c(std::move(mu));
    if (c.size() != s)
        throw std::logic_error("partition_to_composition: entries do not sum to s");
    return c;
}

namespace detail {

/**
 * Attempt to realize mu as the readout of a two-row abacus with exactly
 * `bottom` occupied columns.  mu[1..bottom] then describes the bottom-row
 * beads in column order and the tail lists the upper-bead gaps, also in
 * column order.  Returns the bead positions on success.
 */
inline std::optional<std::vector<Int>> parse_two_row_abacus(const std::vector<Int>& mu, Int s,
                                                            Int bottom) {
    Int k = static_cast<Int>(mu.size());
    Int full_cols = k - 1 - bottom; // columns carrying two beads
    if (full_cols < 0 || full_cols > bottom) return std::nullopt;

    Int col = mu[0];
    Int tail = bottom + 1; // next unread upper-bead gap
    Int fulls_seen = 0;
    std::vector<Int> positions;
    for (Int i = 1; i <= bottom; ++i) {
        if (col > s - 1) return std::nullopt;
        bool last = (i == bottom);
        Int entry = mu[static_cast<size_t>(i)];
        bool full;
        if (entry == 1)
            full = last ? (fulls_seen < full_cols) : true;
        else
            full = false;
        Int gap;
        if (full) {
            if (tail >= k) return std::nullopt;
            gap = mu[static_cast<size_t>(tail++)];
            ++fulls_seen;
        } else {
            gap = entry - 1;
        }
        if (!last && gap < 1) return std::nullopt; // occupied columns may not touch
        positions.push_back(col);
        if (full) positions.push_back(s + col);
        col += 1 + gap;
    }
    if (col != s || fulls_seen != full_cols || tail != k) return std::nullopt;
    std::sort(positions.begin(), positions.end());
    return positions;
}

} // namespace detail

/**
 * Inverse of partition_to_composition: rebuilds the abacus by reading mu left
 * to right for each candidate number of occupied columns; exactly one
 * candidate yields a family member.
 */
inline Partition composition_to_partition(const Composition& c, Int s) {
    if (s < 2) throw std::invalid_argument("composition_to_partition: s must be at least 2");
    if (c.num_parts() < 1 || c.size() != s)
        throw std::invalid_argument("composition_to_partition: not a composition of s");

    std::vector<std::vector<Int>> matches;
    for (Int bottom = 0; bottom < c.num_parts(); ++bottom)
        if (auto positions = detail::parse_two_row_abacus(c.parts(), s, bottom))
            matches.push_back(std::move(*positions));
    if (matches.empty())
        throw std::invalid_argument("composition_to_partition: no family member matches");
    if (matches.size() > 1)
        throw std::logic_error("composition_to_partition: ambiguous parse");

    Partition p = from_abacus(Abacus(s, matches.front()));
    if (!(partition_to_composition(p, s) == c))
        throw std::logic_error("composition_to_partition: round trip failed");
    return p;
}

/**
 * Members of the family with maximal initial gap: the empty partition plus
 * every member with at least two parts and first gap exactly s - 1.  The
 * family is enumerated through its abaci, so the index only needs to satisfy
 * 1 <= r <= d or r = -1 (the range where abaci and partitions agree).
 */
inline std::vector<Partition> maximal_gap_members(Int s, Int m, Int r, Int d) {
    if (!((r >= 1 && r <= d) || r == -1))
        throw std::domain_error("maximal_gap_members: need 1 <= r <= d or r = -1");
    std::vector<Partition> out;
    for (const Abacus& a : enumerate_abaci(Params(s, m, r, d))) {
        Partition p = from_abacus(a);
        if (p.empty() || (p.num_parts() >= 2 && initial_gap(p) == s - 1))
            out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end(), graded_beta_less);
    return out;
}

/**
 * The part-dropping correspondence on maximal-gap members: (l1, l2, ...)
 * maps to (l2, ...) and the empty partition to itself.  The image lies in the
 * family with m - 1 rows, and the induced map is a bijection.
 */
inline Partition gap_correspondence(const Partition& p, const Params& params) {
    if (!((params.r >= 1 && params.r <= params.d) || params.r == -1))
        throw std::domain_error("gap_correspondence: need 1 <= r <= d or r = -1");
    if (p.empty()) return p;
    if (p.num_parts() < 2 || initial_gap(p) != params.s - 1 ||
        !in_family(to_abacus(p, params.s), params))
        throw std::domain_error("gap_correspondence: partition not in the maximal-gap family");
    std::vector<Int> tail(p.parts().begin() + 1, p.parts().end());
    return Partition(std::move(tail));
}

} // namespace coreab
