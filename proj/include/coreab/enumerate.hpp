#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "coreab/abacus.hpp"
#include "coreab/arith.hpp"
#include "coreab/errors.hpp"
#include "coreab/partition.hpp"
#include "coreab/qpoly.hpp"

namespace coreab {

/// Default cap on |F(s, t)| for the downset enumerations below.
inline constexpr Int default_budget = 40;

namespace detail {

/**
 * Visit every s-core abacus with spacing d and all positions < bound, as a
 * sorted position vector.  A core abacus has a bead prefix in each column, so
 * the sweep chooses a height per column; extending a column only adds beads,
 * which lets the height loop stop at the first spacing violation.
 */
template <typename Visitor>
void for_each_core_abacus(Int s, Int bound, Int d, Visitor&& visit) {
    if (s < 1) throw std::invalid_argument("abacus enumeration: s must be positive");
    if (d < 1) throw std::invalid_argument("abacus enumeration: d must be positive");

    std::vector<Int> positions; // all beads chosen so far, any order
    auto conflicts = [&](Int p) {
        for (Int q : positions)
            if (std::abs(p - q) <= d) return true;
        return false;
    };

    auto sweep = [&](auto&& self, Int col) -> void {
        if (col >= s || col >= bound) {
            std::vector<Int> sorted = positions;
            std::sort(sorted.begin(), sorted.end());
            visit(sorted);
            return;
        }
        self(self, col + 1); // column left empty
        size_t base = positions.size();
        for (Int row = 0;; ++row) {
            Int p = row * s + col;
            if (p >= bound) break;
            if (row > 0 && s <= d) break; // beads within a column sit s apart
            if (conflicts(p)) break;
            positions.push_back(p);
            self(self, col + 1);
        }
        positions.resize(base);
    };
    sweep(sweep, 1); // column 0 stays empty
}

/**
 * Visit every subset of the gap set F (ascending) that is closed under
 * subtracting s and t and, when d > 0, has all pairwise gaps > d.  These are
 * exactly the beta-sets of the (s, t)-core partitions (d-distinct when d > 0).
 */
template <typename Visitor>
void for_each_downset(const std::vector<Int>& gaps, Int s, Int t, Int d, Visitor&& visit) {
    std::vector<Int> chosen;
    auto contains = [&](Int h) {
        return std::binary_search(chosen.begin(), chosen.end(), h);
    };
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == gaps.size()) {
            visit(chosen);
            return;
        }
        self(self, i + 1); // exclude gaps[i]
        Int h = gaps[i];
        bool closed = (h - s < 1 || contains(h - s)) && (h - t < 1 || contains(h - t));
        bool spaced = d == 0 || chosen.empty() || h - chosen.back() > d;
        if (closed && spaced) {
            chosen.push_back(h);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
}

inline Partition partition_from_positions(const std::vector<Int>& ascending) {
    std::vector<Int> hooks(ascending.rbegin(), ascending.rend());
    return beta_to_parts(BetaSet(std::move(hooks)));
}

} // namespace detail

/**
 * Every member of the family indexed by params, ordered lexicographically on
 * the sorted position lists (so the empty abacus comes first).
 */
inline std::vector<Abacus> enumerate_abaci(const Params& params) {
    if (params.s < 1) throw std::invalid_argument("enumerate_abaci: s must be positive");
    std::vector<std::vector<Int>> all;
    detail::for_each_core_abacus(params.s, params.bound(), params.d,
                                 [&](const std::vector<Int>& pos) { all.push_back(pos); });
    std::sort(all.begin(), all.end());
    std::vector<Abacus> out;
    out.reserve(all.size());
    for (auto& pos : all) out.emplace_back(params.s, std::move(pos));
    return out;
}

/// Bead-count generating polynomial of the family with position bound given directly.
/// Follows the conventions for degenerate parameters: 0 for s < 0, 1 for s = 0.
inline QPolynomial abacus_poly_bruteforce_bound(Int s, Int bound, Int d) {
    if (s < 0) return QPolynomial::zero();
    if (s == 0) return QPolynomial::one();
    std::vector<Int> counts;
    detail::for_each_core_abacus(s, bound, d, [&](const std::vector<Int>& pos) {
        if (pos.size() >= counts.size()) counts.resize(pos.size() + 1, 0);
        counts[pos.size()] = checked_add(counts[pos.size()], 1);
    });
    return QPolynomial(std::move(counts));
}

/// Exhaustive computation of the family's bead-count generating polynomial.
inline QPolynomial abacus_poly_bruteforce(const Params& params) {
    return abacus_poly_bruteforce_bound(params.s, params.bound(), params.d);
}

/**
 * The gap set F(s, t): positive integers not representable as a nonnegative
 * combination of s and t, in ascending order.  |F| = (s-1)(t-1)/2 and the
 * largest element is st - s - t.
 */
inline std::vector<Int> frobenius_gaps(Int s, Int t) {
    if (s < 1 || t < 1) throw std::invalid_argument("frobenius_gaps: s, t must be positive");
    if (std::gcd(s, t) != 1) throw non_coprime_error(s, t);
    if (s == 1 || t == 1) return {};
    Int top = checked_sub(checked_mul(s, t), checked_add(s, t));
    std::vector<char> representable(static_cast<size_t>(top) + 1, 0);
    representable[0] = 1;
    for (Int x = 1; x <= top; ++x)
        representable[static_cast<size_t>(x)] =
            (x >= s && representable[static_cast<size_t>(x - s)]) ||
            (x >= t && representable[static_cast<size_t>(x - t)]);
    std::vector<Int> gaps;
    for (Int x = 1; x <= top; ++x)
        if (!representable[static_cast<size_t>(x)]) gaps.push_back(x);
    return gaps;
}

/**
 * All (s, t)-core partitions into d-distinct parts, enumerated as closed
 * beta-subsets of F(s, t) and re-verified against the hook-length predicates.
 * Output is in graded beta order.
 */
inline std::vector<Partition> enumerate_core_distinct(Int s, Int t, Int d,
                                                      Int budget = default_budget) {
    if (d < 1) throw std::invalid_argument("enumerate_core_distinct: d must be positive");
    auto gaps = frobenius_gaps(s, t);
    if (static_cast<Int>(gaps.size()) > budget)
        throw budget_exceeded_error(static_cast<Int>(gaps.size()), budget);
    std::vector<Partition> out;
    detail::for_each_downset(gaps, s, t, d, [&](const std::vector<Int>& beta) {
        Partition p = detail::partition_from_positions(beta);
        if (!is_t_core_direct(p, s) || !is_t_core_direct(p, t) || !is_d_distinct(p, d))
            throw std::logic_error("enumerate_core_distinct: candidate failed re-verification");
        out.push_back(std::move(p));
    });
    std::sort(out.begin(), out.end(), graded_beta_less);
    return out;
}

/// Part-count generating polynomial over enumerate_core_distinct(s, t, d).
inline QPolynomial core_parts_poly_bruteforce(Int s, Int t, Int d,
                                              Int budget = default_budget) {
    std::vector<Int> counts;
    for (const Partition& p : enumerate_core_distinct(s, t, d, budget)) {
        size_t k = static_cast<size_t>(p.num_parts());
        if (k >= counts.size()) counts.resize(k + 1, 0);
        counts[k] = checked_add(counts[k], 1);
    }
    return QPolynomial(std::move(counts));
}

/// All (s, t)-core partitions, with no restriction on the parts.
inline std::vector<Partition> enumerate_all_core(Int s, Int t, Int budget = default_budget) {
    auto gaps = frobenius_gaps(s, t);
    if (static_cast<Int>(gaps.size()) > budget)
        throw budget_exceeded_error(static_cast<Int>(gaps.size()), budget);
    std::vector<Partition> out;
    detail::for_each_downset(gaps, s, t, 0, [&](const std::vector<Int>& beta) {
        out.push_back(detail::partition_from_positions(beta));
    });
    std::sort(out.begin(), out.end(), graded_beta_less);
    return out;
}

} // namespace coreab
