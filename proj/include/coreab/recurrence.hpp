#pragma once

#include <map>
#include <utility>

#include "coreab/abacus.hpp"
#include "coreab/arith.hpp"
#include "coreab/enumerate.hpp"
#include "coreab/qpoly.hpp"

namespace coreab {

/**
 * Canonical form of a family index.  The family depends on (s, d) and the
 * position bound N = m*s + r only, so every index reduces to one of:
 *   Zero                  s < 0, the zero polynomial;
 *   One                   only the empty abacus fits (s = 0, or N <= 1);
 *   Reduced(s, m', r')    N >= 2 with m' >= 1 and 0 <= r' < s, after the
 *                         rewrite N = m's + r' (indices with N < s first
 *                         delegate to the N-column family with bound N).
 */
enum class CanonicalShape { zero, one, reduced };

struct CanonicalParams {
    CanonicalShape shape;
    Int s = 0;
    Int m = 0;
    Int r = 0;

    bool operator==(const CanonicalParams& o) const {
        return shape == o.shape && s == o.s && m == o.m && r == o.r;
    }
};

inline CanonicalParams canonicalize(const Params& params) {
    if (params.s < 0) return {CanonicalShape::zero};
    if (params.s == 0) return {CanonicalShape::one};
    Int bound = params.bound();
    if (bound <= 1) return {CanonicalShape::one}; // position 0 is forbidden
    if (bound < params.s) return {CanonicalShape::reduced, bound, 1, 0};
    return {CanonicalShape::reduced, params.s, bound / params.s, bound % params.s};
}

/**
 * Base polynomials for 1 <= s <= d + 1, valid for any integer r.
 *
 * For s <= d the abacus holds at most one bead:
 *     1 + min(s - 1, m s + r - 1)^+ q.
 * For s = d + 1, write r = s r' + r0 with 0 <= r0 <= d; then the polynomial
 * is 1 when m + r' < 0 and otherwise
 *     1 + d (q + ... + q^(m + r')) + (r0 - 1)^+ q^(m + r' + 1).
 */
inline QPolynomial initial_poly(Int s, Int m, Int r, Int d) {
    if (m < 1 || d < 1) throw std::invalid_argument("initial_poly: m, d must be positive");
    if (s < 1 || s > d + 1)
        throw std::out_of_range("initial_poly: out of range, need 1 <= s <= d + 1");
    auto clamp0 = [](Int x) { return x > 0 ? x : 0; };
    if (s <= d) {
        Int ways = std::min(s - 1, checked_sub(checked_add(checked_mul(m, s), r), 1));
        return QPolynomial::one() + QPolynomial::monomial(1, clamp0(ways));
    }
    Int rq = floor_div(r, s), r0 = floor_mod(r, s);
    Int rows = checked_add(m, rq);
    if (rows < 0) return QPolynomial::one();
    QPolynomial p = QPolynomial::one();
    if (rows >= 1) {
        QPolynomial block = QPolynomial::geometric_block(1, rows);
        p += QPolynomial(std::vector<Int>{d}) * block;
    }
    if (r0 - 1 > 0) p += QPolynomial::monomial(rows + 1, r0 - 1);
    return p;
}

/**
 * Bead-count generating polynomial of the family, for arbitrary parameters.
 *
 * Computation: canonicalize, answer the degenerate shapes directly, use the
 * base polynomials for s <= d + 1 and otherwise descend via
 *     f_s = f_(s-1) + (q + ... + q^m) f_(s-d-1)
 * within the canonical family (the bound m t + r varies with t).  Sub-indices
 * re-canonicalize themselves, so the descent never leaves the regime where
 * the step is valid.  The memo is per call, keyed on (s, bound).
 */
inline QPolynomial abacus_poly(const Params& params) {
    std::map<std::pair<Int, Int>, QPolynomial> memo;
    Int d = params.d;
    auto rec = [&](auto&& self, Int s, Int bound) -> QPolynomial {
        if (s < 0) return QPolynomial::zero();
        if (s == 0 || bound <= 1) return QPolynomial::one();
        auto key = std::make_pair(s, bound);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        QPolynomial result;
        if (bound < s) {
            result = self(self, bound, bound); // delegate to the bound-column family
        } else {
            Int m = bound / s, r = bound % s;
            if (s <= d + 1) {
                result = initial_poly(s, m, r, d);
            } else {
                QPolynomial drop_col = self(self, s - 1, checked_add(checked_mul(m, s - 1), r));
                QPolynomial drop_block =
                    self(self, s - d - 1, checked_add(checked_mul(m, s - d - 1), r));
                result = drop_col + QPolynomial::geometric_block(1, m) * drop_block;
            }
        }
        memo.emplace(key, result);
        return result;
    };
    if (params.s < 0) return QPolynomial::zero();
    if (params.s == 0) return QPolynomial::one();
    return rec(rec, params.s, params.bound());
}

/**
 * Part-count generating polynomial of the (s, m s + r)-core partitions into
 * d-distinct parts.  Equals abacus_poly exactly when 1 <= r <= d or r = -1;
 * other r are refused because the correspondence between the two families is
 * not guaranteed there (callers wanting the abacus polynomial anyway should
 * ask for it explicitly).
 */
inline QPolynomial core_poly(Int s, Int m, Int r, Int d) {
    if (!((r >= 1 && r <= d) || r == -1))
        throw std::domain_error(
            "core_poly: correspondence not guaranteed, need 1 <= r <= d or r = -1");
    return abacus_poly(Params(s, m, r, d));
}

/**
 * Hypothesis grids under which the step recurrence is proved (or, for the
 * boundary rule, established separately).  Used to drive the verification
 * sweeps; the identity itself is always checked by brute force.
 */
enum class RecurrenceRule {
    nonneg_bound,   // r >= 0, s > d + 1 and s > r
    neg_bound_wide, // r <= -1, s > 2d + |r|
    neg_unit_edge,  // r = -1, s exactly 2d + 2
    neg_bound_small,// -(d+1) <= r <= -1, s > 2d + 1
    neg_bound_d1,   // d = 1, r <= -1, s > |r| + 1
};

inline bool rule_applies(const Params& p, RecurrenceRule rule) {
    switch (rule) {
    case RecurrenceRule::nonneg_bound:
        return p.r >= 0 && p.s > p.d + 1 && p.s > p.r;
    case RecurrenceRule::neg_bound_wide:
        return p.r <= -1 && p.s > 2 * p.d - p.r;
    case RecurrenceRule::neg_unit_edge:
        return p.r == -1 && p.s == 2 * p.d + 2;
    case RecurrenceRule::neg_bound_small:
        return p.r <= -1 && p.r >= -(p.d + 1) && p.s > 2 * p.d + 1;
    case RecurrenceRule::neg_bound_d1:
        return p.d == 1 && p.r <= -1 && p.s > -p.r + 1;
    }
    return false;
}

/**
 * Checks f_s = f_(s-1) + (q + ... + q^m) f_(s-d-1) with all three polynomials
 * computed by the exhaustive oracle, never by the recurrence itself.  The
 * rule names which hypothesis grid the caller is sweeping and must apply to
 * the given parameters.
 */
inline bool check_recurrence(const Params& params, RecurrenceRule rule) {
    if (!rule_applies(params, rule))
        throw std::invalid_argument("check_recurrence: rule hypothesis does not cover params");
    auto f = [&](Int t) {
        return abacus_poly_bruteforce_bound(t, checked_add(checked_mul(params.m, t), params.r),
                                            params.d);
    };
    QPolynomial lhs = f(params.s);
    QPolynomial rhs =
        f(params.s - 1) + QPolynomial::geometric_block(1, params.m) * f(params.s - params.d - 1);
    return lhs == rhs;
}

/**
 * Brute-force check of the decomposition (spacing 1, s >= r >= 1, m >= 1):
 *   A(s, m) = A(s, m, -r) + q^m * sum_(k=1..r) A(s-k-1, m) A(k-1, m-1)
 * with the conventions A = 0 for negative column counts and A = 1 for zero.
 */
inline bool rneg_decomposition_check(Int s, Int m, Int r) {
    if (m < 1 || r < 1 || s < r)
        throw std::invalid_argument("rneg_decomposition_check: need m, r >= 1 and s >= r");
    auto a = [&](Int cols, Int rows) {
        return abacus_poly_bruteforce_bound(cols, checked_mul(rows, cols), 1);
    };
    QPolynomial lhs = a(s, m);
    QPolynomial rhs = abacus_poly_bruteforce_bound(s, checked_sub(checked_mul(m, s), r), 1);
    QPolynomial tail;
    for (Int k = 1; k <= r; ++k) tail += a(s - k - 1, m) * a(k - 1, m - 1);
    rhs += tail.times_monomial(m);
    return lhs == rhs;
}

/// Brute-force check of A^d(t, m, -r) = A^d(t, m-1, t-r) for t >= 0, m >= 2, r >= 1.
inline bool rnegpos_identity_check(Int t, Int m, Int r, Int d) {
    if (t < 0 || m < 2 || r < 1 || d < 1)
        throw std::invalid_argument("rnegpos_identity_check: need t >= 0, m >= 2, r >= 1, d >= 1");
    QPolynomial lhs = abacus_poly_bruteforce_bound(t, checked_sub(checked_mul(m, t), r), d);
    QPolynomial rhs =
        abacus_poly_bruteforce_bound(t, checked_add(checked_mul(m - 1, t), t - r), d);
    return lhs == rhs;
}

} // namespace coreab
