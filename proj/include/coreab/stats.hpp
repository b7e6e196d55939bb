#pragma once

#include <utility>
#include <vector>

#include "coreab/arith.hpp"
#include "coreab/enumerate.hpp"
#include "coreab/qpoly.hpp"
#include "coreab/rational.hpp"
#include "coreab/recurrence.hpp"

namespace coreab {

/**
 * Count, total number of parts, exact average, and factorial moments of a
 * family's part-count polynomial.  factorial_moments[k-1] is the k-th
 * derivative at 1 (so the first entry repeats total_parts).
 */
struct MomentReport {
    Params params;
    Int count;
    Int total_parts;
    Rational average;
    std::vector<Int> factorial_moments;
};

namespace detail {

inline MomentReport report_from_poly(const Params& params, const QPolynomial& f, Int orders) {
    if (orders < 1) throw std::invalid_argument("moment report: need at least one order");
    MomentReport rep{params, f.evaluate(1), f.derivative().evaluate(1), Rational(0), {}};
    rep.average = Rational(rep.total_parts, rep.count);
    QPolynomial g = f;
    for (Int k = 1; k <= orders; ++k) {
        g = g.derivative();
        rep.factorial_moments.push_back(g.evaluate(1));
    }
    return rep;
}

} // namespace detail

/**
 * Maximum number of parts of the (s, m s + r)-core partitions into d-distinct
 * parts -- equivalently the maximum bead count of the corresponding abaci and
 * the degree of the generating polynomial.  Stated ranges:
 *   r = -1 with s > 2,  r = 1 with s >= 1,  or  2 <= r <= max(s, d) with s > 1.
 */
inline Int max_parts_formula(Int s, Int m, Int r, Int d) {
    if (m < 1 || d < 1) throw std::invalid_argument("max_parts_formula: m, d must be positive");
    Int base = (s / (d + 1)) * m;
    if (r == -1) {
        if (s <= 2) throw std::out_of_range("max_parts_formula: out of stated range");
        if (d == 1 && s % 2 == 0) return base - 1;
        return base + (s % (d + 1) <= 2 ? 0 : 1);
    }
    if (r == 1) {
        if (s < 1) throw std::out_of_range("max_parts_formula: out of stated range");
        return base + (s % (d + 1) <= 1 ? 0 : 1);
    }
    if (r >= 2 && (s >= r || (r <= d && s > 1)))
        return base + (r - 2) / (d + 1) + 1;
    throw std::out_of_range("max_parts_formula: out of stated range");
}

/// Maximum number of parts over all (s, t)-core partitions: (s-1)(t-1)/2.
inline Int max_parts_unrestricted(Int s, Int t) {
    if (s < 2 || t < 2) throw std::invalid_argument("max_parts_unrestricted: need s, t > 1");
    if (std::gcd(s, t) != 1) throw non_coprime_error(s, t);
    return checked_mul(s - 1, t - 1) / 2;
}

/// Moment report for the core-partition family (r restricted as in core_poly).
inline MomentReport moment_report(Int s, Int m, Int r, Int d, Int orders = 2) {
    return detail::report_from_poly(Params(s, m, r, d), core_poly(s, m, r, d), orders);
}

/// Moment report for the abacus family, available for every r.
inline MomentReport abacus_moment_report(const Params& params, Int orders = 2) {
    return detail::report_from_poly(params, abacus_poly(params), orders);
}

/**
 * Total number of parts of the (s, s+1)-core partitions into distinct parts,
 * computed two ways: the Fibonacci convolution sum F_i F_j over i + j = s,
 * and the closed form (2 s F_(s+1) - (s+1) F_s) / 5.  Returned as a pair.
 */
inline std::pair<Int, Int> fib_parts_identity(Int s) {
    if (s < 1) throw std::invalid_argument("fib_parts_identity: s must be positive");
    Int conv = 0;
    for (Int i = 1; i < s; ++i)
        conv = checked_add(conv, checked_mul(fibonacci(i), fibonacci(s - i)));
    Int closed = checked_sub(checked_mul(2 * s, fibonacci(s + 1)),
                             checked_mul(s + 1, fibonacci(s)));
    if (closed % 5 != 0) throw std::logic_error("fib_parts_identity: closed form not divisible by 5");
    return {conv, closed / 5};
}

struct CoreSizeExtremes {
    Int max_size;
    Rational average_size;
    Int count;
};

/// Max and exact average of |lambda| over all (s, t)-core partitions.
inline CoreSizeExtremes core_size_extremes(Int s, Int t, Int budget = default_budget) {
    auto family = enumerate_all_core(s, t, budget);
    Int total = 0, max_size = 0;
    for (const Partition& p : family) {
        Int sz = p.size();
        total = checked_add(total, sz);
        if (sz > max_size) max_size = sz;
    }
    Int count = static_cast<Int>(family.size());
    return {max_size, Rational(total, count), count};
}

/**
 * Total size of the (s, s+1)-core partitions into distinct parts, computed as
 * the triple Fibonacci convolution over i + j + k = s + 1 and by exhaustive
 * enumeration.  Returned as (convolution, enumerated total).
 */
inline std::pair<Int, Int> xiong_size_sum(Int s, Int budget = default_budget) {
    if (s < 1) throw std::invalid_argument("xiong_size_sum: s must be positive");
    Int conv = 0;
    for (Int i = 1; i <= s - 1; ++i)
        for (Int j = 1; j <= s - i; ++j) {
            Int k = s + 1 - i - j;
            if (k >= 1)
                conv = checked_add(conv,
                                   checked_mul(checked_mul(fibonacci(i), fibonacci(j)),
                                               fibonacci(k)));
        }
    Int total = 0;
    for (const Partition& p : enumerate_core_distinct(s, s + 1, 1, budget))
        total = checked_add(total, p.size());
    return {conv, total};
}

} // namespace coreab
