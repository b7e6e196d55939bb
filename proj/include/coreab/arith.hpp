#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace coreab {

/**
 * All counting is exact.  Values are kept in 64-bit integers and every
 * addition/multiplication is overflow-checked, so a result that does not fit
 * raises std::overflow_error instead of silently wrapping.
 */
using Int = long long;

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("exact integer addition overflowed 64 bits");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("exact integer subtraction overflowed 64 bits");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("exact integer multiplication overflowed 64 bits");
    return r;
}

/// Fibonacci numbers with F(1) = F(2) = 1 (and F(0) = 0).
inline Int fibonacci(Int n) {
    if (n < 0) throw std::invalid_argument("fibonacci: negative index");
    Int a = 0, b = 1;
    for (Int i = 0; i < n; ++i) {
        Int next = checked_add(a, b);
        a = b;
        b = next;
    }
    return a;
}

/// Exact binomial coefficient; 0 when k is out of range.
inline Int binomial(Int n, Int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (Int i = 0; i < k; ++i) {
        r = checked_mul(r, n - i);
        r /= i + 1; // divides exactly at every step
    }
    return r;
}

inline Int checked_pow2(Int e) {
    if (e < 0 || e >= 63) throw std::overflow_error("2^" + std::to_string(e) + " overflows 64 bits");
    return Int(1) << e;
}

/// Floored division (quotient rounds toward negative infinity).
inline Int floor_div(Int a, Int b) {
    Int q = a / b, rem = a % b;
    return (rem != 0 && ((rem < 0) != (b < 0))) ? q - 1 : q;
}

/// Remainder paired with floor_div; always in [0, |b|).
inline Int floor_mod(Int a, Int b) { return a - checked_mul(floor_div(a, b), b); }

} // namespace coreab
