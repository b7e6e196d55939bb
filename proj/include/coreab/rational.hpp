#pragma once

#include <numeric>
#include <string>

#include "coreab/arith.hpp"

namespace coreab {

/// Exact rational number; kept reduced with a positive denominator.
struct Rational {
    Int num = 0;
    Int den = 1;

    Rational() = default;
    Rational(Int n, Int d = 1) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) { num = checked_sub(0, num); den = checked_sub(0, den); }
        Int g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }

    bool is_integer() const { return den == 1; }

    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

} // namespace coreab
