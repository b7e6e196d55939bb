#pragma once

#include <stdexcept>
#include <string>

namespace coreab {

/// Thrown when a family requires gcd(s, t) = 1 but the arguments share a factor.
class non_coprime_error : public std::domain_error {
public:
    non_coprime_error(long long s, long long t)
        : std::domain_error("family is infinite: gcd(" + std::to_string(s) + ", " +
                            std::to_string(t) + ") != 1") {}
};

/// Thrown when an exhaustive enumeration would exceed the configured budget.
class budget_exceeded_error : public std::runtime_error {
public:
    budget_exceeded_error(long long need, long long budget)
        : std::runtime_error("enumeration budget exceeded: gap set has " +
                             std::to_string(need) + " elements, budget is " +
                             std::to_string(budget)) {}
};

} // namespace coreab
