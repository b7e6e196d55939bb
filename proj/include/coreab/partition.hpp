#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "coreab/arith.hpp"

namespace coreab {

/**
 * Integer partition: a weakly decreasing sequence of positive parts.
 *
 * The constructor rejects unsorted or nonpositive input instead of silently
 * sorting, and the empty partition is an ordinary value.  Instances are
 * immutable after construction.
 */
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<Int> parts) : parts_(std::move(parts)) {
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1)
                throw std::invalid_argument("Partition: parts must be positive");
            if (i > 0 && parts_[i - 1] < parts_[i])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<Int> parts) : Partition(std::vector<Int>(parts)) {}

    /// Parses the CLI text form: comma-separated decreasing parts, "()" for empty.
    static Partition parse(const std::string& text) {
        if (text == "()") return Partition{};
        std::vector<Int> parts;
        std::istringstream in(text);
        std::string token;
        while (std::getline(in, token, ',')) {
            size_t used = 0;
            Int value = std::stoll(token, &used);
            if (used != token.size())
                throw std::invalid_argument("Partition::parse: bad part '" + token + "'");
            parts.push_back(value);
        }
        if (parts.empty())
            throw std::invalid_argument("Partition::parse: empty input (use \"()\")");
        return Partition(std::move(parts));
    }

    const std::vector<Int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    Int num_parts() const { return static_cast<Int>(parts_.size()); }

    /// |lambda|, the sum of the parts.
    Int size() const {
        Int total = 0;
        for (Int p : parts_) total = checked_add(total, p);
        return total;
    }

    std::string str() const {
        if (parts_.empty()) return "()";
        std::ostringstream out;
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) out << ",";
            out << parts_[i];
        }
        return out.str();
    }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }

private:
    std::vector<Int> parts_;
};

/**
 * Beta-set: the first column hook lengths of a partition, strictly decreasing
 * and positive.  These are exactly the bead positions of the abacus.
 */
class BetaSet {
public:
    BetaSet() = default;

    explicit BetaSet(std::vector<Int> hooks) : hooks_(std::move(hooks)) {
        for (size_t i = 0; i < hooks_.size(); ++i) {
            if (hooks_[i] < 1)
                throw std::invalid_argument("BetaSet: hooks must be positive");
            if (i > 0 && hooks_[i - 1] <= hooks_[i])
                throw std::invalid_argument("BetaSet: hooks must be strictly decreasing");
        }
    }

    BetaSet(std::initializer_list<Int> hooks) : BetaSet(std::vector<Int>(hooks)) {}

    /// Hooks in decreasing order, hooks()[i] pairing with part i.
    const std::vector<Int>& hooks() const { return hooks_; }

    std::vector<Int> ascending() const {
        std::vector<Int> a(hooks_.rbegin(), hooks_.rend());
        return a;
    }

    bool contains(Int h) const {
        return std::binary_search(hooks_.rbegin(), hooks_.rend(), h);
    }

    Int count() const { return static_cast<Int>(hooks_.size()); }

    bool operator==(const BetaSet& o) const { return hooks_ == o.hooks_; }

private:
    std::vector<Int> hooks_; // decreasing
};

/// h_i = lambda_i + r - i for a partition with r parts.
inline BetaSet parts_to_beta(const Partition& p) {
    const auto& parts = p.parts();
    Int r = p.num_parts();
    std::vector<Int> hooks(parts.size());
    for (size_t i = 0; i < parts.size(); ++i)
        hooks[i] = checked_add(parts[i], r - static_cast<Int>(i) - 1);
    return BetaSet(std::move(hooks));
}

/// Inverse of parts_to_beta; rejects beta-sets that would produce a zero part.
inline Partition beta_to_parts(const BetaSet& b) {
    const auto& hooks = b.hooks();
    Int r = b.count();
    std::vector<Int> parts(hooks.size());
    for (size_t i = 0; i < hooks.size(); ++i)
        parts[i] = checked_sub(hooks[i], r - static_cast<Int>(i) - 1);
    return Partition(std::move(parts));
}

/// |lambda| recovered from the beta-set: sum of hooks minus r(r-1)/2.
inline Int partition_size_from_beta(const BetaSet& b) {
    Int total = 0;
    for (Int h : b.hooks()) total = checked_add(total, h);
    Int r = b.count();
    return checked_sub(total, r * (r - 1) / 2);
}

/// Hook-by-hook test over every cell of the Young diagram.
inline bool is_t_core_direct(const Partition& p, Int t) {
    if (t < 1) throw std::invalid_argument("is_t_core_direct: t must be positive");
    const auto& parts = p.parts();
    Int r = p.num_parts();
    for (Int i = 0; i < r; ++i) {
        for (Int j = 0; j < parts[static_cast<size_t>(i)]; ++j) {
            Int arm = parts[static_cast<size_t>(i)] - j - 1;
            Int leg = 0;
            for (Int ii = i + 1; ii < r; ++ii)
                if (parts[static_cast<size_t>(ii)] >= j + 1) ++leg;
            if (arm + leg + 1 == t) return false;
        }
    }
    return true;
}

/// Beta-set test: every hook h >= t must have h - t in the set as well.
inline bool is_t_core_beta(const Partition& p, Int t) {
    if (t < 1) throw std::invalid_argument("is_t_core_beta: t must be positive");
    BetaSet b = parts_to_beta(p);
    for (Int h : b.hooks())
        if (h >= t && !b.contains(h - t)) return false;
    return true;
}

/// Consecutive parts differ by at least d (vacuously true for 0 or 1 parts).
inline bool is_d_distinct(const Partition& p, Int d) {
    if (d < 1) throw std::invalid_argument("is_d_distinct: d must be positive");
    const auto& parts = p.parts();
    for (size_t i = 1; i < parts.size(); ++i)
        if (parts[i - 1] - parts[i] < d) return false;
    return true;
}

/// lambda_1 - lambda_2; only defined when there are at least two parts.
inline Int initial_gap(const Partition& p) {
    if (p.num_parts() < 2)
        throw std::domain_error("initial gap undefined for partitions with fewer than two parts");
    return p.parts()[0] - p.parts()[1];
}

/// Largest hook length: lambda_1 + r - 1, or 0 for the empty partition.
inline Int max_hook(const Partition& p) {
    if (p.empty()) return 0;
    return checked_add(p.parts()[0], p.num_parts() - 1);
}

/**
 * Canonical enumeration order for family listings: fewer parts first, ties
 * broken lexicographically on the ascending beta-set.  This is the order the
 * worked family listings use.
 */
inline bool graded_beta_less(const Partition& a, const Partition& b) {
    if (a.num_parts() != b.num_parts()) return a.num_parts() < b.num_parts();
    return parts_to_beta(a).ascending() < parts_to_beta(b).ascending();
}

} // namespace coreab
