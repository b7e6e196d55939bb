#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <vector>

#include "coreab/arith.hpp"

namespace coreab {

/**
 * Univariate polynomial in q with exact integer coefficients.
 *
 * Coefficients are stored densely, index k holding the coefficient of q^k,
 * with trailing zeros trimmed.  The zero polynomial is the empty sequence and
 * reports degree -1.  Counting polynomials produced by this library have
 * nonnegative coefficients, but the type itself supports subtraction so that
 * identities can be rearranged.
 */
class QPolynomial {
public:
    QPolynomial() = default;
    explicit QPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static QPolynomial zero() { return QPolynomial(); }
    static QPolynomial one() { return monomial(0); }

    /// c * q^k
    static QPolynomial monomial(Int k, Int c = 1) {
        if (k < 0) throw std::invalid_argument("monomial: negative exponent");
        if (c == 0) return {};
        std::vector<Int> v(static_cast<size_t>(k) + 1, 0);
        v.back() = c;
        return QPolynomial(std::move(v));
    }

    /// q^lo + q^(lo+1) + ... + q^hi (zero when hi < lo)
    static QPolynomial geometric_block(Int lo, Int hi) {
        if (lo < 0) throw std::invalid_argument("geometric_block: negative exponent");
        if (hi < lo) return {};
        std::vector<Int> v(static_cast<size_t>(hi) + 1, 0);
        for (Int k = lo; k <= hi; ++k) v[static_cast<size_t>(k)] = 1;
        return QPolynomial(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    Int degree() const { return static_cast<Int>(coeffs_.size()) - 1; }

    Int coeff(Int k) const {
        if (k < 0 || k >= static_cast<Int>(coeffs_.size())) return 0;
        return coeffs_[static_cast<size_t>(k)];
    }

    const std::vector<Int>& coefficients() const { return coeffs_; }

    bool operator==(const QPolynomial& o) const { return coeffs_ == o.coeffs_; }

    QPolynomial& operator+=(const QPolynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
        for (size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[i] = checked_add(coeffs_[i], o.coeffs_[i]);
        trim();
        return *this;
    }

    QPolynomial& operator-=(const QPolynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
        for (size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[i] = checked_sub(coeffs_[i], o.coeffs_[i]);
        trim();
        return *this;
    }

    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }

    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Int> r(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            for (size_t j = 0; j < b.coeffs_.size(); ++j)
                r[i + j] = checked_add(r[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
        return QPolynomial(std::move(r));
    }

    QPolynomial times_monomial(Int k) const {
        if (is_zero()) return {};
        if (k < 0) throw std::invalid_argument("times_monomial: negative exponent");
        std::vector<Int> r(coeffs_.size() + static_cast<size_t>(k), 0);
        std::copy(coeffs_.begin(), coeffs_.end(), r.begin() + k);
        return QPolynomial(std::move(r));
    }

    QPolynomial pow(Int e) const {
        if (e < 0) throw std::invalid_argument("pow: negative exponent");
        QPolynomial result = one(), base = *this;
        while (e > 0) {
            if (e & 1) result = result * base;
            base = base * base;
            e >>= 1;
        }
        return result;
    }

    Int evaluate(Int x) const {
        Int acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = checked_add(checked_mul(acc, x), *it);
        return acc;
    }

    QPolynomial derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<Int> r(coeffs_.size() - 1);
        for (size_t k = 1; k < coeffs_.size(); ++k)
            r[k - 1] = checked_mul(coeffs_[k], static_cast<Int>(k));
        return QPolynomial(std::move(r));
    }

    /// k-th derivative evaluated at q = 1 (the k-th factorial moment of the counts).
    Int factorial_moment(Int k) const {
        if (k < 0) throw std::invalid_argument("factorial_moment: negative order");
        QPolynomial p = *this;
        for (Int i = 0; i < k; ++i) p = p.derivative();
        return p.evaluate(1);
    }

    /// Exact quotient, or nullopt when the division leaves a remainder.
    std::optional<QPolynomial> divide_exact(const QPolynomial& divisor) const {
        if (divisor.is_zero()) throw std::invalid_argument("divide_exact: division by zero");
        if (is_zero()) return QPolynomial{};
        if (degree() < divisor.degree()) return std::nullopt;
        std::vector<Int> rem = coeffs_;
        std::vector<Int> quot(coeffs_.size() - divisor.coeffs_.size() + 1, 0);
        const Int lead = divisor.coeffs_.back();
        for (size_t k = quot.size(); k-- > 0;) {
            Int top = rem[k + divisor.coeffs_.size() - 1];
            if (top % lead != 0) return std::nullopt;
            Int q = top / lead;
            quot[k] = q;
            for (size_t j = 0; j < divisor.coeffs_.size(); ++j)
                rem[k + j] = checked_sub(rem[k + j], checked_mul(q, divisor.coeffs_[j]));
        }
        if (std::any_of(rem.begin(), rem.end(), [](Int c) { return c != 0; }))
            return std::nullopt;
        return QPolynomial(std::move(quot));
    }

    /// Human-readable rendering, e.g. "1 + 3q + 4q^2"; "0" for the zero polynomial.
    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream out;
        bool first = true;
        for (size_t k = 0; k < coeffs_.size(); ++k) {
            Int c = coeffs_[k];
            if (c == 0) continue;
            if (first) {
                if (c < 0) out << "-";
                first = false;
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            Int a = c < 0 ? -c : c;
            if (k == 0) {
                out << a;
            } else {
                if (a != 1) out << a;
                out << "q";
                if (k > 1) out << "^" << k;
            }
        }
        return out.str();
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Int> coeffs_;
};

} // namespace coreab
