#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "coreab/arith.hpp"
#include "coreab/partition.hpp"

namespace coreab {

/**
 * An s-abacus: s columns and unboundedly many rows, with beads on a finite
 * set of distinct nonnegative positions.  Position p sits in row p/s, column
 * p mod s.  Rows are implicit; only the bead positions are stored.
 */
class Abacus {
public:
    explicit Abacus(Int columns, std::vector<Int> beads = {})
        : columns_(columns), beads_(std::move(beads)) {
        if (columns_ < 1) throw std::invalid_argument("Abacus: need at least one column");
        std::sort(beads_.begin(), beads_.end());
        for (size_t i = 0; i < beads_.size(); ++i) {
            if (beads_[i] < 0)
                throw std::invalid_argument("Abacus: bead positions must be nonnegative");
            if (i > 0 && beads_[i - 1] == beads_[i])
                throw std::invalid_argument("Abacus: bead positions must be distinct");
        }
    }

    Int columns() const { return columns_; }
    const std::vector<Int>& beads() const { return beads_; } // ascending
    Int bead_count() const { return static_cast<Int>(beads_.size()); }
    bool empty() const { return beads_.empty(); }

    std::optional<Int> max_position() const {
        if (beads_.empty()) return std::nullopt;
        return beads_.back();
    }

    bool has_bead(Int position) const {
        return std::binary_search(beads_.begin(), beads_.end(), position);
    }

    bool operator==(const Abacus& o) const {
        return columns_ == o.columns_ && beads_ == o.beads_;
    }

    /**
     * Text rendering, one row per line with '.' for a spacer and 'o' for a
     * bead.  Row 0 is printed last, matching the usual bottom-up drawings.
     * The empty abacus renders as a single empty row.
     */
    std::string render() const {
        Int rows = beads_.empty() ? 1 : beads_.back() / columns_ + 1;
        std::ostringstream out;
        for (Int row = rows - 1; row >= 0; --row) {
            for (Int col = 0; col < columns_; ++col)
                out << (has_bead(row * columns_ + col) ? 'o' : '.');
            if (row > 0) out << '\n';
        }
        return out.str();
    }

private:
    Int columns_;
    std::vector<Int> beads_;
};

/**
 * The family index (s, m, r, d): s-core abaci with spacing d whose maximum
 * position is strictly less than m*s + r.  s and r may be any integers here;
 * canonicalization deals with the degenerate combinations.
 */
struct Params {
    Int s;
    Int m;
    Int r;
    Int d;

    Params(Int s_, Int m_, Int r_, Int d_) : s(s_), m(m_), r(r_), d(d_) {
        if (m < 1) throw std::invalid_argument("Params: m must be positive");
        if (d < 1) throw std::invalid_argument("Params: d must be positive");
    }

    /// The position bound m*s + r.
    Int bound() const { return checked_add(checked_mul(m, s), r); }

    bool operator==(const Params& o) const {
        return s == o.s && m == o.m && r == o.r && d == o.d;
    }
};

/// Place the first column hook lengths of p on an s-abacus.
inline Abacus to_abacus(const Partition& p, Int s) {
    if (s < 1) throw std::invalid_argument("to_abacus: s must be positive");
    return Abacus(s, parts_to_beta(p).ascending());
}

/// Inverse of to_abacus; the beads are read back as a beta-set.
inline Partition from_abacus(const Abacus& a) {
    std::vector<Int> hooks(a.beads().rbegin(), a.beads().rend());
    return beta_to_parts(BetaSet(std::move(hooks)));
}

/// Empty first column and no spacer below any bead.
inline bool is_s_core_abacus(const Abacus& a) {
    Int s = a.columns();
    for (Int p : a.beads()) {
        if (p % s == 0) return false;
        if (p >= s && !a.has_bead(p - s)) return false;
    }
    return true;
}

/// All pairs of bead positions differ by more than d.
inline bool has_spacing(const Abacus& a, Int d) {
    if (d < 1) throw std::invalid_argument("has_spacing: d must be positive");
    const auto& beads = a.beads();
    for (size_t i = 1; i < beads.size(); ++i)
        if (beads[i] - beads[i - 1] <= d) return false;
    return true;
}

/// Membership in the family indexed by params (which must share the column count).
inline bool in_family(const Abacus& a, const Params& params) {
    if (params.s != a.columns())
        throw std::invalid_argument("in_family: params.s must equal the abacus column count");
    if (!is_s_core_abacus(a) || !has_spacing(a, params.d)) return false;
    auto mp = a.max_position();
    return !mp || *mp < params.bound();
}

/**
 * Delete the last d+1 columns (and their beads) and re-index the remaining
 * positions row-major on s-d-1 columns.  Requires s > d+1 and at least one
 * bead among the removed columns; for a core abacus with spacing d the result
 * is again a core abacus with spacing d.
 */
inline Abacus remove_last_columns(const Abacus& a, Int d) {
    Int s = a.columns();
    if (d < 1) throw std::invalid_argument("remove_last_columns: d must be positive");
    if (s <= d + 1)
        throw std::domain_error("remove_last_columns precondition violated: need s > d + 1");
    Int kept = s - d - 1;
    std::vector<Int> beads;
    bool removed_any = false;
    for (Int p : a.beads()) {
        Int col = p % s;
        if (col < kept)
            beads.push_back((p / s) * kept + col);
        else
            removed_any = true;
    }
    if (!removed_any)
        throw std::domain_error(
            "remove_last_columns precondition violated: last d + 1 columns are all empty");
    return Abacus(kept, std::move(beads));
}

} // namespace coreab
