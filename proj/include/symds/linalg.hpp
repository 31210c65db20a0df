#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "symds/matrix.hpp"
#include "symds/rational.hpp"

namespace symds {

// Incremental exact row reduction. Feed vectors one at a time; the tracker
// keeps a reduced basis of the span seen so far.
class RankTracker {
public:
    // Returns true when v was independent of everything seen so far.
    bool add(std::vector<Rational> v) {
        for (const auto& row : rows_) {
            const Rational& lead = v[static_cast<size_t>(pivot_of(row))];
            if (!lead.is_zero()) {
                const Rational f = lead;  // row is normalized to leading 1
                for (size_t k = 0; k < v.size(); ++k) v[k] -= f * row[k];
            }
        }
        int p = first_nonzero(v);
        if (p < 0) return false;
        const Rational inv = v[static_cast<size_t>(p)];
        for (auto& x : v) x /= inv;
        // Insert keeping rows ordered by pivot column for determinism.
        auto it = rows_.begin();
        while (it != rows_.end() && pivot_of(*it) < p) ++it;
        rows_.insert(it, std::move(v));
        return true;
    }

    int rank() const { return static_cast<int>(rows_.size()); }

private:
    static int first_nonzero(const std::vector<Rational>& v) {
        for (size_t k = 0; k < v.size(); ++k)
            if (!v[k].is_zero()) return static_cast<int>(k);
        return -1;
    }
    static int pivot_of(const std::vector<Rational>& row) {
        int p = first_nonzero(row);
        if (p < 0) throw std::logic_error("RankTracker: zero basis row");
        return p;
    }

    std::vector<std::vector<Rational>> rows_;
};

inline int rational_rank(const std::vector<std::vector<Rational>>& rows) {
    RankTracker t;
    for (const auto& r : rows) t.add(r);
    return t.rank();
}

// Reduced row echelon form; returns the nonzero reduced rows and their pivot
// columns.
struct RowEchelon {
    std::vector<std::vector<Rational>> rows;
    std::vector<int> pivots;
};

inline RowEchelon rref(std::vector<std::vector<Rational>> m) {
    RowEchelon out;
    if (m.empty()) return out;
    const size_t cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < m.size(); ++c) {
        size_t sel = r;
        while (sel < m.size() && m[sel][c].is_zero()) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[r], m[sel]);
        const Rational inv = m[r][c];
        for (auto& x : m[r]) x /= inv;
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            const Rational f = m[i][c];
            for (size_t k = 0; k < cols; ++k) m[i][k] -= f * m[r][k];
        }
        out.pivots.push_back(static_cast<int>(c));
        ++r;
    }
    m.resize(r);
    out.rows = std::move(m);
    return out;
}

// Basis of { x : M x = 0 } for the matrix with the given rows, each of length
// ncols. One basis vector per free column, in ascending free-column order.
inline std::vector<std::vector<Rational>> nullspace_basis(const std::vector<std::vector<Rational>>& rows, int ncols) {
    RowEchelon e = rref(rows);
    std::vector<char> is_pivot(static_cast<size_t>(ncols), 0);
    for (int p : e.pivots) is_pivot[static_cast<size_t>(p)] = 1;
    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < ncols; ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        std::vector<Rational> x(static_cast<size_t>(ncols));
        x[static_cast<size_t>(f)] = 1;
        for (size_t r = 0; r < e.rows.size(); ++r)
            x[static_cast<size_t>(e.pivots[r])] = -e.rows[r][static_cast<size_t>(f)];
        basis.push_back(std::move(x));
    }
    return basis;
}

// Flatten a matrix row-major into a coordinate vector.
inline std::vector<Rational> vectorize(const ExactMatrix& a) {
    std::vector<Rational> v;
    v.reserve(static_cast<size_t>(a.order()) * static_cast<size_t>(a.order()));
    for (int i = 1; i <= a.order(); ++i)
        for (int j = 1; j <= a.order(); ++j) v.push_back(a.at(i, j));
    return v;
}

}  // namespace symds
