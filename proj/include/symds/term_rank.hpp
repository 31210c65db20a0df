#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "symds/matching.hpp"
#include "symds/matrix.hpp"
#include "symds/permutation.hpp"

namespace symds {

struct TermRankResult {
    int rank = 0;
    // A maximum set of nonzero cells, no two sharing a row or column,
    // sorted by row then column.
    std::vector<std::pair<int, int>> cells;
};

struct LineCover {
    std::vector<int> rows;
    std::vector<int> cols;
    int size() const { return static_cast<int>(rows.size() + cols.size()); }
};

// ---- Plain term rank ----------------------------------------------------------

inline TermRankResult term_rank(const ExactMatrix& a) {
    Support s = Support::of(a);
    MatchResult m = max_matching(s);
    TermRankResult r;
    r.rank = m.size;
    for (int i = 1; i <= s.n; ++i)
        if (m.row_to_col[static_cast<size_t>(i)] != 0) r.cells.emplace_back(i, m.row_to_col[static_cast<size_t>(i)]);
    return r;
}

inline LineCover min_line_cover(const ExactMatrix& a) {
    Cover c = min_cover(Support::of(a));
    return LineCover{c.rows, c.cols};
}

// Fold an even-order centrosymmetric 0/1 matrix of order n = 2m onto the m x m
// matrix B with B(i, j) = A(i, j) OR A(i, n+1-j). Pair-invariant structure of A
// (matchings fixed by the half-turn, half-turn-invariant line covers) maps to
// plain structure of B at half the size.
inline ExactMatrix centro_reduce(const ExactMatrix& a) {
    const int n = a.order();
    if (n % 2 != 0) throw std::invalid_argument("centro_reduce: even order required");
    if (!is_centrosymmetric(a)) throw std::invalid_argument("centro_reduce: matrix is not centrosymmetric");
    if (!is_zero_one(a)) throw std::invalid_argument("centro_reduce: entries must be 0 or 1");
    const int m = n / 2;
    ExactMatrix b(m);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            if (!a.at(i, j).is_zero() || !a.at(i, n + 1 - j).is_zero()) b.at(i, j) = 1;
    return b;
}

// ---- Half-turn-invariant term rank ---------------------------------------------

namespace detail {
// Cells that survive in both A and its half-turn image; only these can join a
// half-turn-invariant independent set.
inline Support pi_mask(const ExactMatrix& a) {
    const int n = a.order();
    Support s(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (!a.at(i, j).is_zero() && !a.at(n + 1 - i, n + 1 - j).is_zero()) s.set(i, j, true);
    return s;
}

// Fold an even-order support onto pair indices: folded (i, j), i,j in 1..m,
// records whether pair-rows {i, n+1-i} meet pair-columns {j, n+1-j}.
inline Support fold_pairs(const Support& s) {
    if (s.n % 2 != 0) throw std::logic_error("fold_pairs: even order required");
    const int m = s.n / 2;
    Support b(m);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            if (s.get(i, j) || s.get(i, s.n + 1 - j) || s.get(s.n + 1 - i, j) || s.get(s.n + 1 - i, s.n + 1 - j))
                b.set(i, j, true);
    return b;
}

inline Support delete_center(const Support& s) {
    if (s.n % 2 == 0) throw std::logic_error("delete_center: odd order required");
    const int n = s.n, c = (n + 1) / 2;
    Support t(n - 1);
    auto old_of = [&](int k) { return k < c ? k : k + 1; };
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n - 1; ++j)
            if (s.get(old_of(i), old_of(j))) t.set(i, j, true);
    return t;
}

// Lift a matching on folded pair indices back to half-turn-paired cells of the
// original matrix. Straight pairs {(i,j),(n+1-i,n+1-j)} are preferred when the
// masked support allows them; otherwise the crossed pair is used.
inline void lift_pairs(const Support& mask, int row_pair, int col_pair, std::vector<std::pair<int, int>>& out) {
    const int n = mask.n;
    if (mask.get(row_pair, col_pair)) {
        out.emplace_back(row_pair, col_pair);
        out.emplace_back(n + 1 - row_pair, n + 1 - col_pair);
    } else if (mask.get(row_pair, n + 1 - col_pair)) {
        out.emplace_back(row_pair, n + 1 - col_pair);
        out.emplace_back(n + 1 - row_pair, col_pair);
    } else {
        throw std::logic_error("lift_pairs: folded cell has no masked preimage");
    }
}
}  // namespace detail

// Maximum number of nonzero cells, no two on a common line, whose cell set is
// invariant under the half-turn. Defined for any square matrix; cells must be
// nonzero together with their half-turn partners.
inline TermRankResult centro_term_rank(const ExactMatrix& a) {
    const int n = a.order();
    Support mask = detail::pi_mask(a);
    TermRankResult r;
    if (n % 2 == 0) {
        Support folded = detail::fold_pairs(mask);
        MatchResult m = max_matching(folded);
        r.rank = 2 * m.size;
        for (int i = 1; i <= folded.n; ++i)
            if (m.row_to_col[static_cast<size_t>(i)] != 0)
                detail::lift_pairs(mask, i, m.row_to_col[static_cast<size_t>(i)], r.cells);
    } else {
        const int c = (n + 1) / 2;
        const bool center = mask.get(c, c);
        if (n == 1) {
            if (center) {
                r.rank = 1;
                r.cells.emplace_back(1, 1);
            }
            return r;
        }
        Support inner = detail::delete_center(mask);
        Support folded = detail::fold_pairs(inner);
        MatchResult m = max_matching(folded);
        r.rank = 2 * m.size + (center ? 1 : 0);
        std::vector<std::pair<int, int>> inner_cells;
        for (int i = 1; i <= folded.n; ++i)
            if (m.row_to_col[static_cast<size_t>(i)] != 0)
                detail::lift_pairs(inner, i, m.row_to_col[static_cast<size_t>(i)], inner_cells);
        for (auto [i, j] : inner_cells) r.cells.emplace_back(i < c ? i : i + 1, j < c ? j : j + 1);
        if (center) r.cells.emplace_back(c, c);
    }
    std::sort(r.cells.begin(), r.cells.end());
    return r;
}

// Minimum number of lines covering every nonzero cell, the set of lines being
// invariant under the half-turn (row i pairs with row n+1-i, likewise for
// columns; at odd order the central row and column are self-paired).
inline LineCover centro_min_line_cover(const ExactMatrix& a) {
    const int n = a.order();
    Support s = Support::of(a);
    LineCover best;
    if (n % 2 == 0) {
        Cover c = min_cover(detail::fold_pairs(s));
        for (int i : c.rows) {
            best.rows.push_back(i);
            best.rows.push_back(n + 1 - i);
        }
        for (int j : c.cols) {
            best.cols.push_back(j);
            best.cols.push_back(n + 1 - j);
        }
    } else {
        const int c = (n + 1) / 2;
        const int m = n / 2;
        // Choice bits: m row pairs, the central row, m column pairs, the
        // central column. Exhaustive, smallest total line count wins; ties go
        // to the earliest bitmask.
        const int bits = 2 * m + 2;
        int best_size = -1;
        unsigned best_mask = 0;
        for (unsigned mask = 0; mask < (1u << bits); ++mask) {
            int size = 0;
            for (int b = 0; b < bits; ++b)
                if (mask & (1u << b)) size += (b == m || b == 2 * m + 1) ? 1 : 2;
            if (best_size >= 0 && size >= best_size) continue;
            auto row_covered = [&](int i) {
                if (i == c) return (mask & (1u << m)) != 0;
                int p = std::min(i, n + 1 - i);
                return (mask & (1u << (p - 1))) != 0;
            };
            auto col_covered = [&](int j) {
                if (j == c) return (mask & (1u << (2 * m + 1))) != 0;
                int p = std::min(j, n + 1 - j);
                return (mask & (1u << (m + 1 + p - 1))) != 0;
            };
            bool ok = true;
            for (int i = 1; i <= n && ok; ++i)
                for (int j = 1; j <= n && ok; ++j)
                    if (s.get(i, j) && !row_covered(i) && !col_covered(j)) ok = false;
            if (ok) {
                best_size = size;
                best_mask = mask;
            }
        }
        if (best_size < 0) throw std::logic_error("centro_min_line_cover: no cover found");
        for (int p = 1; p <= m; ++p)
            if (best_mask & (1u << (p - 1))) {
                best.rows.push_back(p);
                best.rows.push_back(n + 1 - p);
            }
        if (best_mask & (1u << m)) best.rows.push_back(c);
        for (int p = 1; p <= m; ++p)
            if (best_mask & (1u << (m + 1 + p - 1))) {
                best.cols.push_back(p);
                best.cols.push_back(n + 1 - p);
            }
        if (best_mask & (1u << (2 * m + 1))) best.cols.push_back(c);
    }
    std::sort(best.rows.begin(), best.rows.end());
    std::sort(best.cols.begin(), best.cols.end());
    return best;
}

// Centrosymmetric permutation whose cells all lie in the support of `a`, or
// nullopt. Deterministic: the folded matching is lexicographically first and
// straight pairs are preferred over crossed ones.
inline std::optional<Permutation> find_centro_permutation(const ExactMatrix& a) {
    const int n = a.order();
    Support mask = detail::pi_mask(a);
    std::vector<int> img(static_cast<size_t>(n) + 1, 0);
    if (n % 2 == 1) {
        const int c = (n + 1) / 2;
        if (!mask.get(c, c)) return std::nullopt;
        img[static_cast<size_t>(c)] = c;
        if (n == 1) return Permutation({1});
    }
    Support folded = (n % 2 == 0) ? detail::fold_pairs(mask) : detail::fold_pairs(detail::delete_center(mask));
    auto match = lex_first_perfect_matching(folded);
    if (!match) return std::nullopt;
    const int c = (n + 1) / 2;  // unused for even order beyond index shifting
    auto to_orig = [&](int k) {
        if (n % 2 == 0) return k;
        return k < c ? k : k + 1;
    };
    const Support& lift_mask = mask;
    for (int i = 1; i <= folded.n; ++i) {
        int j = (*match)(i);
        int oi = to_orig(i), oj = to_orig(j);
        int oi2 = n + 1 - oi, oj2 = n + 1 - oj;
        if (lift_mask.get(oi, oj)) {
            img[static_cast<size_t>(oi)] = oj;
            img[static_cast<size_t>(oi2)] = oj2;
        } else if (lift_mask.get(oi, oj2)) {
            img[static_cast<size_t>(oi)] = oj2;
            img[static_cast<size_t>(oi2)] = oj;
        } else {
            throw std::logic_error("find_centro_permutation: folded cell has no masked preimage");
        }
    }
    std::vector<int> line(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) line[static_cast<size_t>(i - 1)] = img[static_cast<size_t>(i)];
    return Permutation(std::move(line));
}

}  // namespace symds
