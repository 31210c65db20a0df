#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "symds/matrix.hpp"
#include "symds/permutation.hpp"

namespace symds {

// Zero/nonzero pattern of a square matrix, 1-based like everything else.
struct Support {
    int n;
    std::vector<char> cell;

    explicit Support(int order) : n(order), cell(static_cast<size_t>(order) * static_cast<size_t>(order), 0) {
        if (order < 1) throw std::invalid_argument("Support: order must be positive");
    }

    static Support of(const ExactMatrix& a) {
        Support s(a.order());
        for (int i = 1; i <= a.order(); ++i)
            for (int j = 1; j <= a.order(); ++j)
                if (!a.at(i, j).is_zero()) s.set(i, j, true);
        return s;
    }

    void set(int i, int j, bool v) { cell[idx(i, j)] = v ? 1 : 0; }
    bool get(int i, int j) const { return cell[idx(i, j)] != 0; }

    size_t idx(int i, int j) const {
        if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("Support: index");
        return static_cast<size_t>(i - 1) * static_cast<size_t>(n) + static_cast<size_t>(j - 1);
    }
};

struct MatchResult {
    int size = 0;
    std::vector<int> row_to_col;  // [1..n], 0 when unmatched (slot 0 unused)
    std::vector<int> col_to_row;
};

namespace detail {
inline bool kuhn_augment(const Support& s, int row, std::vector<int>& row_to_col, std::vector<int>& col_to_row,
                         std::vector<char>& visited) {
    for (int j = 1; j <= s.n; ++j) {
        if (!s.get(row, j) || visited[static_cast<size_t>(j)]) continue;
        visited[static_cast<size_t>(j)] = 1;
        int occupant = col_to_row[static_cast<size_t>(j)];
        if (occupant == 0 || kuhn_augment(s, occupant, row_to_col, col_to_row, visited)) {
            row_to_col[static_cast<size_t>(row)] = j;
            col_to_row[static_cast<size_t>(j)] = row;
            return true;
        }
    }
    return false;
}
}  // namespace detail

// Deterministic maximum bipartite matching: rows are processed in ascending
// order and augmenting paths prefer smaller column indices.
inline MatchResult max_matching(const Support& s) {
    MatchResult r;
    r.row_to_col.assign(static_cast<size_t>(s.n) + 1, 0);
    r.col_to_row.assign(static_cast<size_t>(s.n) + 1, 0);
    for (int i = 1; i <= s.n; ++i) {
        std::vector<char> visited(static_cast<size_t>(s.n) + 1, 0);
        if (detail::kuhn_augment(s, i, r.row_to_col, r.col_to_row, visited)) ++r.size;
    }
    return r;
}

// Set of rows and columns that together touch every nonzero cell; by the
// matching/covering duality its total size equals the maximum matching size.
struct Cover {
    std::vector<int> rows;
    std::vector<int> cols;
    int size() const { return static_cast<int>(rows.size() + cols.size()); }
};

inline Cover min_cover(const Support& s) {
    MatchResult m = max_matching(s);
    // Alternating reachability from unmatched rows: rows leave along
    // non-matching edges, columns return along matching edges.
    std::vector<char> row_seen(static_cast<size_t>(s.n) + 1, 0), col_seen(static_cast<size_t>(s.n) + 1, 0);
    std::vector<int> stack;
    for (int i = 1; i <= s.n; ++i)
        if (m.row_to_col[static_cast<size_t>(i)] == 0) {
            row_seen[static_cast<size_t>(i)] = 1;
            stack.push_back(i);
        }
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j = 1; j <= s.n; ++j) {
            if (!s.get(i, j) || m.row_to_col[static_cast<size_t>(i)] == j) continue;
            if (!col_seen[static_cast<size_t>(j)]) {
                col_seen[static_cast<size_t>(j)] = 1;
                int back = m.col_to_row[static_cast<size_t>(j)];
                if (back != 0 && !row_seen[static_cast<size_t>(back)]) {
                    row_seen[static_cast<size_t>(back)] = 1;
                    stack.push_back(back);
                }
            }
        }
    }
    Cover c;
    for (int i = 1; i <= s.n; ++i)
        if (!row_seen[static_cast<size_t>(i)]) c.rows.push_back(i);
    for (int j = 1; j <= s.n; ++j)
        if (col_seen[static_cast<size_t>(j)]) c.cols.push_back(j);
    return c;
}

inline bool has_perfect_matching(const Support& s) { return max_matching(s).size == s.n; }

namespace detail {
// Matching size achievable on rows > fixed_rows against columns not yet used.
inline bool remainder_has_perfect_matching(const Support& s, int fixed_rows, const std::vector<char>& col_used) {
    Support t(s.n);
    // Unconstrained dummy rows keep the instance square: row i <= fixed_rows
    // may take any still-free column of its own index class. Simpler: build a
    // reduced check where already-fixed rows are given their chosen column
    // only.  Here we just test the remaining rows against remaining columns.
    int need = s.n - fixed_rows;
    if (need == 0) return true;
    MatchResult r;
    r.row_to_col.assign(static_cast<size_t>(s.n) + 1, 0);
    r.col_to_row.assign(static_cast<size_t>(s.n) + 1, 0);
    Support masked(s.n);
    for (int i = fixed_rows + 1; i <= s.n; ++i)
        for (int j = 1; j <= s.n; ++j)
            if (s.get(i, j) && !col_used[static_cast<size_t>(j)]) masked.set(i, j, true);
    int got = 0;
    for (int i = fixed_rows + 1; i <= s.n; ++i) {
        std::vector<char> visited(static_cast<size_t>(s.n) + 1, 0);
        if (kuhn_augment(masked, i, r.row_to_col, r.col_to_row, visited)) ++got;
    }
    return got == need;
}
}  // namespace detail

// Lexicographically first permutation (in one-line notation) whose cells all
// lie inside the support, or nullopt when no such permutation exists.
inline std::optional<Permutation> lex_first_perfect_matching(const Support& s) {
    if (!has_perfect_matching(s)) return std::nullopt;
    std::vector<int> image(static_cast<size_t>(s.n));
    std::vector<char> col_used(static_cast<size_t>(s.n) + 1, 0);
    for (int i = 1; i <= s.n; ++i) {
        bool placed = false;
        for (int j = 1; j <= s.n && !placed; ++j) {
            if (!s.get(i, j) || col_used[static_cast<size_t>(j)]) continue;
            col_used[static_cast<size_t>(j)] = 1;
            if (detail::remainder_has_perfect_matching(s, i, col_used)) {
                image[static_cast<size_t>(i - 1)] = j;
                placed = true;
            } else {
                col_used[static_cast<size_t>(j)] = 0;
            }
        }
        if (!placed) throw std::logic_error("lex_first_perfect_matching: feasibility check lied");
    }
    return Permutation(std::move(image));
}

}  // namespace symds
