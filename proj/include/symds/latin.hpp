#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "symds/decompose.hpp"
#include "symds/matrix.hpp"
#include "symds/permutation.hpp"

namespace symds {

// A Latin square with 1-based indexing and symbols 1..order.
struct LatinSquare {
    int order = 0;
    std::vector<int> cells;  // row-major

    LatinSquare() = default;
    explicit LatinSquare(int n) : order(n), cells(static_cast<size_t>(n) * static_cast<size_t>(n), 0) {
        if (n < 1) throw std::invalid_argument("LatinSquare: order must be positive");
    }

    int& at(int i, int j) {
        check(i, j);
        return cells[static_cast<size_t>(i - 1) * static_cast<size_t>(order) + static_cast<size_t>(j - 1)];
    }
    int at(int i, int j) const {
        check(i, j);
        return cells[static_cast<size_t>(i - 1) * static_cast<size_t>(order) + static_cast<size_t>(j - 1)];
    }

    bool operator==(const LatinSquare& o) const { return order == o.order && cells == o.cells; }
    bool operator!=(const LatinSquare& o) const { return !(*this == o); }

private:
    void check(int i, int j) const {
        if (i < 1 || i > order || j < 1 || j > order) throw std::out_of_range("LatinSquare: index out of range");
    }
};

inline std::string to_string(const LatinSquare& t) {
    std::string out;
    for (int i = 1; i <= t.order; ++i) {
        for (int j = 1; j <= t.order; ++j) {
            if (j > 1) out += ' ';
            out += std::to_string(t.at(i, j));
        }
        out += '\n';
    }
    return out;
}

// True when every row and every column contains each of 1..order exactly
// once. With require_centro also demands invariance under the half turn:
// T(n+1-i, n+1-j) == T(i, j).
inline bool validate_latin(const LatinSquare& t, bool require_centro = false) {
    const int n = t.order;
    if (n < 1) return false;
    for (int i = 1; i <= n; ++i) {
        std::vector<char> row_seen(static_cast<size_t>(n) + 1, 0), col_seen(static_cast<size_t>(n) + 1, 0);
        for (int j = 1; j <= n; ++j) {
            const int rv = t.at(i, j), cv = t.at(j, i);
            if (rv < 1 || rv > n || row_seen[static_cast<size_t>(rv)]) return false;
            if (cv < 1 || cv > n || col_seen[static_cast<size_t>(cv)]) return false;
            row_seen[static_cast<size_t>(rv)] = 1;
            col_seen[static_cast<size_t>(cv)] = 1;
        }
    }
    if (require_centro)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (t.at(n + 1 - i, n + 1 - j) != t.at(i, j)) return false;
    return true;
}

// Doubles a Latin square of order m into a half-turn invariant Latin square
// of order 2m:
//
//     [ U      U+m     ]
//     [ (U+m)^ U^      ]
//
// where X^ is X rotated by a half turn and U+m adds m to every symbol.
inline LatinSquare latin_block(const LatinSquare& u) {
    if (!validate_latin(u)) throw std::invalid_argument("latin_block: input is not a Latin square");
    const int m = u.order;
    LatinSquare t(2 * m);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            t.at(i, j) = u.at(i, j);
            t.at(i, m + j) = u.at(i, j) + m;
            t.at(m + i, j) = u.at(m + 1 - i, m + 1 - j) + m;
            t.at(m + i, m + j) = u.at(m + 1 - i, m + 1 - j);
        }
    return t;
}

// Builds a half-turn invariant Latin square of even order n by decomposing
// the all-ones matrix into n centrosymmetric permutation matrices and
// labelling each cell with the index of the permutation that covers it.
inline LatinSquare latin_from_decomposition(int n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("latin_from_decomposition: order must be even and positive");
    const ExactMatrix ones = ExactMatrix::constant(n, Rational(1));
    const std::vector<Permutation> terms = centro_birkhoff_integral(ones, n);
    LatinSquare t(n);
    for (size_t k = 0; k < terms.size(); ++k)
        for (int i = 1; i <= n; ++i) t.at(i, terms[k](i)) = static_cast<int>(k) + 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (t.at(i, j) == 0) throw std::logic_error("latin_from_decomposition: uncovered cell");
    if (!validate_latin(t, true)) throw std::logic_error("latin_from_decomposition: result is not half-turn Latin");
    return t;
}

}  // namespace symds
