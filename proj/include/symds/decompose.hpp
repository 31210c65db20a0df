#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "symds/linalg.hpp"
#include "symds/matching.hpp"
#include "symds/matrix.hpp"
#include "symds/permutation.hpp"
#include "symds/term_rank.hpp"

namespace symds {

// Convex combination of permutation matrices.
struct Decomposition {
    struct Term {
        Rational coeff;
        Permutation perm;
    };
    std::vector<Term> terms;

    Rational total() const {
        Rational s;
        for (const auto& t : terms) s += t.coeff;
        return s;
    }

    ExactMatrix evaluate() const {
        if (terms.empty()) throw std::logic_error("Decomposition: empty");
        ExactMatrix sum(terms.front().perm.order());
        for (const auto& t : terms) {
            ExactMatrix p = to_matrix(t.perm);
            sum += t.coeff * p;
        }
        return sum;
    }
};

namespace detail {
// Remove affine dependencies among the terms while preserving the represented
// matrix and the coefficient total. Finishes with affinely independent
// permutation matrices, so the term count is at most (affine dimension + 1).
inline void caratheodory_reduce(std::vector<Decomposition::Term>& terms) {
    while (terms.size() > 1) {
        const size_t k = terms.size();
        const int n = terms.front().perm.order();
        const size_t dim = static_cast<size_t>(n) * static_cast<size_t>(n);
        // Equation matrix: one row per coordinate plus a row of ones; columns
        // index the terms. A nonzero kernel vector is an affine dependency.
        std::vector<std::vector<Rational>> rows(dim + 1, std::vector<Rational>(k));
        for (size_t t = 0; t < k; ++t) {
            std::vector<Rational> v = vectorize(to_matrix(terms[t].perm));
            for (size_t r = 0; r < dim; ++r) rows[r][t] = v[r];
            rows[dim][t] = 1;
        }
        auto basis = nullspace_basis(rows, static_cast<int>(k));
        if (basis.empty()) return;
        std::vector<Rational> lambda = basis.front();
        bool has_positive = false;
        for (const auto& x : lambda)
            if (x.sign() > 0) has_positive = true;
        if (!has_positive)
            for (auto& x : lambda) x = -x;
        // Largest step keeping every coefficient nonnegative; at least one
        // coefficient reaches zero exactly.
        bool first = true;
        Rational step;
        for (size_t t = 0; t < k; ++t) {
            if (lambda[t].sign() <= 0) continue;
            Rational cand = terms[t].coeff / lambda[t];
            if (first || cand < step) {
                step = cand;
                first = false;
            }
        }
        std::vector<Decomposition::Term> kept;
        for (size_t t = 0; t < k; ++t) {
            Rational c = terms[t].coeff - step * lambda[t];
            if (c.sign() < 0) throw std::logic_error("caratheodory_reduce: negative coefficient");
            if (c.sign() > 0) kept.push_back({c, terms[t].perm});
        }
        if (kept.size() >= terms.size()) throw std::logic_error("caratheodory_reduce: no progress");
        terms = std::move(kept);
    }
}
}  // namespace detail

// Decomposition of a doubly stochastic matrix as a convex combination of at
// most (n-1)^2 + 1 permutation matrices. Greedy extraction along the
// lexicographically first permutation in the support, followed by exact
// removal of affine dependencies.
inline Decomposition birkhoff(const ExactMatrix& a) {
    if (!is_doubly_stochastic(a)) throw std::invalid_argument("birkhoff: matrix is not doubly stochastic");
    Decomposition d;
    ExactMatrix work = a;
    const ExactMatrix zero(a.order());
    while (work != zero) {
        auto p = lex_first_perfect_matching(Support::of(work));
        if (!p) throw std::logic_error("birkhoff: no permutation in support of a nonzero remainder");
        bool first = true;
        Rational c;
        for (int i = 1; i <= a.order(); ++i) {
            const Rational& v = work.at(i, (*p)(i));
            if (first || v < c) {
                c = v;
                first = false;
            }
        }
        ExactMatrix pm = to_matrix(*p);
        work -= c * pm;
        d.terms.push_back({c, *p});
    }
    detail::caratheodory_reduce(d.terms);
    return d;
}

// ---- Splitting symmetrized permutations ----------------------------------------

// Two distinct involutions q1, q2 with q1 + q2 = p + transpose(p) as matrices.
// Such a pair exists exactly when p has an even cycle of length at least 4 and
// no odd cycle of length at least 3: fixed points and transpositions are kept
// by both halves, and each long even cycle splits into its two alternating
// perfect matchings (starting at the cycle's smallest vertex).
inline std::optional<std::pair<Permutation, Permutation>> symmetric_split(const Permutation& p) {
    const auto cycles = p.cycles();
    bool has_long_even = false;
    for (const auto& cyc : cycles) {
        if (cyc.size() >= 3 && cyc.size() % 2 == 1) return std::nullopt;
        if (cyc.size() >= 4 && cyc.size() % 2 == 0) has_long_even = true;
    }
    if (!has_long_even) return std::nullopt;
    const int n = p.order();
    std::vector<int> q1(static_cast<size_t>(n) + 1, 0), q2(static_cast<size_t>(n) + 1, 0);
    auto pair_up = [](std::vector<int>& q, int a, int b) {
        q[static_cast<size_t>(a)] = b;
        q[static_cast<size_t>(b)] = a;
    };
    for (const auto& cyc : cycles) {
        if (cyc.size() == 1) {
            q1[static_cast<size_t>(cyc[0])] = cyc[0];
            q2[static_cast<size_t>(cyc[0])] = cyc[0];
        } else if (cyc.size() == 2) {
            pair_up(q1, cyc[0], cyc[1]);
            pair_up(q2, cyc[0], cyc[1]);
        } else {
            const size_t len = cyc.size();
            for (size_t k = 0; k < len; k += 2) pair_up(q1, cyc[k], cyc[k + 1]);
            for (size_t k = 1; k < len; k += 2) pair_up(q2, cyc[k], cyc[(k + 1) % len]);
        }
    }
    std::vector<int> l1(static_cast<size_t>(n)), l2(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        l1[static_cast<size_t>(i - 1)] = q1[static_cast<size_t>(i)];
        l2[static_cast<size_t>(i - 1)] = q2[static_cast<size_t>(i)];
    }
    return std::make_pair(Permutation(std::move(l1)), Permutation(std::move(l2)));
}

// Two centrosymmetric permutations q1, q2 with q1 + q2 = p + rotate_pi(p) as
// matrices. Always solvable at even order: on pair indices the combined
// pattern is 2-regular, so it splits into two permutation patterns (doubled
// cells go to both halves, the remaining single cells form disjoint
// alternating cycles), and every pair block expands in the only way its
// contents allow — straight cells expand straight, crossed cells crossed.
inline std::pair<Permutation, Permutation> centro_split(const Permutation& p) {
    const int n = p.order();
    if (n % 2 != 0) throw std::invalid_argument("centro_split: order must be even");
    const int m = n / 2;
    std::vector<std::vector<int>> mult(static_cast<size_t>(m) + 1, std::vector<int>(static_cast<size_t>(m) + 1, 0));
    std::vector<std::vector<char>> crossed(static_cast<size_t>(m) + 1,
                                           std::vector<char>(static_cast<size_t>(m) + 1, 0));
    auto pair_index = [&](int i) { return std::min(i, n + 1 - i); };
    for (int i = 1; i <= n; ++i) {
        const int j = p(i);
        const int pr = pair_index(i), pc = pair_index(j);
        // A cell and its half-turn image sit straight (block diagonal) when
        // row and column land in the same half of the matrix.
        const bool straight = (i <= m) == (j <= m);
        ++mult[static_cast<size_t>(pr)][static_cast<size_t>(pc)];
        crossed[static_cast<size_t>(pr)][static_cast<size_t>(pc)] = straight ? 0 : 1;
    }
    std::vector<int> r1(static_cast<size_t>(m) + 1, 0), r2(static_cast<size_t>(m) + 1, 0);
    std::vector<std::vector<int>> row_singles(static_cast<size_t>(m) + 1), col_singles(static_cast<size_t>(m) + 1);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            if (mult[static_cast<size_t>(i)][static_cast<size_t>(j)] == 2) {
                r1[static_cast<size_t>(i)] = j;
                r2[static_cast<size_t>(i)] = j;
            } else if (mult[static_cast<size_t>(i)][static_cast<size_t>(j)] == 1) {
                row_singles[static_cast<size_t>(i)].push_back(j);
                col_singles[static_cast<size_t>(j)].push_back(i);
            }
        }
    std::vector<std::vector<char>> used(static_cast<size_t>(m) + 1, std::vector<char>(static_cast<size_t>(m) + 1, 0));
    for (int start = 1; start <= m; ++start) {
        if (row_singles[static_cast<size_t>(start)].empty()) continue;
        int j = row_singles[static_cast<size_t>(start)].front();
        if (used[static_cast<size_t>(start)][static_cast<size_t>(j)]) continue;
        // Walk the alternating cycle: each visited pair of cells shares a
        // column; the first goes to r1, the second to r2, then the walk moves
        // along the second cell's row.
        int i = start;
        while (!used[static_cast<size_t>(i)][static_cast<size_t>(j)]) {
            used[static_cast<size_t>(i)][static_cast<size_t>(j)] = 1;
            r1[static_cast<size_t>(i)] = j;
            const auto& cs = col_singles[static_cast<size_t>(j)];
            if (cs.size() != 2) throw std::logic_error("centro_split: unbalanced column");
            int i2 = (cs[0] == i) ? cs[1] : cs[0];
            used[static_cast<size_t>(i2)][static_cast<size_t>(j)] = 1;
            r2[static_cast<size_t>(i2)] = j;
            const auto& rs = row_singles[static_cast<size_t>(i2)];
            if (rs.size() != 2) throw std::logic_error("centro_split: unbalanced row");
            int j2 = (rs[0] == j) ? rs[1] : rs[0];
            i = i2;
            j = j2;
        }
    }
    auto expand = [&](const std::vector<int>& r) {
        std::vector<int> img(static_cast<size_t>(n) + 1, 0);
        for (int i = 1; i <= m; ++i) {
            int j = r[static_cast<size_t>(i)];
            if (j == 0) throw std::logic_error("centro_split: incomplete pair assignment");
            if (crossed[static_cast<size_t>(i)][static_cast<size_t>(j)]) {
                img[static_cast<size_t>(i)] = n + 1 - j;
                img[static_cast<size_t>(n + 1 - i)] = j;
            } else {
                img[static_cast<size_t>(i)] = j;
                img[static_cast<size_t>(n + 1 - i)] = n + 1 - j;
            }
        }
        std::vector<int> line(static_cast<size_t>(n));
        for (int i = 1; i <= n; ++i) line[static_cast<size_t>(i - 1)] = img[static_cast<size_t>(i)];
        return Permutation(std::move(line));
    };
    return {expand(r1), expand(r2)};
}

// ---- Centrosymmetric decompositions ---------------------------------------------

// Decomposition of a centrosymmetric doubly stochastic matrix of even order as
// a convex combination of centrosymmetric permutation matrices.
inline Decomposition centro_birkhoff(const ExactMatrix& a) {
    if (a.order() % 2 != 0) throw std::invalid_argument("centro_birkhoff: order must be even");
    if (!is_doubly_stochastic(a)) throw std::invalid_argument("centro_birkhoff: matrix is not doubly stochastic");
    if (!is_centrosymmetric(a)) throw std::invalid_argument("centro_birkhoff: matrix is not centrosymmetric");
    Decomposition d;
    ExactMatrix work = a;
    const ExactMatrix zero(a.order());
    while (work != zero) {
        auto p = find_centro_permutation(work);
        if (!p) throw std::logic_error("centro_birkhoff: no centrosymmetric permutation in support");
        bool first = true;
        Rational c;
        for (int i = 1; i <= a.order(); ++i) {
            const Rational& v = work.at(i, (*p)(i));
            if (first || v < c) {
                c = v;
                first = false;
            }
        }
        ExactMatrix pm = to_matrix(*p);
        work -= c * pm;
        d.terms.push_back({c, *p});
    }
    detail::caratheodory_reduce(d.terms);
    return d;
}

// Writes a nonnegative integral centrosymmetric matrix with all line sums k as
// a sum of k centrosymmetric permutation matrices (even order).
inline std::vector<Permutation> centro_birkhoff_integral(const ExactMatrix& a, int k) {
    const int n = a.order();
    if (n % 2 != 0) throw std::invalid_argument("centro_birkhoff_integral: order must be even");
    if (!is_integral(a) || !is_nonnegative(a))
        throw std::invalid_argument("centro_birkhoff_integral: matrix must be nonnegative integral");
    if (!is_centrosymmetric(a)) throw std::invalid_argument("centro_birkhoff_integral: matrix is not centrosymmetric");
    for (int i = 1; i <= n; ++i)
        if (a.row_sum(i) != Rational(k) || a.col_sum(i) != Rational(k))
            throw std::invalid_argument("centro_birkhoff_integral: line sums must all equal k");
    std::vector<Permutation> out;
    ExactMatrix work = a;
    for (int step = 0; step < k; ++step) {
        auto p = find_centro_permutation(work);
        if (!p) throw std::logic_error("centro_birkhoff_integral: no centrosymmetric permutation in support");
        work -= to_matrix(*p);
        if (!is_nonnegative(work)) throw std::logic_error("centro_birkhoff_integral: went negative");
        out.push_back(*p);
    }
    if (work != ExactMatrix(n)) throw std::logic_error("centro_birkhoff_integral: nonzero remainder");
    return out;
}

// ---- Symmetrizations --------------------------------------------------------------

// Average of the permutation matrix with its images under the operators of the
// class: the canonical class member produced from an arbitrary permutation.
inline ExactMatrix symmetrization(const Permutation& p, SymmetryClass cls) {
    const ExactMatrix pm = to_matrix(p);
    switch (cls) {
        case SymmetryClass::DS: return pm;
        case SymmetryClass::T: return Rational(1, 2) * (pm + transpose(pm));
        case SymmetryClass::H: return Rational(1, 2) * (pm + hankel_transpose(pm));
        case SymmetryClass::PI: return Rational(1, 2) * (pm + rotate_pi(pm));
        case SymmetryClass::TH:
            return Rational(1, 4) * (pm + transpose(pm) + hankel_transpose(pm) + rotate_pi(pm));
    }
    throw std::logic_error("symmetrization: unreachable");
}

inline ExactMatrix quarter_form(const Permutation& p) { return symmetrization(p, SymmetryClass::TH); }

}  // namespace symds
