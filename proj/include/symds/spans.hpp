#pragma once

#include <stdexcept>
#include <vector>

#include "symds/linalg.hpp"
#include "symds/matrix.hpp"
#include "symds/perm_classes.hpp"
#include "symds/permutation.hpp"

namespace symds {

// Dimension of the linear span of the given matrices.
inline int linear_rank(const std::vector<ExactMatrix>& ms) {
    RankTracker t;
    for (const auto& m : ms) t.add(vectorize(m));
    return t.rank();
}

// Dimension of the affine hull of the given matrices.
inline int affine_rank(const std::vector<ExactMatrix>& ms) {
    if (ms.empty()) throw std::invalid_argument("affine_rank: empty family");
    RankTracker t;
    for (size_t k = 1; k < ms.size(); ++k) {
        ExactMatrix d = ms[k];
        d -= ms[0];
        t.add(vectorize(d));
    }
    return t.rank();
}

// Dimension of the polytope of doubly stochastic matrices with the class
// symmetry.
inline long long polytope_dimension(int n, SymmetryClass cls) {
    if (n < 1) throw std::invalid_argument("polytope_dimension: order must be positive");
    const long long nn = n;
    switch (cls) {
        case SymmetryClass::DS: return (nn - 1) * (nn - 1);
        case SymmetryClass::T:
        case SymmetryClass::H: return nn * (nn - 1) / 2;
        case SymmetryClass::PI:
            return n % 2 == 0 ? ((nn - 1) * (nn - 1) + 1) / 2 : (nn - 1) * (nn - 1) / 2;
        case SymmetryClass::TH: return n % 2 == 0 ? nn * nn / 4 : (nn * nn - 1) / 4;
    }
    throw std::logic_error("polytope_dimension: unreachable");
}

// Dimension of the linear span of the permutation matrices in the class.
inline long long span_dimension(int n, SymmetryClass cls) {
    if (n < 1) throw std::invalid_argument("span_dimension: order must be positive");
    const long long nn = n;
    switch (cls) {
        case SymmetryClass::DS: return (nn - 1) * (nn - 1) + 1;
        case SymmetryClass::T:
        case SymmetryClass::H: return nn * (nn - 1) / 2 + 1;
        case SymmetryClass::PI: {
            // Even order 2m and odd order 2m+1 share the value 2m^2 - 2m + 2.
            const long long m = nn / 2;
            return 2 * m * m - 2 * m + 2;
        }
        case SymmetryClass::TH: {
            const long long m = nn / 2;
            return m * m + 1;
        }
    }
    throw std::logic_error("span_dimension: unreachable");
}

namespace detail {
inline void verify_span_basis(const std::vector<Permutation>& ps, long long expected, const char* what) {
    std::vector<ExactMatrix> ms;
    ms.reserve(ps.size());
    for (const auto& p : ps) ms.push_back(to_matrix(p));
    if (static_cast<long long>(ps.size()) != expected || linear_rank(ms) != expected)
        throw std::logic_error(std::string(what) + ": constructed family is not a basis");
}
}  // namespace detail

// A linearly independent family of (m-1)^2 + 1 permutations of order m whose
// matrices span the same space as all permutation matrices: the identity, the
// transpositions (i m), and the 3-cycles i -> j -> m -> i for i != j < m.
inline std::vector<Permutation> basis_perm_space(int m) {
    if (m < 1) throw std::invalid_argument("basis_perm_space: order must be positive");
    std::vector<Permutation> out;
    out.push_back(Permutation::identity(m));
    for (int i = 1; i < m; ++i) {
        std::vector<int> line(static_cast<size_t>(m));
        for (int k = 1; k <= m; ++k) line[static_cast<size_t>(k - 1)] = k;
        std::swap(line[static_cast<size_t>(i - 1)], line[static_cast<size_t>(m - 1)]);
        out.emplace_back(std::move(line));
    }
    for (int i = 1; i < m; ++i)
        for (int j = 1; j < m; ++j) {
            if (i == j) continue;
            std::vector<int> line(static_cast<size_t>(m));
            for (int k = 1; k <= m; ++k) line[static_cast<size_t>(k - 1)] = k;
            line[static_cast<size_t>(i - 1)] = j;
            line[static_cast<size_t>(j - 1)] = m;
            line[static_cast<size_t>(m - 1)] = i;
            out.emplace_back(std::move(line));
        }
    detail::verify_span_basis(out, static_cast<long long>(m - 1) * (m - 1) + 1, "basis_perm_space");
    return out;
}

// A basis (as a spanning independent family) of the span of the
// centrosymmetric permutation matrices of even order n = 2m: the block
// embeddings of a permutation-space basis of order m, plus the m^2
// centrosymmetric permutations that send row i into the opposite half at
// column m+j and fill the remaining top rows in increasing order.
inline std::vector<Permutation> basis_centro(int n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("basis_centro: order must be even and positive");
    const int m = n / 2;
    std::vector<Permutation> out;
    for (const auto& q : basis_perm_space(m)) {
        std::vector<int> line(static_cast<size_t>(n));
        for (int i = 1; i <= m; ++i) {
            line[static_cast<size_t>(i - 1)] = q(i);
            line[static_cast<size_t>(n - i)] = n + 1 - q(i);  // position n+1-i
        }
        out.emplace_back(std::move(line));
    }
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            std::vector<int> img(static_cast<size_t>(n) + 1, 0);
            img[static_cast<size_t>(i)] = m + j;
            // Remaining top rows take the remaining left-half columns
            // (everything except column m+1-j) in increasing order.
            std::vector<int> rows, cols;
            for (int r = 1; r <= m; ++r)
                if (r != i) rows.push_back(r);
            for (int c = 1; c <= m; ++c)
                if (c != m + 1 - j) cols.push_back(c);
            for (size_t k = 0; k < rows.size(); ++k) img[static_cast<size_t>(rows[k])] = cols[k];
            for (int r = 1; r <= m; ++r) img[static_cast<size_t>(n + 1 - r)] = n + 1 - img[static_cast<size_t>(r)];
            std::vector<int> line(static_cast<size_t>(n));
            for (int r = 1; r <= n; ++r) line[static_cast<size_t>(r - 1)] = img[static_cast<size_t>(r)];
            out.emplace_back(std::move(line));
        }
    detail::verify_span_basis(out, span_dimension(n, SymmetryClass::PI), "basis_centro");
    return out;
}

// A basis of the span of the doubly symmetric permutation matrices. For even
// order 2m: block transpositions acting inside the halves, crossed
// transpositions acting between the halves, and the m+1 step involutions
// interpolating between the identity and the antidiagonal. For odd order the
// even-order family of order n-1 is extended by the fixed central point.
inline std::vector<Permutation> basis_th(int n) {
    if (n < 1) throw std::invalid_argument("basis_th: order must be positive");
    if (n == 1) return {Permutation::identity(1)};
    if (n % 2 == 1) {
        const int c = (n + 1) / 2;
        std::vector<Permutation> inner = basis_th(n - 1);
        std::vector<Permutation> out;
        for (const auto& q : inner) {
            std::vector<int> line(static_cast<size_t>(n));
            auto lift = [&](int k) { return k < c ? k : k + 1; };
            for (int r = 1; r <= n - 1; ++r) line[static_cast<size_t>(lift(r) - 1)] = lift(q(r));
            line[static_cast<size_t>(c - 1)] = c;
            out.emplace_back(std::move(line));
        }
        detail::verify_span_basis(out, span_dimension(n, SymmetryClass::TH), "basis_th");
        return out;
    }
    const int m = n / 2;
    std::vector<Permutation> out;
    auto identity_line = [&] {
        std::vector<int> line(static_cast<size_t>(n));
        for (int k = 1; k <= n; ++k) line[static_cast<size_t>(k - 1)] = k;
        return line;
    };
    // Transpositions inside the top half, mirrored in the bottom half.
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
            std::vector<int> line = identity_line();
            std::swap(line[static_cast<size_t>(i - 1)], line[static_cast<size_t>(j - 1)]);
            std::swap(line[static_cast<size_t>(n - i)], line[static_cast<size_t>(n - j)]);
            out.emplace_back(std::move(line));
        }
    // Crossed transpositions: top rows map across the antidiagonal.
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
            // tau = transposition (i j) on 1..m; row r <= m goes to n+1-tau(r),
            // row r > m to tau(n+1-r).
            std::vector<int> line(static_cast<size_t>(n));
            auto tau = [&](int r) { return r == i ? j : (r == j ? i : r); };
            for (int r = 1; r <= m; ++r) line[static_cast<size_t>(r - 1)] = n + 1 - tau(r);
            for (int r = m + 1; r <= n; ++r) line[static_cast<size_t>(r - 1)] = tau(n + 1 - r);
            out.emplace_back(std::move(line));
        }
    // Step involutions: fix 1..i, reflect i+1..m across the antidiagonal.
    for (int i = 0; i <= m; ++i) {
        std::vector<int> line(static_cast<size_t>(n));
        std::vector<int> img(static_cast<size_t>(n) + 1, 0);
        for (int r = 1; r <= i; ++r) {
            img[static_cast<size_t>(r)] = r;
            img[static_cast<size_t>(n + 1 - r)] = n + 1 - r;
        }
        for (int r = i + 1; r <= m; ++r) {
            img[static_cast<size_t>(r)] = n + 1 - r;
            img[static_cast<size_t>(n + 1 - r)] = r;
        }
        for (int r = 1; r <= n; ++r) line[static_cast<size_t>(r - 1)] = img[static_cast<size_t>(r)];
        out.emplace_back(std::move(line));
    }
    detail::verify_span_basis(out, span_dimension(n, SymmetryClass::TH), "basis_th");
    return out;
}

}  // namespace symds
