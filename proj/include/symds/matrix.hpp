#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "symds/permutation.hpp"
#include "symds/rational.hpp"

namespace symds {

// Square matrix over exact rationals, 1-based accessors.
class ExactMatrix {
public:
    explicit ExactMatrix(int n) : n_(n), e_(static_cast<size_t>(n) * static_cast<size_t>(n)) {
        if (n < 1) throw std::invalid_argument("ExactMatrix: order must be positive");
    }

    static ExactMatrix identity(int n) {
        ExactMatrix m(n);
        for (int i = 1; i <= n; ++i) m.at(i, i) = 1;
        return m;
    }

    // 1s on the antidiagonal (the "Hankel identity").
    static ExactMatrix reversal(int n) {
        ExactMatrix m(n);
        for (int i = 1; i <= n; ++i) m.at(i, n + 1 - i) = 1;
        return m;
    }

    static ExactMatrix constant(int n, const Rational& v) {
        ExactMatrix m(n);
        for (auto& x : m.e_) x = v;
        return m;
    }

    static ExactMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
        const int n = static_cast<int>(rows.size());
        ExactMatrix m(n);
        for (int i = 1; i <= n; ++i) {
            if (static_cast<int>(rows[static_cast<size_t>(i - 1)].size()) != n)
                throw std::invalid_argument("ExactMatrix: ragged rows");
            for (int j = 1; j <= n; ++j) m.at(i, j) = rows[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
        }
        return m;
    }

    // Convenience for integer literals scaled by a common denominator.
    static ExactMatrix from_ints(const std::vector<std::vector<long>>& rows, long denominator = 1) {
        const int n = static_cast<int>(rows.size());
        ExactMatrix m(n);
        for (int i = 1; i <= n; ++i) {
            if (static_cast<int>(rows[static_cast<size_t>(i - 1)].size()) != n)
                throw std::invalid_argument("ExactMatrix: ragged rows");
            for (int j = 1; j <= n; ++j)
                m.at(i, j) = Rational(rows[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)], denominator);
        }
        return m;
    }

    int order() const { return n_; }

    Rational& at(int i, int j) {
        check(i, j);
        return e_[static_cast<size_t>(i - 1) * static_cast<size_t>(n_) + static_cast<size_t>(j - 1)];
    }
    const Rational& at(int i, int j) const {
        check(i, j);
        return e_[static_cast<size_t>(i - 1) * static_cast<size_t>(n_) + static_cast<size_t>(j - 1)];
    }

    Rational row_sum(int i) const {
        Rational s;
        for (int j = 1; j <= n_; ++j) s += at(i, j);
        return s;
    }
    Rational col_sum(int j) const {
        Rational s;
        for (int i = 1; i <= n_; ++i) s += at(i, j);
        return s;
    }

    ExactMatrix& operator+=(const ExactMatrix& o) {
        same_order(o);
        for (size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
        return *this;
    }
    ExactMatrix& operator-=(const ExactMatrix& o) {
        same_order(o);
        for (size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
        return *this;
    }
    ExactMatrix& operator*=(const Rational& c) {
        for (auto& x : e_) x *= c;
        return *this;
    }

    friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
    friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
    friend ExactMatrix operator*(const Rational& c, ExactMatrix a) { return a *= c; }

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
        a.same_order(b);
        ExactMatrix r(a.n_);
        for (int i = 1; i <= a.n_; ++i)
            for (int k = 1; k <= a.n_; ++k) {
                const Rational& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (int j = 1; j <= a.n_; ++j) r.at(i, j) += aik * b.at(k, j);
            }
        return r;
    }

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) { return a.n_ == b.n_ && a.e_ == b.e_; }
    friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

private:
    void check(int i, int j) const {
        if (i < 1 || i > n_ || j < 1 || j > n_) throw std::out_of_range("ExactMatrix: index");
    }
    void same_order(const ExactMatrix& o) const {
        if (o.n_ != n_) throw std::invalid_argument("ExactMatrix: order mismatch");
    }

    int n_;
    std::vector<Rational> e_;
};

// ---- The three symmetry operators -----------------------------------------

inline ExactMatrix transpose(const ExactMatrix& a) {
    const int n = a.order();
    ExactMatrix r(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) r.at(i, j) = a.at(j, i);
    return r;
}

// Reflection across the antidiagonal: result(i,j) = a(n+1-j, n+1-i).
inline ExactMatrix hankel_transpose(const ExactMatrix& a) {
    const int n = a.order();
    ExactMatrix r(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) r.at(i, j) = a.at(n + 1 - j, n + 1 - i);
    return r;
}

// Half-turn rotation: result(i,j) = a(n+1-i, n+1-j).
inline ExactMatrix rotate_pi(const ExactMatrix& a) {
    const int n = a.order();
    ExactMatrix r(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) r.at(i, j) = a.at(n + 1 - i, n + 1 - j);
    return r;
}

// ---- Predicates -------------------------------------------------------------

inline bool is_symmetric(const ExactMatrix& a) {
    const int n = a.order();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (a.at(i, j) != a.at(j, i)) return false;
    return true;
}

inline bool is_hankel_symmetric(const ExactMatrix& a) {
    const int n = a.order();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (a.at(i, j) != a.at(n + 1 - j, n + 1 - i)) return false;
    return true;
}

inline bool is_centrosymmetric(const ExactMatrix& a) {
    const int n = a.order();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (a.at(i, j) != a.at(n + 1 - i, n + 1 - j)) return false;
    return true;
}

inline bool is_nonnegative(const ExactMatrix& a) {
    const int n = a.order();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (a.at(i, j).sign() < 0) return false;
    return true;
}

inline bool is_doubly_stochastic(const ExactMatrix& a) {
    if (!is_nonnegative(a)) return false;
    const int n = a.order();
    for (int i = 1; i <= n; ++i)
        if (a.row_sum(i) != Rational(1) || a.col_sum(i) != Rational(1)) return false;
    return true;
}

inline bool is_zero_one(const ExactMatrix& a) {
    const int n = a.order();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const Rational& v = a.at(i, j);
            if (v != Rational(0) && v != Rational(1)) return false;
        }
    return true;
}

inline bool is_integral(const ExactMatrix& a) {
    const int n = a.order();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (!a.at(i, j).is_integer()) return false;
    return true;
}

inline bool is_permutation_matrix(const ExactMatrix& a) {
    if (!is_zero_one(a)) return false;
    const int n = a.order();
    for (int i = 1; i <= n; ++i)
        if (a.row_sum(i) != Rational(1) || a.col_sum(i) != Rational(1)) return false;
    return true;
}

// ---- Symmetry classes --------------------------------------------------------

// DS: doubly stochastic with no symmetry constraint; T: symmetric;
// H: Hankel-symmetric; PI: centrosymmetric; TH: symmetric and
// Hankel-symmetric together.
enum class SymmetryClass { DS, T, H, PI, TH };

inline std::string class_name(SymmetryClass c) {
    switch (c) {
        case SymmetryClass::DS: return "all";
        case SymmetryClass::T: return "t";
        case SymmetryClass::H: return "h";
        case SymmetryClass::PI: return "pi";
        case SymmetryClass::TH: return "th";
    }
    throw std::logic_error("class_name: unreachable");
}

inline SymmetryClass parse_class(const std::string& s) {
    if (s == "all" || s == "ds") return SymmetryClass::DS;
    if (s == "t") return SymmetryClass::T;
    if (s == "h") return SymmetryClass::H;
    if (s == "pi") return SymmetryClass::PI;
    if (s == "th") return SymmetryClass::TH;
    throw std::invalid_argument("unknown symmetry class '" + s + "' (expected all|t|h|pi|th)");
}

// True when `a` carries the symmetry of `c` (and is doubly stochastic for DS
// membership checks elsewhere; this checks the symmetry only).
inline bool has_symmetry(const ExactMatrix& a, SymmetryClass c) {
    switch (c) {
        case SymmetryClass::DS: return true;
        case SymmetryClass::T: return is_symmetric(a);
        case SymmetryClass::H: return is_hankel_symmetric(a);
        case SymmetryClass::PI: return is_centrosymmetric(a);
        case SymmetryClass::TH: return is_symmetric(a) && is_hankel_symmetric(a);
    }
    throw std::logic_error("has_symmetry: unreachable");
}

// Symmetry tags satisfied by the matrix: each of T, H, PI present iff the
// matrix carries it, plus DS iff doubly stochastic. Any two of {T, H, PI}
// force the third; the combined class TH is not a separate tag here.
inline std::set<SymmetryClass> classify(const ExactMatrix& a) {
    std::set<SymmetryClass> tags;
    if (is_doubly_stochastic(a)) tags.insert(SymmetryClass::DS);
    if (is_symmetric(a)) tags.insert(SymmetryClass::T);
    if (is_hankel_symmetric(a)) tags.insert(SymmetryClass::H);
    if (is_centrosymmetric(a)) tags.insert(SymmetryClass::PI);
    return tags;
}

// ---- Submatrices -------------------------------------------------------------

namespace detail {
inline void check_index_set(const std::vector<int>& s, int n, const char* what) {
    int prev = 0;
    for (int v : s) {
        if (v < 1 || v > n || v <= prev)
            throw std::invalid_argument(std::string(what) + ": indices must be strictly increasing within 1..n");
        prev = v;
    }
}
}  // namespace detail

// Rows K by columns L, both strictly increasing 1-based index sets.
// Result is square only when |K| == |L|; this library only needs square
// selections so that is enforced.
inline ExactMatrix submatrix(const ExactMatrix& a, const std::vector<int>& K, const std::vector<int>& L) {
    detail::check_index_set(K, a.order(), "submatrix rows");
    detail::check_index_set(L, a.order(), "submatrix cols");
    if (K.size() != L.size() || K.empty()) throw std::invalid_argument("submatrix: need equal nonempty index sets");
    ExactMatrix r(static_cast<int>(K.size()));
    for (size_t i = 0; i < K.size(); ++i)
        for (size_t j = 0; j < L.size(); ++j) r.at(static_cast<int>(i) + 1, static_cast<int>(j) + 1) = a.at(K[i], L[j]);
    return r;
}

// Complementary selection: rows not in K by columns not in L.
inline ExactMatrix complement_submatrix(const ExactMatrix& a, const std::vector<int>& K, const std::vector<int>& L) {
    const int n = a.order();
    detail::check_index_set(K, n, "complement rows");
    detail::check_index_set(L, n, "complement cols");
    std::vector<int> rk, rl;
    std::vector<char> inK(static_cast<size_t>(n) + 1, 0), inL(static_cast<size_t>(n) + 1, 0);
    for (int v : K) inK[static_cast<size_t>(v)] = 1;
    for (int v : L) inL[static_cast<size_t>(v)] = 1;
    for (int v = 1; v <= n; ++v) {
        if (!inK[static_cast<size_t>(v)]) rk.push_back(v);
        if (!inL[static_cast<size_t>(v)]) rl.push_back(v);
    }
    return submatrix(a, rk, rl);
}

// ---- Permutation bridging -----------------------------------------------------

inline ExactMatrix to_matrix(const Permutation& p) {
    ExactMatrix m(p.order());
    for (int i = 1; i <= p.order(); ++i) m.at(i, p(i)) = 1;
    return m;
}

inline Permutation perm_from_matrix(const ExactMatrix& a) {
    if (!is_permutation_matrix(a)) throw std::invalid_argument("perm_from_matrix: not a permutation matrix");
    const int n = a.order();
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (a.at(i, j) == Rational(1)) img[static_cast<size_t>(i - 1)] = j;
    return Permutation(std::move(img));
}

// Canonical printable form, also used as a deduplication key.
inline std::string to_string(const ExactMatrix& a) {
    std::string s;
    const int n = a.order();
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (j > 1) s += " ";
            s += a.at(i, j).str();
        }
        s += "\n";
    }
    return s;
}

}  // namespace symds
