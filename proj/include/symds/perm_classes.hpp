#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "symds/matrix.hpp"
#include "symds/permutation.hpp"

namespace symds {

// ---- Counting ---------------------------------------------------------------

inline long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Number of involutions of order n (recurrence a(n) = a(n-1) + (n-1)a(n-2)).
inline long long count_involutions(int n) {
    if (n < 0) throw std::invalid_argument("count_involutions: negative order");
    long long prev2 = 1, prev1 = 1;  // a(0), a(1)
    if (n <= 1) return 1;
    long long cur = 0;
    for (int k = 2; k <= n; ++k) {
        cur = prev1 + static_cast<long long>(k - 1) * prev2;
        prev2 = prev1;
        prev1 = cur;
    }
    return cur;
}

// Permutations fixed by the half-turn: sigma(i) + sigma(n+1-i) = n+1.
inline long long count_centrosymmetric(int n) {
    int m = n / 2;
    long long c = 1;
    for (int i = 1; i <= m; ++i) c *= 2LL * i;  // 2^m * m!
    return c;
}

// Permutations that are simultaneously involutions and Hankel-symmetric.
inline long long count_doubly_symmetric(int n) {
    const int k = n / 2;
    // sum over h of 2^k k! / ((k-2h)! h! 2^(2h))
    long long total = 0;
    for (int h = 0; 2 * h <= k; ++h) {
        long long num = 1;
        for (int i = 1; i <= k; ++i) num *= 2LL * i;  // (2k)!!
        long long den = factorial(k - 2 * h) * factorial(h);
        for (int i = 0; i < 2 * h; ++i) den *= 2;
        if (num % den != 0) throw std::logic_error("count_doubly_symmetric: non-integer term");
        total += num / den;
    }
    return total;
}

inline long long count_class(int n, SymmetryClass cls) {
    if (n < 1) throw std::invalid_argument("count_class: order must be positive");
    switch (cls) {
        case SymmetryClass::DS: return factorial(n);
        case SymmetryClass::T: return count_involutions(n);
        case SymmetryClass::H: return count_involutions(n);
        case SymmetryClass::PI: return count_centrosymmetric(n);
        case SymmetryClass::TH: return count_doubly_symmetric(n);
    }
    throw std::logic_error("count_class: unreachable");
}

// ---- Membership -------------------------------------------------------------

inline bool in_class(const Permutation& p, SymmetryClass cls) {
    switch (cls) {
        case SymmetryClass::DS: return true;
        case SymmetryClass::T: return is_involution(p);
        case SymmetryClass::H: return is_hankel_symmetric(p);
        case SymmetryClass::PI: return is_centrosymmetric(p);
        case SymmetryClass::TH: return is_involution(p) && is_hankel_symmetric(p);
    }
    throw std::logic_error("in_class: unreachable");
}

// ---- Enumeration ------------------------------------------------------------

namespace detail {
// All centrosymmetric permutations in lexicographic one-line order. The
// images of positions 1..floor(n/2) determine the rest, and values are
// consumed in half-turn pairs {v, n+1-v}, so a depth-first walk choosing
// ascending values emits lexicographic order directly.
inline std::vector<Permutation> centrosymmetric_perms(int n) {
    const int m = n / 2;
    std::vector<int> img(static_cast<size_t>(n) + 1, 0);
    std::vector<char> used(static_cast<size_t>(n) + 1, 0);
    if (n % 2 == 1) {
        const int c = (n + 1) / 2;
        img[static_cast<size_t>(c)] = c;
        used[static_cast<size_t>(c)] = 1;
    }
    std::vector<Permutation> out;
    auto emit = [&] {
        std::vector<int> line(static_cast<size_t>(n));
        for (int i = 1; i <= n; ++i) line[static_cast<size_t>(i - 1)] = img[static_cast<size_t>(i)];
        out.emplace_back(std::move(line));
    };
    auto walk = [&](auto&& self, int pos) -> void {
        if (pos > m) {
            emit();
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (used[static_cast<size_t>(v)]) continue;
            const int w = n + 1 - v;
            used[static_cast<size_t>(v)] = 1;
            used[static_cast<size_t>(w)] = 1;
            img[static_cast<size_t>(pos)] = v;
            img[static_cast<size_t>(n + 1 - pos)] = w;
            self(self, pos + 1);
            used[static_cast<size_t>(v)] = 0;
            used[static_cast<size_t>(w)] = 0;
        }
    };
    walk(walk, 1);
    return out;
}
}  // namespace detail

// Streaming enumeration of a permutation class in lexicographic one-line
// order. The unstructured classes walk all n! lines lazily and filter; the
// half-turn classes are generated directly from their free positions (a
// doubly symmetric permutation is automatically centrosymmetric, so that
// class filters the centrosymmetric list).
class PermClassStream {
public:
    PermClassStream(int n, SymmetryClass cls) : n_(n), cls_(cls) {
        if (n < 1) throw std::invalid_argument("PermClassStream: order must be positive");
        if (cls == SymmetryClass::PI || cls == SymmetryClass::TH) {
            materialized_ = detail::centrosymmetric_perms(n);
            if (cls == SymmetryClass::TH) {
                std::vector<Permutation> kept;
                for (const auto& p : materialized_)
                    if (is_involution(p)) kept.push_back(p);
                materialized_ = std::move(kept);
            }
            use_materialized_ = true;
        } else {
            line_.resize(static_cast<size_t>(n));
            for (int i = 1; i <= n; ++i) line_[static_cast<size_t>(i - 1)] = i;
        }
    }

    std::optional<Permutation> next() {
        if (use_materialized_) {
            if (pos_ >= materialized_.size()) return std::nullopt;
            return materialized_[pos_++];
        }
        while (!exhausted_) {
            if (!first_) {
                if (!std::next_permutation(line_.begin(), line_.end())) {
                    exhausted_ = true;
                    break;
                }
            }
            first_ = false;
            Permutation p(line_);
            if (in_class(p, cls_)) return p;
        }
        return std::nullopt;
    }

private:
    int n_;
    SymmetryClass cls_;
    bool use_materialized_ = false;
    bool exhausted_ = false;
    bool first_ = true;
    std::vector<int> line_;
    std::vector<Permutation> materialized_;
    size_t pos_ = 0;
};

inline std::vector<Permutation> enumerate_class(int n, SymmetryClass cls) {
    PermClassStream s(n, cls);
    std::vector<Permutation> out;
    while (auto p = s.next()) out.push_back(std::move(*p));
    return out;
}

// ---- Signed permutations and the half-order correspondence -------------------

// A signed permutation of order m: entry i holds a nonzero value in
// {-m..-1, 1..m} whose absolute values form an ordinary permutation.
class SignedPermutation {
public:
    explicit SignedPermutation(std::vector<int> signed_images) : s_(std::move(signed_images)) {
        const int m = static_cast<int>(s_.size());
        if (m < 1) throw std::invalid_argument("SignedPermutation: empty");
        std::vector<char> seen(static_cast<size_t>(m) + 1, 0);
        for (int v : s_) {
            int a = v < 0 ? -v : v;
            if (v == 0 || a > m || seen[static_cast<size_t>(a)])
                throw std::invalid_argument("SignedPermutation: invalid images");
            seen[static_cast<size_t>(a)] = 1;
        }
    }

    int order() const { return static_cast<int>(s_.size()); }

    // Signed image of i in 1..m.
    int operator()(int i) const {
        if (i < 1 || i > order()) throw std::out_of_range("SignedPermutation: index");
        return s_[static_cast<size_t>(i - 1)];
    }

    const std::vector<int>& signed_images() const { return s_; }

    // Apply this, then b (odd action: mapping a negative index negates the
    // result, matching composition of the underlying centrosymmetric maps).
    SignedPermutation then(const SignedPermutation& b) const {
        if (b.order() != order()) throw std::invalid_argument("SignedPermutation: order mismatch");
        std::vector<int> r(s_.size());
        for (int i = 1; i <= order(); ++i) {
            int v = (*this)(i);
            r[static_cast<size_t>(i - 1)] = v > 0 ? b(v) : -b(-v);
        }
        return SignedPermutation(std::move(r));
    }

    friend bool operator==(const SignedPermutation& a, const SignedPermutation& b) { return a.s_ == b.s_; }
    friend bool operator!=(const SignedPermutation& a, const SignedPermutation& b) { return !(a == b); }

private:
    std::vector<int> s_;
};

// Correspondence between centrosymmetric permutations of even order 2m and
// signed permutations of order m: position m+i maps into the upper half
// (value m+j, sign +) or the lower half (value m+1-j, sign -).
inline SignedPermutation theta(const Permutation& p) {
    const int n = p.order();
    if (n % 2 != 0) throw std::invalid_argument("theta: order must be even");
    if (!is_centrosymmetric(p)) throw std::invalid_argument("theta: permutation must be centrosymmetric");
    const int m = n / 2;
    std::vector<int> s(static_cast<size_t>(m));
    for (int i = 1; i <= m; ++i) {
        int v = p(m + i);
        s[static_cast<size_t>(i - 1)] = v > m ? v - m : -(m + 1 - v);
    }
    return SignedPermutation(std::move(s));
}

inline Permutation theta_inverse(const SignedPermutation& rho) {
    const int m = rho.order();
    const int n = 2 * m;
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 1; i <= m; ++i) {
        int v = rho(i);
        int upper = v > 0 ? m + v : m + 1 + v;  // value at position m+i
        img[static_cast<size_t>(m + i - 1)] = upper;
        img[static_cast<size_t>(m - i)] = n + 1 - upper;  // position m+1-i
    }
    return Permutation(std::move(img));
}

}  // namespace symds
