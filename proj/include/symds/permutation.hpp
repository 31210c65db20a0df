#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace symds {

// Permutation of {1..n} in one-line notation: image(i) is where i maps to.
// All public indices are 1-based throughout the library.
class Permutation {
public:
    explicit Permutation(std::vector<int> one_line) : img_(std::move(one_line)) {
        const int n = static_cast<int>(img_.size());
        if (n == 0) throw std::invalid_argument("Permutation: empty");
        std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
        for (int v : img_) {
            if (v < 1 || v > n || seen[static_cast<size_t>(v)])
                throw std::invalid_argument("Permutation: invalid one-line notation");
            seen[static_cast<size_t>(v)] = 1;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> img(static_cast<size_t>(n));
        for (int i = 1; i <= n; ++i) img[static_cast<size_t>(i - 1)] = i;
        return Permutation(std::move(img));
    }

    // The antidiagonal permutation i -> n+1-i (matrix with 1s on the
    // Hankel diagonal).
    static Permutation reversal(int n) {
        std::vector<int> img(static_cast<size_t>(n));
        for (int i = 1; i <= n; ++i) img[static_cast<size_t>(i - 1)] = n + 1 - i;
        return Permutation(std::move(img));
    }

    int order() const { return static_cast<int>(img_.size()); }

    int operator()(int i) const {
        if (i < 1 || i > order()) throw std::out_of_range("Permutation: index");
        return img_[static_cast<size_t>(i - 1)];
    }

    const std::vector<int>& one_line() const { return img_; }

    Permutation inverse() const {
        std::vector<int> inv(img_.size());
        for (int i = 1; i <= order(); ++i) inv[static_cast<size_t>((*this)(i) - 1)] = i;
        return Permutation(std::move(inv));
    }

    // (a.then(b))(i) == b(a(i)); matches the matrix product: the matrix of
    // a.then(b) equals matrix(a) * matrix(b).
    Permutation then(const Permutation& b) const {
        if (b.order() != order()) throw std::invalid_argument("Permutation: size mismatch");
        std::vector<int> img(img_.size());
        for (int i = 1; i <= order(); ++i) img[static_cast<size_t>(i - 1)] = b((*this)(i));
        return Permutation(std::move(img));
    }

    // Cycles in canonical form: each cycle starts at its smallest element,
    // cycles ordered by smallest element. Fixed points appear as 1-cycles.
    std::vector<std::vector<int>> cycles() const {
        const int n = order();
        std::vector<char> done(static_cast<size_t>(n) + 1, 0);
        std::vector<std::vector<int>> out;
        for (int s = 1; s <= n; ++s) {
            if (done[static_cast<size_t>(s)]) continue;
            std::vector<int> cyc;
            int v = s;
            do {
                cyc.push_back(v);
                done[static_cast<size_t>(v)] = 1;
                v = (*this)(v);
            } while (v != s);
            out.push_back(std::move(cyc));
        }
        return out;
    }

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

private:
    std::vector<int> img_;
};

// sigma^t corresponds to the transposed permutation matrix.
inline Permutation transpose(const Permutation& p) { return p.inverse(); }

// sigma^h: the permutation of the Hankel-transposed matrix.
inline Permutation hankel_transpose(const Permutation& p) {
    const int n = p.order();
    const Permutation inv = p.inverse();
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) img[static_cast<size_t>(i - 1)] = n + 1 - inv(n + 1 - i);
    return Permutation(std::move(img));
}

// sigma^pi: the permutation of the half-turn rotated matrix.
inline Permutation rotate_pi(const Permutation& p) {
    const int n = p.order();
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) img[static_cast<size_t>(i - 1)] = n + 1 - p(n + 1 - i);
    return Permutation(std::move(img));
}

inline bool is_involution(const Permutation& p) {
    for (int i = 1; i <= p.order(); ++i)
        if (p(p(i)) != i) return false;
    return true;
}

// Matrix fixed under the half-turn rotation: sigma(i) + sigma(n+1-i) = n+1.
inline bool is_centrosymmetric(const Permutation& p) {
    const int n = p.order();
    for (int i = 1; i <= n; ++i)
        if (p(i) + p(n + 1 - i) != n + 1) return false;
    return true;
}

// Matrix fixed under the Hankel transpose.
inline bool is_hankel_symmetric(const Permutation& p) {
    const int n = p.order();
    for (int i = 1; i <= n; ++i)
        if (p(n + 1 - p(i)) != n + 1 - i) return false;
    return true;
}

inline std::string to_string(const Permutation& p) {
    std::string s = "(";
    for (int i = 1; i <= p.order(); ++i) {
        if (i > 1) s += ",";
        s += std::to_string(p(i));
    }
    s += ")";
    return s;
}

}  // namespace symds
