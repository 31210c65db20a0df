#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "symds/dsm_io.hpp"
#include "symds/matrix.hpp"
#include "symds/permutation.hpp"

using namespace symds;

namespace {

Permutation random_perm(int n, std::mt19937_64& rng) {
    std::vector<int> line(static_cast<size_t>(n));
    std::iota(line.begin(), line.end(), 1);
    std::shuffle(line.begin(), line.end(), rng);
    return Permutation(std::move(line));
}

ExactMatrix random_matrix(int n, std::mt19937_64& rng) {
    ExactMatrix a(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            a.at(i, j) = Rational(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 4));
    return a;
}

}  // namespace

TEST_CASE("constructors and element access") {
    ExactMatrix z(3);
    CHECK(z.order() == 3);
    CHECK(z.at(2, 2) == Rational(0));
    CHECK_THROWS_AS(z.at(0, 1), std::out_of_range);
    CHECK_THROWS_AS(z.at(1, 4), std::out_of_range);
    CHECK_THROWS_AS(ExactMatrix(0), std::invalid_argument);

    CHECK(ExactMatrix::identity(2).at(1, 1) == Rational(1));
    CHECK(ExactMatrix::reversal(2).at(1, 2) == Rational(1));
    CHECK(ExactMatrix::constant(2, Rational(1, 2)).at(2, 1) == Rational(1, 2));

    ExactMatrix q = ExactMatrix::from_ints({{1, 1}, {1, 1}}, 2);
    CHECK(q.at(1, 1) == Rational(1, 2));
    CHECK_THROWS_AS(ExactMatrix::from_ints({{1, 1}}), std::invalid_argument);
}

TEST_CASE("row and column sums are exact") {
    ExactMatrix a = ExactMatrix::from_ints({{3, 1, 0}, {1, 2, 1}, {0, 1, 3}}, 4);
    for (int i = 1; i <= 3; ++i) {
        CHECK(a.row_sum(i) == Rational(1));
        CHECK(a.col_sum(i) == Rational(1));
    }
    CHECK(is_doubly_stochastic(a));
    CHECK(is_centrosymmetric(a));
}

TEST_CASE("the three symmetry operators are involutions") {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 30; ++t) {
        const int n = 1 + static_cast<int>(rng() % 6);
        ExactMatrix a = random_matrix(n, rng);
        CHECK(transpose(transpose(a)) == a);
        CHECK(hankel_transpose(hankel_transpose(a)) == a);
        CHECK(rotate_pi(rotate_pi(a)) == a);
    }
}

TEST_CASE("any two operators compose to the third") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 30; ++t) {
        const int n = 1 + static_cast<int>(rng() % 6);
        ExactMatrix a = random_matrix(n, rng);
        CHECK(transpose(hankel_transpose(a)) == rotate_pi(a));
        CHECK(hankel_transpose(transpose(a)) == rotate_pi(a));
        CHECK(transpose(rotate_pi(a)) == hankel_transpose(a));
        CHECK(rotate_pi(transpose(a)) == hankel_transpose(a));
        CHECK(hankel_transpose(rotate_pi(a)) == transpose(a));
        CHECK(rotate_pi(hankel_transpose(a)) == transpose(a));
    }
}

TEST_CASE("product rules: transposes reverse factors, the half-turn preserves them") {
    std::mt19937_64 rng(44);
    for (int t = 0; t < 30; ++t) {
        const int n = 1 + static_cast<int>(rng() % 5);
        ExactMatrix a = random_matrix(n, rng), b = random_matrix(n, rng);
        CHECK(transpose(a * b) == transpose(b) * transpose(a));
        CHECK(hankel_transpose(a * b) == hankel_transpose(b) * hankel_transpose(a));
        CHECK(rotate_pi(a * b) == rotate_pi(a) * rotate_pi(b));
    }
}

TEST_CASE("conjugation by a half-turn-invariant permutation preserves the class") {
    std::mt19937_64 rng(45);
    for (int t = 0; t < 40; ++t) {
        const int n = 2 + static_cast<int>(rng() % 5);
        // Build a half-turn-invariant A by averaging.
        ExactMatrix raw = random_matrix(n, rng);
        ExactMatrix a = raw;
        a += rotate_pi(raw);
        // Build a half-turn-invariant permutation matrix P by pairing mirrored images.
        std::vector<int> img(static_cast<size_t>(n) + 1, 0);
        std::vector<int> cols(static_cast<size_t>(n));
        std::iota(cols.begin(), cols.end(), 1);
        std::shuffle(cols.begin(), cols.end(), rng);
        std::vector<char> used(static_cast<size_t>(n) + 1, 0);
        for (int i = 1; i <= n; ++i) {
            if (img[static_cast<size_t>(i)] != 0) continue;
            for (int j : cols) {
                if (used[static_cast<size_t>(j)]) continue;
                const int mi = n + 1 - i, mj = n + 1 - j;
                if (i == mi && j != mj) continue;  // the central row needs the central column
                if (i != mi && j == mj) continue;
                img[static_cast<size_t>(i)] = j;
                used[static_cast<size_t>(j)] = 1;
                if (i != mi) {
                    img[static_cast<size_t>(mi)] = mj;
                    used[static_cast<size_t>(mj)] = 1;
                }
                break;
            }
        }
        std::vector<int> line(static_cast<size_t>(n));
        for (int i = 1; i <= n; ++i) line[static_cast<size_t>(i - 1)] = img[static_cast<size_t>(i)];
        Permutation p(std::move(line));
        REQUIRE(is_centrosymmetric(p));
        REQUIRE(is_centrosymmetric(a));
        ExactMatrix conj = to_matrix(p) * a * rotate_pi(to_matrix(p));
        CHECK(is_centrosymmetric(conj));
    }
}

TEST_CASE("classification returns exactly the satisfied tags") {
    const auto full = classify(to_matrix(Permutation({2, 1, 4, 3})));
    CHECK(full == std::set<SymmetryClass>{SymmetryClass::DS, SymmetryClass::T, SymmetryClass::H, SymmetryClass::PI});

    const auto centro_only = classify(to_matrix(Permutation({2, 4, 1, 3})));
    CHECK(centro_only == std::set<SymmetryClass>{SymmetryClass::DS, SymmetryClass::PI});

    ExactMatrix nn(2);
    nn.at(1, 1) = Rational(2);
    nn.at(1, 2) = Rational(-1);
    nn.at(2, 1) = Rational(-1);
    nn.at(2, 2) = Rational(2);
    const auto tags = classify(nn);  // symmetric and centrosymmetric but not doubly stochastic
    CHECK(tags.count(SymmetryClass::T) == 1);
    CHECK(tags.count(SymmetryClass::DS) == 0);
}

TEST_CASE("two of the three symmetries force the third") {
    std::mt19937_64 rng(46);
    for (int t = 0; t < 60; ++t) {
        const int n = 1 + static_cast<int>(rng() % 6);
        ExactMatrix raw = random_matrix(n, rng);
        ExactMatrix a = raw;
        a += transpose(raw);
        ExactMatrix b = a;
        b += hankel_transpose(a);  // now symmetric and Hankel-symmetric
        CHECK(is_symmetric(b));
        CHECK(is_hankel_symmetric(b));
        CHECK(is_centrosymmetric(b));
    }
}

TEST_CASE("class names round-trip and parsing rejects junk") {
    CHECK(class_name(SymmetryClass::T) == "t");
    CHECK(class_name(SymmetryClass::H) == "h");
    CHECK(class_name(SymmetryClass::PI) == "pi");
    CHECK(class_name(SymmetryClass::TH) == "th");
    CHECK(parse_class("t") == SymmetryClass::T);
    CHECK(parse_class("th") == SymmetryClass::TH);
    CHECK(parse_class("ds") == SymmetryClass::DS);
    CHECK(parse_class("all") == SymmetryClass::DS);
    CHECK_THROWS_AS(parse_class("bogus"), std::invalid_argument);
}

TEST_CASE("permutation matrices convert both ways") {
    std::mt19937_64 rng(47);
    for (int t = 0; t < 30; ++t) {
        const int n = 1 + static_cast<int>(rng() % 7);
        Permutation p = random_perm(n, rng);
        ExactMatrix m = to_matrix(p);
        CHECK(is_permutation_matrix(m));
        CHECK(perm_from_matrix(m) == p);
    }
    CHECK_THROWS_AS(perm_from_matrix(ExactMatrix::constant(2, Rational(1, 2))), std::invalid_argument);
}

TEST_CASE("submatrix selections on the isolated-block vertex") {
    // Average of (2,1,4,5,3) with its half-turn image.
    ExactMatrix a = ExactMatrix::from_ints(
        {{0, 1, 1, 0, 0}, {2, 0, 0, 0, 0}, {0, 1, 0, 1, 0}, {0, 0, 0, 0, 2}, {0, 0, 1, 1, 0}}, 2);
    ExactMatrix block = submatrix(a, {1, 3, 5}, {2, 3, 4});
    CHECK(block == ExactMatrix::from_ints({{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}, 2));
    CHECK(complement_submatrix(a, {1, 3, 5}, {2, 3, 4}) == ExactMatrix::identity(2));

    CHECK_THROWS_AS(submatrix(a, {3, 1}, {2, 4}), std::invalid_argument);   // not increasing
    CHECK_THROWS_AS(submatrix(a, {1, 3}, {2, 3, 4}), std::invalid_argument);  // size mismatch
    CHECK_THROWS_AS(submatrix(a, {1, 6}, {2, 3}), std::invalid_argument);   // out of range
}

TEST_CASE("matrix text format round-trips") {
    std::mt19937_64 rng(48);
    for (int t = 0; t < 20; ++t) {
        const int n = 1 + static_cast<int>(rng() % 6);
        ExactMatrix a = random_matrix(n, rng);
        CHECK(read_dsm_string(write_dsm_string(a, "round trip")) == a);
    }
}

TEST_CASE("matrix text format rejects malformed input") {
    CHECK_THROWS_AS(read_dsm_string(""), std::invalid_argument);
    CHECK_THROWS_AS(read_dsm_string("x"), std::invalid_argument);
    CHECK_THROWS_AS(read_dsm_string("2\n1 0 0 1 0"), std::invalid_argument);  // too many entries
    CHECK_THROWS_AS(read_dsm_string("2\n1 0 0"), std::invalid_argument);      // too few entries
    CHECK_THROWS_AS(read_dsm_string("2\n1 0 0 q"), std::invalid_argument);    // bad entry
    CHECK_THROWS_AS(read_dsm_file("/nonexistent/path.dsm"), std::invalid_argument);
    // Comments are ignored wherever they appear.
    ExactMatrix a = read_dsm_string("# heading\n2\n1 0 # trailing\n0 1\n");
    CHECK(a == ExactMatrix::identity(2));
}

TEST_CASE("arithmetic operators agree with entrywise arithmetic") {
    std::mt19937_64 rng(49);
    for (int t = 0; t < 20; ++t) {
        const int n = 1 + static_cast<int>(rng() % 5);
        ExactMatrix a = random_matrix(n, rng), b = random_matrix(n, rng);
        ExactMatrix sum = a;
        sum += b;
        ExactMatrix scaled = Rational(3, 2) * a;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                CHECK(sum.at(i, j) == a.at(i, j) + b.at(i, j));
                CHECK(scaled.at(i, j) == Rational(3, 2) * a.at(i, j));
            }
        ExactMatrix prod = a * ExactMatrix::identity(n);
        CHECK(prod == a);
    }
}
