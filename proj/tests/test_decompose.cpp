#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "symds/decompose.hpp"
#include "symds/matrix.hpp"
#include "symds/perm_classes.hpp"
#include "symds/permutation.hpp"

using namespace symds;

namespace {

Permutation random_perm(int n, std::mt19937_64& rng) {
    std::vector<int> line(static_cast<size_t>(n));
    std::iota(line.begin(), line.end(), 1);
    std::shuffle(line.begin(), line.end(), rng);
    return Permutation(std::move(line));
}

// Random convex combination of k permutations drawn from a pool.
ExactMatrix random_convex(const std::vector<Permutation>& pool, int k, std::mt19937_64& rng) {
    const int n = pool.front().order();
    std::vector<long long> w(static_cast<size_t>(k));
    long long total = 0;
    for (auto& x : w) {
        x = 1 + static_cast<long long>(rng() % 9);
        total += x;
    }
    ExactMatrix a(n);
    for (int t = 0; t < k; ++t)
        a += Rational(w[static_cast<size_t>(t)], total) * to_matrix(pool[rng() % pool.size()]);
    return a;
}

}  // namespace

TEST_CASE("plain decomposition re-sums exactly with convex coefficients") {
    std::mt19937_64 rng(31337);
    for (int t = 0; t < 60; ++t) {
        const int n = 2 + static_cast<int>(rng() % 5);
        std::vector<Permutation> pool;
        for (int k = 0; k < 5; ++k) pool.push_back(random_perm(n, rng));
        ExactMatrix a = random_convex(pool, 2 + static_cast<int>(rng() % 4), rng);
        Decomposition d = birkhoff(a);
        CHECK(d.evaluate() == a);
        CHECK(d.total() == Rational(1));
        for (const auto& term : d.terms) CHECK(term.coeff.sign() > 0);
        // Never more terms than the affine dimension of the polytope allows.
        CHECK(static_cast<long long>(d.terms.size()) <=
              static_cast<long long>(n - 1) * (n - 1) + 1);
    }
}

TEST_CASE("a permutation matrix decomposes as itself") {
    Decomposition d = birkhoff(to_matrix(Permutation({3, 1, 2})));
    REQUIRE(d.terms.size() == 1);
    CHECK(d.terms[0].coeff == Rational(1));
    CHECK(d.terms[0].perm == Permutation({3, 1, 2}));
}

TEST_CASE("plain decomposition rejects matrices that are not doubly stochastic") {
    CHECK_THROWS_AS(birkhoff(ExactMatrix::constant(2, Rational(1))), std::invalid_argument);
}

TEST_CASE("the order-6 shift splits into the two known involutions") {
    auto s = symmetric_split(Permutation({2, 3, 4, 5, 6, 1}));
    REQUIRE(s.has_value());
    CHECK(s->first == Permutation({2, 1, 4, 3, 6, 5}));
    CHECK(s->second == Permutation({6, 3, 2, 5, 4, 1}));
}

TEST_CASE("a 5-cycle admits no involution split") {
    CHECK_FALSE(symmetric_split(Permutation({2, 3, 4, 5, 1})).has_value());
}

TEST_CASE("involution splits exist exactly for permutations with a long even cycle and no long odd cycle") {
    for (int n = 1; n <= 6; ++n) {
        std::vector<int> line(static_cast<size_t>(n));
        std::iota(line.begin(), line.end(), 1);
        do {
            Permutation p(line);
            bool long_even = false, long_odd = false;
            for (const auto& cyc : p.cycles()) {
                if (cyc.size() >= 4 && cyc.size() % 2 == 0) long_even = true;
                if (cyc.size() >= 3 && cyc.size() % 2 == 1) long_odd = true;
            }
            auto s = symmetric_split(p);
            CHECK(s.has_value() == (long_even && !long_odd));
            if (s) {
                CHECK(is_involution(s->first));
                CHECK(is_involution(s->second));
                CHECK(s->first != s->second);
                ExactMatrix sum = to_matrix(s->first);
                sum += to_matrix(s->second);
                ExactMatrix target = to_matrix(p);
                target += transpose(to_matrix(p));
                CHECK(sum == target);
            }
        } while (std::next_permutation(line.begin(), line.end()));
    }
}

TEST_CASE("every even-order permutation splits against its half-turn image") {
    for (int n : {2, 4, 6}) {
        std::vector<int> line(static_cast<size_t>(n));
        std::iota(line.begin(), line.end(), 1);
        do {
            Permutation p(line);
            auto [q1, q2] = centro_split(p);
            CHECK(is_centrosymmetric(q1));
            CHECK(is_centrosymmetric(q2));
            ExactMatrix sum = to_matrix(q1);
            sum += to_matrix(q2);
            ExactMatrix target = to_matrix(p);
            target += rotate_pi(to_matrix(p));
            CHECK(sum == target);
        } while (std::next_permutation(line.begin(), line.end()));
    }
    // Spot check at order 8: the shift.
    Permutation shift8({2, 3, 4, 5, 6, 7, 8, 1});
    auto [q1, q2] = centro_split(shift8);
    CHECK(is_centrosymmetric(q1));
    CHECK(is_centrosymmetric(q2));
    ExactMatrix sum = to_matrix(q1);
    sum += to_matrix(q2);
    ExactMatrix target = to_matrix(shift8);
    target += rotate_pi(to_matrix(shift8));
    CHECK(sum == target);
}

TEST_CASE("the half-turn split rejects odd order") {
    CHECK_THROWS_AS(centro_split(Permutation({2, 3, 1})), std::invalid_argument);
}

TEST_CASE("half-turn decomposition keeps every term in the class") {
    std::mt19937_64 rng(271828);
    for (int n : {2, 4, 6}) {
        const auto cls = enumerate_class(n, SymmetryClass::PI);
        for (int t = 0; t < 40; ++t) {
            ExactMatrix a = random_convex(cls, 2 + static_cast<int>(rng() % 4), rng);
            Decomposition d = centro_birkhoff(a);
            CHECK(d.evaluate() == a);
            CHECK(d.total() == Rational(1));
            for (const auto& term : d.terms) CHECK(is_centrosymmetric(term.perm));
        }
    }
}

TEST_CASE("half-turn decomposition validates its input") {
    // Odd order is rejected up front, even for valid doubly stochastic input.
    ExactMatrix avg3 = ExactMatrix::from_ints({{3, 1, 0}, {1, 2, 1}, {0, 1, 3}}, 4);
    REQUIRE(is_doubly_stochastic(avg3));
    REQUIRE(is_centrosymmetric(avg3));
    CHECK_THROWS_AS(centro_birkhoff(avg3), std::invalid_argument);
    // Not doubly stochastic.
    CHECK_THROWS_AS(centro_birkhoff(ExactMatrix::constant(2, Rational(1))), std::invalid_argument);
    // Not half-turn invariant.
    ExactMatrix skew = ExactMatrix::from_ints({{1, 1, 0, 0}, {0, 0, 1, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}}, 2);
    REQUIRE(is_doubly_stochastic(skew));
    REQUIRE_FALSE(is_centrosymmetric(skew));
    CHECK_THROWS_AS(centro_birkhoff(skew), std::invalid_argument);
}

TEST_CASE("integral splitting writes the all-ones matrix as class permutations") {
    for (int m = 1; m <= 4; ++m) {
        const int n = 2 * m;
        ExactMatrix ones = ExactMatrix::constant(n, Rational(1));
        const auto terms = centro_birkhoff_integral(ones, n);
        REQUIRE(static_cast<int>(terms.size()) == n);
        ExactMatrix sum(n);
        std::set<Permutation> distinct;
        for (const auto& p : terms) {
            CHECK(is_centrosymmetric(p));
            sum += to_matrix(p);
            distinct.insert(p);
        }
        CHECK(sum == ones);
        CHECK(distinct.size() == terms.size());  // cells are covered exactly once
    }
}

TEST_CASE("integral splitting validates order, entries, and line sums") {
    CHECK_THROWS_AS(centro_birkhoff_integral(ExactMatrix::constant(3, Rational(1)), 3), std::invalid_argument);
    CHECK_THROWS_AS(centro_birkhoff_integral(ExactMatrix::constant(2, Rational(1, 2)), 1), std::invalid_argument);
    CHECK_THROWS_AS(centro_birkhoff_integral(ExactMatrix::constant(2, Rational(1)), 3), std::invalid_argument);
    ExactMatrix neg(2);
    neg.at(1, 1) = Rational(-1);
    neg.at(1, 2) = Rational(2);
    neg.at(2, 1) = Rational(2);
    neg.at(2, 2) = Rational(-1);
    CHECK_THROWS_AS(centro_birkhoff_integral(neg, 1), std::invalid_argument);
}

TEST_CASE("symmetrization lands in the class and fixes class members") {
    std::mt19937_64 rng(1618);
    for (int t = 0; t < 50; ++t) {
        const int n = 1 + static_cast<int>(rng() % 7);
        Permutation p = random_perm(n, rng);
        for (SymmetryClass cls :
             {SymmetryClass::DS, SymmetryClass::T, SymmetryClass::H, SymmetryClass::PI, SymmetryClass::TH}) {
            ExactMatrix a = symmetrization(p, cls);
            CHECK(is_doubly_stochastic(a));
            CHECK(has_symmetry(a, cls));
            if (in_class(p, cls)) CHECK(a == to_matrix(p));
        }
    }
}

TEST_CASE("quarter averaging reproduces the known order-8 form") {
    ExactMatrix got = quarter_form(Permutation({3, 2, 4, 6, 5, 7, 1, 8}));
    ExactMatrix expect = ExactMatrix::from_ints({{2, 0, 1, 0, 0, 0, 1, 0},
                                                 {0, 2, 1, 0, 0, 0, 0, 1},
                                                 {1, 1, 0, 1, 1, 0, 0, 0},
                                                 {0, 0, 1, 2, 0, 1, 0, 0},
                                                 {0, 0, 1, 0, 2, 1, 0, 0},
                                                 {0, 0, 0, 1, 1, 0, 1, 1},
                                                 {1, 0, 0, 0, 0, 1, 2, 0},
                                                 {0, 1, 0, 0, 0, 1, 0, 2}},
                                                4);
    CHECK(got == expect);
}
