#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "symds/decompose.hpp"
#include "symds/extremality.hpp"
#include "symds/graphs.hpp"
#include "symds/matrix.hpp"
#include "symds/perm_classes.hpp"
#include "symds/permutation.hpp"

using namespace symds;

namespace {

std::vector<Permutation> all_perms(int n) {
    std::vector<int> line(static_cast<size_t>(n));
    std::iota(line.begin(), line.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(line);
    } while (std::next_permutation(line.begin(), line.end()));
    return out;
}

ExactMatrix half_triangle_a3() { return ExactMatrix::from_ints({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}, 2); }
ExactMatrix half_triangle_b3() { return ExactMatrix::from_ints({{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}, 2); }

ExactMatrix half_cycle6() {
    return ExactMatrix::from_ints({{0, 1, 0, 0, 0, 1},
                                   {1, 0, 1, 0, 0, 0},
                                   {0, 1, 0, 1, 0, 0},
                                   {0, 0, 1, 0, 1, 0},
                                   {0, 0, 0, 1, 0, 1},
                                   {1, 0, 0, 0, 1, 0}},
                                  2);
}

// Validity of a midpoint witness for `a` in the given class.
void check_witness(const ExactMatrix& a, SymmetryClass cls, const ExtremeVerdict& v) {
    REQUIRE_FALSE(v.is_extreme);
    REQUIRE(v.witness.has_value());
    const ExactMatrix& b1 = v.witness->first;
    const ExactMatrix& b2 = v.witness->second;
    CHECK(b1 != b2);
    CHECK(is_doubly_stochastic(b1));
    CHECK(is_doubly_stochastic(b2));
    CHECK(has_symmetry(b1, cls));
    CHECK(has_symmetry(b2, cls));
    ExactMatrix mid = b1;
    mid += b2;
    CHECK(Rational(1, 2) * mid == a);
}

}  // namespace

TEST_CASE("support orbits partition the support and demand closure") {
    ExactMatrix a = half_triangle_a3();
    const auto orbits = support_orbits(a, SymmetryClass::T);
    std::set<std::pair<int, int>> seen;
    for (const auto& orb : orbits)
        for (auto c : orb) CHECK(seen.insert(c).second);
    CHECK(seen.size() == 6);
    for (const auto& orb : orbits)
        for (auto [i, j] : orb) CHECK(seen.count({j, i}) == 1);

    ExactMatrix open(2);
    open.at(1, 2) = Rational(1);  // transpose cell missing from the support
    CHECK_THROWS_AS(support_orbits(open, SymmetryClass::T), std::logic_error);
}

TEST_CASE("the rigidity oracle separates vertices from midpoints") {
    ExactMatrix avg3 = ExactMatrix::from_ints({{3, 1, 0}, {1, 2, 1}, {0, 1, 3}}, 4);
    CHECK_FALSE(is_extreme_oracle(avg3, SymmetryClass::PI));
    CHECK(is_extreme_oracle(half_triangle_a3(), SymmetryClass::PI));
    CHECK(is_extreme_oracle(half_triangle_b3(), SymmetryClass::PI));
    CHECK(is_extreme_oracle(to_matrix(Permutation({2, 3, 1})), SymmetryClass::DS));
    // The midpoint identity behind the first check.
    ExactMatrix mid = half_triangle_b3();
    mid += ExactMatrix::identity(3);
    CHECK(Rational(1, 2) * mid == avg3);
}

TEST_CASE("deformation witnesses are valid class members") {
    ExactMatrix avg3 = ExactMatrix::from_ints({{3, 1, 0}, {1, 2, 1}, {0, 1, 3}}, 4);
    auto w = deformation_witness(avg3, SymmetryClass::PI);
    REQUIRE(w.has_value());
    CHECK(w->first != w->second);
    CHECK(is_doubly_stochastic(w->first));
    CHECK(is_doubly_stochastic(w->second));
    CHECK(is_centrosymmetric(w->first));
    CHECK(is_centrosymmetric(w->second));
    ExactMatrix mid = w->first;
    mid += w->second;
    CHECK(Rational(1, 2) * mid == avg3);
    CHECK_FALSE(deformation_witness(half_triangle_a3(), SymmetryClass::PI).has_value());
}

TEST_CASE("half-turn action on cycles distinguishes rotations from reflections") {
    // On the 6-cycle 1-2-3-4-5-6 the map v -> 7-v reverses orientation.
    CHECK(pi_action_on_cycle({1, 2, 3, 4, 5, 6}, 6) == PiCycleAction::Reflection);
    // On the 4-cycle 1-2-4-3 the map v -> 5-v preserves orientation.
    CHECK(pi_action_on_cycle({1, 2, 4, 3}, 4) == PiCycleAction::Rotation);
    // A cycle whose vertex set is not closed under the map.
    CHECK(pi_action_on_cycle({1, 2, 3}, 6) == PiCycleAction::NotInvariant);
    CHECK_THROWS_AS(pi_action_on_cycle({}, 4), std::invalid_argument);
}

TEST_CASE("cycle classification flags self-paired and mirror-paired cycles") {
    // (4,5,3,1,2): cycles {1,4}, {2,5}, {3}; the half-turn v -> 6-v swaps the
    // two transpositions and fixes the central fixed point.
    const auto cs = cycle_structure(Permutation({4, 5, 3, 1, 2}));
    REQUIRE(cs.size() == 3);
    CHECK(cs[0].cycle == std::vector<int>{1, 4});
    CHECK_FALSE(cs[0].self_paired);
    CHECK(cs[1].cycle == std::vector<int>{2, 5});
    CHECK_FALSE(cs[1].self_paired);
    CHECK(cs[2].cycle == std::vector<int>{3});
    CHECK(cs[2].self_paired);
    // (2,4,1,3) is one self-paired 4-cycle.
    const auto cs2 = cycle_structure(Permutation({2, 4, 1, 3}));
    REQUIRE(cs2.size() == 1);
    CHECK(cs2[0].self_paired);
    CHECK_THROWS_AS(cycle_structure(Permutation({2, 3, 1})), std::invalid_argument);
}

TEST_CASE("anti-invariant cyclic permutations are exactly the fractional vertex cores") {
    // At odd order, p passes the test precisely when 1/2 (P + P^pi) is an
    // extreme centrosymmetric matrix with every nonzero entry equal to 1/2.
    for (int n : {1, 3, 5}) {
        for (const auto& p : all_perms(n)) {
            ExactMatrix m = Rational(1, 2) * (to_matrix(p) + to_matrix(rotate_pi(p)));
            bool fractional = true;
            for (int i = 1; i <= n && fractional; ++i)
                for (int j = 1; j <= n; ++j)
                    if (m.at(i, j) == Rational(1)) {
                        fractional = false;
                        break;
                    }
            const bool expected = fractional && is_extreme_oracle(m, SymmetryClass::PI);
            CHECK(anti_centro_cyclic(p) == expected);
        }
    }
    CHECK(anti_centro_cyclic(Permutation({2, 1, 3})));
    CHECK_FALSE(anti_centro_cyclic(Permutation::identity(3)));
    CHECK_THROWS_AS(anti_centro_cyclic(Permutation({2, 1, 4, 3})), std::invalid_argument);
}

TEST_CASE("extremality requires a doubly stochastic matrix carrying the class symmetry") {
    CHECK_THROWS_AS(is_extreme(ExactMatrix::constant(2, Rational(1)), SymmetryClass::DS), std::invalid_argument);
    ExactMatrix asym = to_matrix(Permutation({2, 3, 1}));
    CHECK_THROWS_AS(is_extreme(asym, SymmetryClass::T), std::invalid_argument);
}

TEST_CASE("plain doubly stochastic vertices are exactly the permutation matrices") {
    CHECK(is_extreme(to_matrix(Permutation({2, 3, 1})), SymmetryClass::DS, false).is_extreme);
    ExactMatrix mix = Rational(1, 2) * (to_matrix(Permutation({1, 2})) + to_matrix(Permutation({2, 1})));
    ExtremeVerdict v = is_extreme(mix, SymmetryClass::DS);
    check_witness(mix, SymmetryClass::DS, v);
}

TEST_CASE("a half-weight triangle is an extreme symmetric matrix") {
    CHECK(is_extreme(half_triangle_a3(), SymmetryClass::T, false).is_extreme);
    CHECK(is_extreme(half_triangle_a3(), SymmetryClass::PI, false).is_extreme);
    CHECK(is_extreme(half_triangle_b3(), SymmetryClass::PI, false).is_extreme);
}

TEST_CASE("the symmetrized order-6 shift is the midpoint of its two split involutions") {
    ExactMatrix a = symmetrization(Permutation({2, 3, 4, 5, 6, 1}), SymmetryClass::T);
    ExtremeVerdict v = is_extreme(a, SymmetryClass::T);
    check_witness(a, SymmetryClass::T, v);
    const std::set<std::string> got = {to_string(v.witness->first), to_string(v.witness->second)};
    const std::set<std::string> expect = {to_string(to_matrix(Permutation({2, 1, 4, 3, 6, 5}))),
                                          to_string(to_matrix(Permutation({6, 3, 2, 5, 4, 1})))};
    CHECK(got == expect);
}

TEST_CASE("antidiagonal symmetry delegates to diagonal symmetry by column reversal") {
    for (const auto& p : all_perms(5)) {
        ExactMatrix a = symmetrization(p, SymmetryClass::H);
        ExactMatrix rev(5);
        for (int i = 1; i <= 5; ++i)
            for (int j = 1; j <= 5; ++j) rev.at(i, j) = a.at(i, 6 - j);
        REQUIRE(is_symmetric(rev));
        CHECK(is_extreme(a, SymmetryClass::H, false).is_extreme ==
              is_extreme(rev, SymmetryClass::T, false).is_extreme);
    }
}

TEST_CASE("even-order half-turn vertices are exactly the class permutations") {
    for (int n : {2, 4}) {
        for (const auto& p : all_perms(n)) {
            ExactMatrix a = symmetrization(p, SymmetryClass::PI);
            CHECK(is_extreme(a, SymmetryClass::PI, false).is_extreme == is_permutation_matrix(a));
        }
    }
}

TEST_CASE("the order-5 isolated-block matrix is extreme through its central cycle") {
    ExactMatrix a = symmetrization(Permutation({2, 1, 4, 5, 3}), SymmetryClass::PI);
    ExtremeVerdict v = is_extreme(a, SymmetryClass::PI, false);
    CHECK(v.is_extreme);
    CHECK(v.structure == "central half cycle");
}

TEST_CASE("the half-weight six-cycle is a midpoint in the doubly symmetric polytope") {
    ExactMatrix a = half_cycle6();
    REQUIRE(is_symmetric(a));
    REQUIRE(is_hankel_symmetric(a));
    REQUIRE(is_doubly_stochastic(a));
    // The antidiagonal reflection fixes this cycle edgewise, so the alternating
    // perturbation along the cycle respects every symmetry: not extreme.
    CHECK_FALSE(is_extreme_oracle(a, SymmetryClass::TH));
    ExtremeVerdict v = is_extreme(a, SymmetryClass::TH);
    check_witness(a, SymmetryClass::TH, v);
    // The same even cycle also deforms inside the smaller classes: half-weight
    // cycles are rigid for symmetric matrices only when the cycle is odd.
    check_witness(a, SymmetryClass::T, is_extreme(a, SymmetryClass::T));
    check_witness(a, SymmetryClass::H, is_extreme(a, SymmetryClass::H));
}

TEST_CASE("the quarter average of the known order-8 permutation is a midpoint with the known pair") {
    ExactMatrix a = quarter_form(Permutation({3, 2, 4, 6, 5, 7, 1, 8}));
    ExtremeVerdict v = is_extreme(a, SymmetryClass::TH);
    check_witness(a, SymmetryClass::TH, v);

    ExactMatrix r1 = ExactMatrix::from_ints({{2, 0, 1, 0, 0, 0, 1, 0},
                                             {0, 2, 1, 0, 0, 0, 0, 1},
                                             {1, 1, 0, 2, 0, 0, 0, 0},
                                             {0, 0, 2, 2, 0, 0, 0, 0},
                                             {0, 0, 0, 0, 2, 2, 0, 0},
                                             {0, 0, 0, 0, 2, 0, 1, 1},
                                             {1, 0, 0, 0, 0, 1, 2, 0},
                                             {0, 1, 0, 0, 0, 1, 0, 2}},
                                            4);
    ExactMatrix r2 = ExactMatrix::from_ints({{2, 0, 1, 0, 0, 0, 1, 0},
                                             {0, 2, 1, 0, 0, 0, 0, 1},
                                             {1, 1, 0, 0, 2, 0, 0, 0},
                                             {0, 0, 0, 2, 0, 2, 0, 0},
                                             {0, 0, 2, 0, 2, 0, 0, 0},
                                             {0, 0, 0, 2, 0, 0, 1, 1},
                                             {1, 0, 0, 0, 0, 1, 2, 0},
                                             {0, 1, 0, 0, 0, 1, 0, 2}},
                                            4);
    CHECK(r1 != r2);
    for (const ExactMatrix* r : {&r1, &r2}) {
        CHECK(is_doubly_stochastic(*r));
        CHECK(has_symmetry(*r, SymmetryClass::TH));
    }
    ExactMatrix mid = r1;
    mid += r2;
    CHECK(Rational(1, 2) * mid == a);
}

TEST_CASE("odd-order doubly symmetric central structures are recognized by clause") {
    ExactMatrix seven = ExactMatrix::from_ints({{0, 1, 0, 0, 0, 0, 1},
                                                {1, 0, 1, 0, 0, 0, 0},
                                                {0, 1, 0, 1, 0, 0, 0},
                                                {0, 0, 1, 0, 1, 0, 0},
                                                {0, 0, 0, 1, 0, 1, 0},
                                                {0, 0, 0, 0, 1, 0, 1},
                                                {1, 0, 0, 0, 0, 1, 0}},
                                               2);
    ExtremeVerdict v7 = is_extreme(seven, SymmetryClass::TH, false);
    CHECK(v7.is_extreme);
    CHECK(v7.structure == "central odd cycle");

    ExactMatrix eleven = ExactMatrix::from_ints({{0, 3, 0, 0, 1, 0, 0, 0, 0, 0, 0},
                                                 {3, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
                                                 {0, 1, 0, 3, 0, 0, 0, 0, 0, 0, 0},
                                                 {0, 0, 3, 0, 1, 0, 0, 0, 0, 0, 0},
                                                 {1, 0, 0, 1, 0, 2, 0, 0, 0, 0, 0},
                                                 {0, 0, 0, 0, 2, 0, 2, 0, 0, 0, 0},
                                                 {0, 0, 0, 0, 0, 2, 0, 1, 0, 0, 1},
                                                 {0, 0, 0, 0, 0, 0, 1, 0, 3, 0, 0},
                                                 {0, 0, 0, 0, 0, 0, 0, 3, 0, 1, 0},
                                                 {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 3},
                                                 {0, 0, 0, 0, 0, 0, 1, 0, 0, 3, 0}},
                                                4);
    ExtremeVerdict v11 = is_extreme(eleven, SymmetryClass::TH, false);
    CHECK(v11.is_extreme);
    CHECK(v11.structure == "central chain joining odd cycles");

    ExactMatrix nine = ExactMatrix::from_ints({{0, 0, 0, 0, 0, 0, 1, 3, 0},
                                               {0, 0, 0, 0, 0, 0, 1, 0, 3},
                                               {0, 0, 0, 0, 0, 2, 0, 1, 1},
                                               {0, 0, 0, 0, 2, 0, 2, 0, 0},
                                               {0, 0, 0, 2, 0, 2, 0, 0, 0},
                                               {0, 0, 2, 0, 2, 0, 0, 0, 0},
                                               {1, 1, 0, 2, 0, 0, 0, 0, 0},
                                               {3, 0, 1, 0, 0, 0, 0, 0, 0},
                                               {0, 3, 1, 0, 0, 0, 0, 0, 0}},
                                              4);
    ExtremeVerdict v9 = is_extreme(nine, SymmetryClass::TH, false);
    CHECK(v9.is_extreme);
    CHECK(v9.structure == "central bisected even cycle");
}

TEST_CASE("structural verdicts equal oracle verdicts across generated candidates") {
    for (SymmetryClass cls :
         {SymmetryClass::DS, SymmetryClass::T, SymmetryClass::H, SymmetryClass::PI, SymmetryClass::TH}) {
        for (int n = 1; n <= 5; ++n) {
            for (const auto& p : all_perms(n)) {
                ExactMatrix a = symmetrization(p, cls);
                CHECK(is_extreme(a, cls, false).is_extreme == is_extreme_oracle(a, cls));
            }
        }
    }
    // Half symmetrizations of half-turn-invariant permutations land in the
    // doubly symmetric class and exercise its fractional cases.
    for (int n = 2; n <= 6; ++n) {
        for (const auto& q : enumerate_class(n, SymmetryClass::PI)) {
            ExactMatrix a = Rational(1, 2) * (to_matrix(q) + transpose(to_matrix(q)));
            REQUIRE(has_symmetry(a, SymmetryClass::TH));
            CHECK(is_extreme(a, SymmetryClass::TH, false).is_extreme == is_extreme_oracle(a, SymmetryClass::TH));
        }
    }
}

TEST_CASE("odd-order doubly symmetric vertices obey the central row law") {
    for (int n : {3, 5, 7}) {
        const int c = (n + 1) / 2;
        for (const auto& v : enumerate_extreme(n, SymmetryClass::TH)) {
            std::vector<std::pair<int, Rational>> nonzero;
            for (int j = 1; j <= n; ++j)
                if (!v.at(c, j).is_zero()) nonzero.emplace_back(j, v.at(c, j));
            if (nonzero.size() == 1) {
                CHECK(nonzero[0].first == c);
                CHECK(nonzero[0].second == Rational(1));
            } else if (nonzero.size() == 2) {
                CHECK(nonzero[0].second == Rational(1, 2));
                CHECK(nonzero[1].second == Rational(1, 2));
                CHECK(nonzero[1].first == n + 1 - nonzero[0].first);
            } else {
                REQUIRE(nonzero.size() == 4);
                for (const auto& [j, val] : nonzero) CHECK(val == Rational(1, 4));
                CHECK(nonzero[3].first == n + 1 - nonzero[0].first);
                CHECK(nonzero[2].first == n + 1 - nonzero[1].first);
            }
        }
    }
}

TEST_CASE("vertex enumeration returns each vertex once with the class symmetry") {
    const auto got = enumerate_extreme(3, SymmetryClass::PI);
    std::set<std::string> keys;
    for (const auto& v : got) {
        CHECK(is_doubly_stochastic(v));
        CHECK(is_centrosymmetric(v));
        CHECK(is_extreme_oracle(v, SymmetryClass::PI));
        keys.insert(to_string(v));
    }
    REQUIRE(keys.size() == 4);
    CHECK(keys.count(to_string(ExactMatrix::identity(3))) == 1);
    CHECK(keys.count(to_string(ExactMatrix::reversal(3))) == 1);
    CHECK(keys.count(to_string(half_triangle_a3())) == 1);
    CHECK(keys.count(to_string(half_triangle_b3())) == 1);
    CHECK_THROWS_AS(enumerate_extreme(9, SymmetryClass::PI, 7), std::invalid_argument);
}

TEST_CASE("mirror transposition pairs are doubly symmetric vertices") {
    // (2,1,4,3) pairs the transposition {1,2} with its mirror {3,4}; the
    // resulting permutation matrix must be recognized as extreme.
    ExactMatrix a = to_matrix(Permutation({2, 1, 4, 3}));
    REQUIRE(has_symmetry(a, SymmetryClass::TH));
    CHECK(is_extreme(a, SymmetryClass::TH, false).is_extreme);
}
