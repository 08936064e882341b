#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wreath_shapes/wreath_group.hpp"

#include <algorithm>
#include <map>

using namespace wreath;

namespace {

WreathElement colored(int m, std::vector<std::pair<int, int>> colors_at,
                      std::vector<std::pair<int, int>> swaps, int r) {
    WreathElement g = WreathElement::identity(m);
    for (auto [slot, c] : colors_at) g.colors[slot - 1] = static_cast<uint8_t>(c % r);
    for (auto [i, j] : swaps) std::swap(g.perm[i - 1], g.perm[j - 1]);
    return g;
}

}  // namespace

TEST_CASE("group law: order-2 color, conjugation by a transposition, associativity") {
    AbelianGroupSpec T(2);
    WreathElement g1 = colored(1, {{1, 1}}, {}, 2);
    CHECK(wreath_mul(g1, g1, 2).is_identity());

    // conjugating (g at 1) by (1 2) moves the color to slot 2
    WreathElement swap12 = colored(2, {}, {{1, 2}}, 2);
    WreathElement color1 = colored(2, {{1, 1}}, {}, 2);
    WreathElement conj =
        wreath_mul(wreath_mul(swap12, color1, 2), wreath_inv(swap12, 2), 2);
    CHECK(conj == colored(2, {{2, 1}}, {}, 2));

    // full associativity sweep over S_2(Z_2)
    std::vector<WreathElement> all = enumerate_group(2, T);
    REQUIRE(all.size() == 8);
    for (const WreathElement& a : all)
        for (const WreathElement& b : all)
            for (const WreathElement& c : all)
                CHECK(wreath_mul(wreath_mul(a, b, 2), c, 2) ==
                      wreath_mul(a, wreath_mul(b, c, 2), 2));

    for (const WreathElement& a : all) {
        CHECK(wreath_mul(a, wreath_inv(a, 2), 2).is_identity());
        CHECK(wreath_mul(wreath_inv(a, 2), a, 2).is_identity());
    }
}

TEST_CASE("J_2^2 in S_2(Z_2) expands to 2e + 2(g,g)") {
    AbelianGroupSpec T(2);
    AlgebraElement j2 = jm_element(1, 0, T);
    REQUIRE(j2.support_size() == 2);
    AlgebraElement sq = multiply(j2, j2);
    CHECK(sq.support_size() == 2);
    CHECK(sq.coefficient(WreathElement::identity(2)) == 2);
    CHECK(sq.coefficient(colored(2, {{1, 1}, {2, 1}}, {}, 2)) == 2);

    // E[J_2^2] = 2e in S_1(Z_2)
    AlgebraElement e = restrict_E(sq);
    CHECK(e.degree() == 1);
    CHECK(e.support_size() == 1);
    CHECK(e.coefficient(WreathElement::identity(1)) == 2);
}

TEST_CASE("restrict_E basics") {
    AlgebraElement a(2, 1);
    a.add_term(colored(2, {}, {{1, 2}}, 1), 1);
    CHECK(restrict_E(a).is_zero());

    AlgebraElement e2 = AlgebraElement::unit(2, 1);
    AlgebraElement e1 = restrict_E(e2);
    CHECK(e1 == AlgebraElement::unit(1, 1));

    // E restores anything that came through the inclusion
    AbelianGroupSpec T3(3);
    for (const WreathElement& g : enumerate_group(2, T3)) {
        AlgebraElement x(2, 3);
        x.add_term(g, Rational(5, 7));
        CHECK(restrict_E(include_into(x, 3)) == x);
    }
}

TEST_CASE("conj_type_of: cycle colors and reduction") {
    CHECK(conj_type_of(WreathElement::identity(3), 2).is_identity());

    ConjType t1 = conj_type_of(colored(2, {{1, 1}}, {{1, 2}}, 2), 2);
    CHECK(t1.rho[1] == YoungDiagram({2}));
    CHECK(t1.rho[0].is_empty());

    ConjType t2 = conj_type_of(colored(2, {{1, 1}, {2, 1}}, {}, 2), 2);
    CHECK(t2.rho[1] == YoungDiagram({1, 1}));
    CHECK(t2.rho[0].is_empty());

    // 1-rows of color 0 disappear; the degree remembers them
    ConjType t3 = conj_type_of(colored(3, {{2, 1}}, {}, 2), 2);
    CHECK(t3.rho[0].is_empty());
    CHECK(t3.rho[1] == YoungDiagram({1}));
    CHECK(t3.degree == 3);
}

TEST_CASE("class_size: anchors and exhaustive orbit counts") {
    CHECK(class_size(make_conj_type({YoungDiagram({2}), YoungDiagram()}, 2), 2) == 2);
    CHECK(class_size(make_conj_type({YoungDiagram(), YoungDiagram({1})}, 1), 1) == 1);
    CHECK(class_size(make_conj_type({YoungDiagram({2})}, 3), 3) == 3);

    // (theta,2)-cycle anchor: |C| = n(n-1)/2 |T| |C_theta|
    for (int n = 2; n <= 5; ++n)
        for (int r = 1; r <= 3; ++r)
            for (int theta = 0; theta < r; ++theta) {
                std::vector<YoungDiagram> rho(r);
                rho[theta] = YoungDiagram({2});
                CHECK(class_size(make_conj_type(rho, n), n) ==
                      BigInt(n) * (n - 1) / 2 * r);
            }

    for (int r = 1; r <= 3; ++r)
        for (int n = 1; n <= (r == 3 ? 3 : 4); ++n) {
            AbelianGroupSpec T(r);
            std::map<ConjType, long> orbit_count;
            for (const WreathElement& g : enumerate_group(n, T))
                ++orbit_count[conj_type_of(g, r)];
            BigInt total = 0;
            for (const auto& [type, count] : orbit_count) {
                CHECK(class_size(type, n) == count);
                total += count;
            }
            CHECK(total == pow_int(BigInt(r), n) * factorial(n));
            CHECK(orbit_count.size() == enumerate_conj_types(n, T).size());
        }
}

TEST_CASE("class_indicator: small classes") {
    ConjType id_type = make_conj_type({YoungDiagram(), YoungDiagram()}, 2);
    AlgebraElement e = class_indicator(id_type, 2);
    CHECK(e == AlgebraElement::unit(2, 2));

    ConjType two0 = make_conj_type({YoungDiagram({2}), YoungDiagram()}, 2);
    CHECK(class_indicator(two0, 2).support_size() == 2);

    ConjType oneg = make_conj_type({YoungDiagram(), YoungDiagram({1})}, 2);
    AlgebraElement ind = class_indicator(oneg, 2);
    CHECK(ind.support_size() == 2);
    CHECK(ind.coefficient(colored(2, {{1, 1}}, {}, 2)) == 1);
    CHECK(ind.coefficient(colored(2, {{2, 1}}, {}, 2)) == 1);
}

TEST_CASE("jm_element: explicit small cases and the A_theta factorization") {
    AbelianGroupSpec Z2(2);
    CHECK(jm_element(0, 0, Z2).is_zero());

    AlgebraElement j = jm_element(1, 0, Z2);
    CHECK(j.coefficient(colored(2, {}, {{1, 2}}, 2)) == 1);
    CHECK(j.coefficient(colored(2, {{1, 1}, {2, 1}}, {{1, 2}}, 2)) == 1);

    AlgebraElement jg = jm_element(1, 1, Z2);
    CHECK(jg.coefficient(colored(2, {{2, 1}}, {{1, 2}}, 2)) == 1);
    CHECK(jg.coefficient(colored(2, {{1, 1}}, {{1, 2}}, 2)) == 1);

    // J^theta = J (A_theta,(n+1)) = (A_theta,(n+1)) J
    for (int r = 1; r <= 3; ++r)
        for (int n = 0; n <= 4; ++n) {
            AbelianGroupSpec T(r);
            AlgebraElement plain = jm_element(n, 0, T);
            for (int theta = 0; theta < r; ++theta) {
                AlgebraElement a_theta(n + 1, r);
                a_theta.add_term(colored(n + 1, {{n + 1, theta}}, {}, r), 1);
                AlgebraElement left = multiply(plain, a_theta);
                AlgebraElement right = multiply(a_theta, plain);
                CHECK(left == jm_element(n, theta, T));
                CHECK(right == jm_element(n, theta, T));
            }
        }
}

TEST_CASE("jm elements commute with the smaller wreath group") {
    for (int r = 1; r <= 3; ++r)
        for (int n = 1; n <= 3; ++n) {
            AbelianGroupSpec T(r);
            for (int theta = 0; theta < r; ++theta) {
                AlgebraElement j = jm_element(n, theta, T);
                for (const WreathElement& g : enumerate_group(n, T)) {
                    AlgebraElement big(n + 1, r);
                    WreathElement lifted = WreathElement::identity(n + 1);
                    std::copy(g.colors.begin(), g.colors.end(), lifted.colors.begin());
                    std::copy(g.perm.begin(), g.perm.end(), lifted.perm.begin());
                    big.add_term(lifted, 1);
                    CHECK(multiply(j, big) == multiply(big, j));
                }
            }
        }
}

TEST_CASE("jm_moment_bruteforce: examples") {
    AbelianGroupSpec Z2(2);
    // k = 1: E kills every term
    for (int n = 1; n <= 3; ++n)
        for (int y = 0; y < 2; ++y) CHECK(jm_moment_bruteforce(1, y, n, Z2).is_zero());

    AlgebraElement m20 = jm_moment_bruteforce(2, 0, 1, Z2);
    CHECK(m20.support_size() == 1);
    CHECK(m20.coefficient(WreathElement::identity(1)) == 2);

    AlgebraElement m2g = jm_moment_bruteforce(2, 1, 1, Z2);
    CHECK(m2g.support_size() == 1);
    CHECK(m2g.coefficient(colored(1, {{1, 1}}, {}, 2)) == 2);
}

TEST_CASE("jm moments are central: invariant under conjugation by generators") {
    for (int r = 1; r <= 3; ++r)
        for (int n = 1; n <= (r == 3 ? 3 : 4); ++n) {
            AbelianGroupSpec T(r);
            std::vector<WreathElement> gens;
            for (int i = 1; i < n; ++i) gens.push_back(colored(n, {}, {{i, i + 1}}, r));
            if (r > 1) gens.push_back(colored(n, {{1, 1}}, {}, r));
            for (int k = 1; k <= 4; ++k)
                for (int y = 0; y < r; ++y) {
                    AlgebraElement m = jm_moment_bruteforce(k, y, n, T);
                    for (const WreathElement& g : gens) CHECK(conjugate(m, g) == m);
                }
        }
}

TEST_CASE("sanity for symmetric group: E[J^2] = n e") {
    AbelianGroupSpec triv(1);
    for (int n = 1; n <= 5; ++n) {
        AlgebraElement m = jm_moment_bruteforce(2, 0, n, triv);
        CHECK(m.support_size() == 1);
        CHECK(m.coefficient(WreathElement::identity(n)) == n);
    }
}

TEST_CASE("error paths") {
    AbelianGroupSpec Z2(2);
    AlgebraElement a(2, 2), b(3, 2);
    CHECK_THROWS_AS(multiply(a, b), std::invalid_argument);
    CHECK_THROWS_AS(jm_moment_bruteforce(0, 0, 2, Z2), std::invalid_argument);
    CHECK_THROWS_AS(jm_moment_bruteforce(6, 0, 10, Z2, 1000), std::length_error);
    CHECK_THROWS_AS(class_size(make_conj_type({YoungDiagram({3}), YoungDiagram()}, 3), 2),
                    std::invalid_argument);
}
