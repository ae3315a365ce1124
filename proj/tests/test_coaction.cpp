#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dzv/coaction.hpp"
#include "dzv/errors.hpp"
#include "dzv/galois.hpp"

#include <set>

using namespace dzv;

TEST_CASE("coaction golden values") {
    CHECK(coaction_brute(5, 3, 3).q == 1);
    CHECK(coaction_brute(3, 5, 5).q == -5);
    CHECK(coaction_brute(7, 3, 7).q == 15);
    CHECK(coaction_brute(3, 5, 3).q == 0);
    CHECK(coaction_closed(5, 3, 3).q == 1);
    CHECK(coaction_closed(3, 5, 5).q == -5);
    CHECK(coaction_closed(7, 3, 7).q == 15);
    CHECK(derivation_coefficient(3, 7, 3) == 0);
    CHECK(derivation_coefficient(3, 7, 5) == -6);
    CHECK(derivation_coefficient(3, 7, 7) == -14);
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(coaction_brute(3, 5, 4), OutOfRangeError);
    CHECK_THROWS_AS(coaction_brute(3, 5, 1), OutOfRangeError);
    CHECK_THROWS_AS(coaction_brute(3, 5, 7), OutOfRangeError);
    CHECK_THROWS_AS(coaction_closed(0, 3, 3), OutOfRangeError);
    CHECK_THROWS_AS(coaction_closed(3, 1, 3), OutOfRangeError);
    CHECK_THROWS_AS(decompose(3, 1), OutOfRangeError);
    CHECK_THROWS_AS(phi_single(1), DomainError);
}

TEST_CASE("brute force equals the closed form") {
    for (int N = 3; N <= 24; ++N)
        for (int a = 1; a <= N - 2; ++a)
            for (int r = 3; r <= N - 2; r += 2) {
                int b = N - a;
                CHECK(coaction_brute(a, b, r) == coaction_closed(a, b, r));
            }
}

TEST_CASE("phi_single") {
    CHECK(phi_single(3) == FPoly::letter(3));
    CHECK(phi_single(11) == FPoly::letter(11));
    CHECK(phi_single(2) == FPoly::f2_power(1));
    CHECK(phi_single(4) == FPoly::f2_power(2, Rational(2, 5)));
    CHECK(phi_single(6) == FPoly::f2_power(3, Rational(8, 35)));
}

TEST_CASE("decomposition golden values") {
    Decomposition d = decompose(3, 7);
    CHECK(d.value.coefficient(FWord{5, 5}) == -6);
    CHECK(d.value.coefficient(FWord{7, 3}) == -14);
    CHECK(d.value.terms().size() == 2);
    REQUIRE(d.modulo_f2_power.has_value());
    CHECK(*d.modulo_f2_power == 5);

    d = decompose(4, 8);
    CHECK(d.value.coefficient(FWord{5, 7}) == 4);
    CHECK(d.value.coefficient(FWord{7, 5}) == 20);
    CHECK(d.value.coefficient(FWord{9, 3}) == 48);
    CHECK(d.value.terms().size() == 3);
    CHECK(*d.modulo_f2_power == 6);

    d = decompose(4, 3);
    CHECK(d.value.coefficient(FWord({3}, 2)) == Rational(2, 5));
    CHECK(d.value.coefficient(FWord({5}, 1)) == 10);
    CHECK(d.value.coefficient(FWord{7}) == -18);
    CHECK_FALSE(d.modulo_f2_power.has_value());

    d = decompose(3, 4);
    CHECK(d.value.coefficient(FWord({5}, 1)) == -10);
    CHECK(d.value.coefficient(FWord{7}) == 17);

    CHECK(decompose(1, 2).value == FPoly::letter(3));
    CHECK(decompose(5, 5).value == FPoly::word(FWord{5, 5}));
    CHECK(decompose(3, 5).value == FPoly::word(FWord{5, 3}, Rational(-5)));
}

TEST_CASE("phi of the diagonal is the square word") {
    for (int a = 3; a <= 11; a += 2)
        CHECK(decompose(a, a).value == FPoly::word(FWord{a, a}));
    // Even diagonal: everything is a rational multiple of a pure f2 power,
    // which is exactly the undetermined part.
    for (int a = 2; a <= 8; a += 2) {
        Decomposition d = decompose(a, a);
        CHECK(d.value.is_zero());
        CHECK(*d.modulo_f2_power == a);
    }
}

TEST_CASE("decomposition structure invariants") {
    for (int N = 3; N <= 18; ++N)
        for (int a = 1; a <= N - 2; ++a) {
            Decomposition d = decompose(a, N - a);
            // Homogeneous of degree N.
            for (const auto& [w, c] : d.value.terms()) {
                CHECK(w.degree() == N);
                // No pure f2 word ever appears in the output.
                CHECK(!w.letters.empty());
                // Words are f_r * single or a lone letter.
                CHECK(w.letters.size() <= 2);
            }
            CHECK(d.modulo_f2_power.has_value() == (N % 2 == 0));
        }
}

TEST_CASE("derivation support matches the index set") {
    // The odd r < N - 1 with nonzero derivation coefficient are exactly the
    // interior of I(a,b) for a != b; this ties the coaction to the index-set
    // combinatorics.
    for (int N = 5; N <= 40; ++N)
        for (int a = 1; a <= N - 2; ++a) {
            int b = N - a;
            if (a == b) continue;
            std::set<int> support;
            for (int r = 3; r <= N - 2; r += 2)
                if (derivation_coefficient(a, b, r) != 0) support.insert(r);
            IndexData ix = index_sets(a, b);
            std::set<int> interior(ix.I.begin(), ix.I.end());
            interior.erase(0);
            interior.erase(N);
            CHECK(support == interior);
        }
}

TEST_CASE("closed-form coefficient restatement") {
    // For odd r != a the coefficient is the signed binomial combination used
    // in the direct decomposition; re-derive it independently here.
    for (int N = 5; N <= 20; ++N)
        for (int a = 1; a <= N - 2; ++a) {
            int b = N - a;
            for (int r = 3; r <= N - 2; r += 2) {
                Rational cb = binomial(r - 1, b - 1), ca = binomial(r - 1, a - 1);
                Rational expect;
                if (r == a) {
                    expect = (a < b) ? Rational(0)
                                     : Rational(b % 2 == 0 ? -1 : 1) * binomial(a - 1, b - 1);
                } else if (a < r) {
                    expect = Rational(b % 2 == 0 ? -1 : 1) * (b <= r ? cb : Rational(0)) +
                             Rational(a % 2 == 0 ? 1 : -1) * ca;
                } else {
                    expect = Rational(b % 2 == 0 ? -1 : 1) * (b <= r ? cb : Rational(0));
                }
                CHECK(coaction_closed(a, b, r).q == expect);
            }
        }
}
