#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prop_random.hpp"
#include "tiltwall/quadirr.hpp"

using namespace tiltwall;

TEST_CASE("normalization pulls out square factors") {
    QuadIrr a = QuadIrr::make(Rat(0), Rat(1), 12);  // sqrt(12) = 2 sqrt(3)
    CHECK(a.radicand() == 3);
    CHECK(a.radical_coeff() == Rat(2));
    QuadIrr b = QuadIrr::make(Rat(1), Rat(3), 4);  // 1 + 3*2 rational
    CHECK(b.is_rational());
    CHECK(b.as_rational() == Rat(7));
    CHECK(QuadIrr::sqrt_of(Rat(49)).as_rational() == Rat(7));
    CHECK(QuadIrr::sqrt_of(Rat(0)).is_rational());
}

TEST_CASE("sqrt_of rational values squares back") {
    proptest::Rng rng;
    for (int i = 0; i < 300; ++i) {
        Rat s(rng.range(0, 400), rng.range(1, 40));
        QuadIrr root = QuadIrr::sqrt_of(s);
        CHECK(root.sign() >= 0);
        QuadIrr sq = root.square();
        CHECK(sq.is_rational());
        CHECK(sq.as_rational() == s);
    }
}

TEST_CASE("exact sign and ordering") {
    QuadIrr r23 = QuadIrr::sqrt_of(Rat(2, 3));
    CHECK(r23.sign() > 0);
    CHECK((-r23).sign() < 0);
    // sqrt(2/3) = sqrt(6)/3
    CHECK(r23 == QuadIrr::make(Rat(0), Rat(1, 3), 6));
    // golden-ratio-ish comparisons: (-1+sqrt(5))/4 vs 1/3:  3 sqrt(5) vs 7
    QuadIrr x = QuadIrr::make(Rat(-1, 4), Rat(1, 4), 5);
    CHECK(x < QuadIrr(Rat(1, 3)));
    CHECK(x > QuadIrr(Rat(3, 10)));
    CHECK(QuadIrr::sqrt_of(Rat(2)) + QuadIrr::sqrt_of(Rat(2)) == QuadIrr::sqrt_of(Rat(8)));
}

TEST_CASE("floor and ceil against a rational-approximation oracle") {
    proptest::Rng rng;
    for (int i = 0; i < 400; ++i) {
        Rat a(rng.range(-60, 60), rng.range(1, 12));
        Rat b(rng.range(-60, 60), rng.range(1, 12));
        long long d = rng.range(0, 80);
        QuadIrr x = QuadIrr::make(a, b, d);
        BigInt f = x.floor();
        CHECK(x.compare(QuadIrr(Rat(f))) >= 0);
        CHECK(x.compare(QuadIrr(Rat(f + BigInt(1)))) < 0);
        BigInt c = x.ceil();
        CHECK(x.compare(QuadIrr(Rat(c))) <= 0);
        CHECK(x.compare(QuadIrr(Rat(c - BigInt(1)))) > 0);
    }
    CHECK(QuadIrr::make(Rat(-1, 4), Rat(-1, 4), 5).floor() == BigInt(-1));
    CHECK(QuadIrr::make(Rat(-1, 4), Rat(1, 4), 5).floor() == BigInt(0));
    CHECK(QuadIrr(Rat(-3)).floor() == BigInt(-3));
}

TEST_CASE("comparisons across different radicands") {
    CHECK(QuadIrr::sqrt_of(Rat(2)) < QuadIrr::sqrt_of(Rat(3)));
    CHECK(QuadIrr::sqrt_of(Rat(5)) > QuadIrr::sqrt_of(Rat(3)));
    CHECK(QuadIrr::make(Rat(1), Rat(1), 2) < QuadIrr::make(Rat(0), Rat(1), 6));
    CHECK(QuadIrr::make(Rat(-1), Rat(1), 5) > QuadIrr::make(Rat(0), Rat(1), 2) - QuadIrr(Rat(1)));
    proptest::Rng rng(77);
    for (int i = 0; i < 400; ++i) {
        Rat a1(rng.range(-20, 20), rng.range(1, 6));
        Rat b1(rng.range(-20, 20), rng.range(1, 6));
        Rat a2(rng.range(-20, 20), rng.range(1, 6));
        Rat b2(rng.range(-20, 20), rng.range(1, 6));
        QuadIrr x = QuadIrr::make(a1, b1, rng.range(0, 30));
        QuadIrr y = QuadIrr::make(a2, b2, rng.range(0, 30));
        int cmp = x.compare(y);
        // floor-based oracle: scale both by a common denominator and compare
        // the integer parts of 10^6 * (x - y) via floors of each side
        QuadIrr xs = x * Rat(1000000);
        QuadIrr ys = y * Rat(1000000);
        BigInt fx = xs.floor(), fy = ys.floor();
        if (fx > fy + BigInt(1)) CHECK(cmp > 0);
        if (fy > fx + BigInt(1)) CHECK(cmp < 0);
        CHECK(x.compare(x) == 0);
    }
}

TEST_CASE("field arithmetic in a fixed radicand") {
    QuadIrr x = QuadIrr::make(Rat(2), Rat(3), 5);
    QuadIrr y = QuadIrr::make(Rat(-1), Rat(1, 2), 5);
    QuadIrr p = x * y;
    CHECK(p == QuadIrr::make(Rat(2) * Rat(-1) + Rat(3) * Rat(1, 2) * Rat(5),
                             Rat(2) * Rat(1, 2) + Rat(3) * Rat(-1), 5));
    CHECK(p / y == x);
    CHECK((x / x).as_rational() == Rat(1));
    CHECK_THROWS(x * QuadIrr::make(Rat(0), Rat(1), 7));
}
