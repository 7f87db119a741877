#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prop_random.hpp"
#include "tiltwall/rational.hpp"

using namespace tiltwall;

TEST_CASE("bigint basic arithmetic round trips through strings") {
    CHECK(BigInt(0).to_string() == "0");
    CHECK(BigInt(-1234567890123456789LL).to_string() == "-1234567890123456789");
    CHECK(BigInt::from_string("99999999999999999999999999") ==
          BigInt::from_string("100000000000000000000000000") - BigInt(1));
    BigInt a = BigInt::from_string("123456789123456789");
    BigInt b = BigInt::from_string("-987654321987654321");
    CHECK((a * b).to_string() == "-121932631356500531347203169112635269");
    CHECK(a + b == -((-a) + (-b)));
}

TEST_CASE("bigint division semantics") {
    BigInt q, r;
    BigInt::divmod_trunc(BigInt(7), BigInt(2), q, r);
    CHECK(q == BigInt(3));
    CHECK(r == BigInt(1));
    BigInt::divmod_trunc(BigInt(-7), BigInt(2), q, r);
    CHECK(q == BigInt(-3));
    CHECK(r == BigInt(-1));
    BigInt::divmod_floor(BigInt(-7), BigInt(2), q, r);
    CHECK(q == BigInt(-4));
    CHECK(r == BigInt(1));
    BigInt::divmod_floor(BigInt(7), BigInt(-2), q, r);
    CHECK(q == BigInt(-4));
    CHECK(r == BigInt(-1));
}

TEST_CASE("bigint divmod reconstructs the dividend on random input") {
    proptest::Rng rng;
    for (int i = 0; i < 500; ++i) {
        BigInt a = BigInt(rng.range(-1000000, 1000000)) * BigInt(rng.range(1, 1000000));
        BigInt b(rng.range(1, 50000));
        if (rng.range(0, 1)) b = -b;
        BigInt q, r;
        BigInt::divmod_trunc(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
    }
}

TEST_CASE("bigint gcd and isqrt") {
    CHECK(BigInt::gcd(BigInt(12), BigInt(-18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(0), BigInt(5)) == BigInt(5));
    CHECK(BigInt::isqrt(BigInt(0)) == BigInt(0));
    CHECK(BigInt::isqrt(BigInt(35)) == BigInt(5));
    CHECK(BigInt::isqrt(BigInt(36)) == BigInt(6));
    BigInt big = BigInt::from_string("152415787532388367501905199875019052100");
    CHECK(BigInt::isqrt(big) == BigInt::from_string("12345678901234567890"));
    proptest::Rng rng;
    for (int i = 0; i < 300; ++i) {
        BigInt n(rng.range(0, 4000000000LL));
        BigInt s = BigInt::isqrt(n);
        CHECK(s * s <= n);
        CHECK((s + BigInt(1)) * (s + BigInt(1)) > n);
    }
}

TEST_CASE("rational normalization and comparisons") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(1, -2) == Rat(-1, 2));
    CHECK(Rat(0, 7).to_string() == "0");
    CHECK(Rat(-6, 4).to_string() == "-3/2");
    CHECK(Rat(5).to_string() == "5");
    CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
    CHECK(Rat(1, 3) < Rat(2, 5));
    CHECK(Rat(-7, 3).floor() == BigInt(-3));
    CHECK(Rat(-7, 3).ceil() == BigInt(-2));
    CHECK(Rat(6, 3).floor() == BigInt(2));
    CHECK(Rat::from_string("-23/6") == Rat(-23, 6));
    CHECK(Rat::from_string("14") == Rat(14));
    CHECK_THROWS(Rat(1, 0));
}
