#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prop_random.hpp"
#include "tiltwall/chern.hpp"

using namespace tiltwall;

namespace {
ChernChar mk(long long r, long long c, Rat d, Rat e) { return ChernChar::make(r, c, d, e); }
}  // namespace

TEST_CASE("lattice validation") {
    CHECK_NOTHROW(mk(1, 0, Rat(0), Rat(0)));
    ChernChar omega = mk(3, -1, Rat(-1, 2), Rat(-1, 6));
    CHECK(chi(omega) == Rat(0));
    // c odd forces half-odd ch2
    CHECK_THROWS_AS(mk(2, 1, Rat(0), Rat(0)), Error);
    // chi must be an integer
    CHECK_THROWS_AS(mk(1, 0, Rat(0), Rat(1, 2)), Error);
    CHECK_THROWS_AS(mk(1, 0, Rat(1, 3), Rat(0)), Error);
}

TEST_CASE("twisting by line bundles") {
    CHECK(twist(mk(1, 0, Rat(0), Rat(0)), -1) == mk(1, -1, Rat(1, 2), Rat(-1, 6)));
    // the twisted tangent bundle T(-2)
    CHECK(twist(mk(3, 4, Rat(2), Rat(2, 3)), -2) == mk(3, -2, Rat(0), Rat(2, 3)));
    proptest::Rng rng;
    for (int i = 0; i < 60; ++i) {
        ChernChar v = proptest::random_char(rng);
        CHECK(twist(twist(v, 3), -3) == v);
        CHECK(delta(twist(v, rng.range(-4, 4))) == delta(v));
    }
}

TEST_CASE("ring structure") {
    ChernChar unit = structure_sheaf_char();
    CHECK(mul(line_bundle_char(1), line_bundle_char(-1)) == unit);
    // chi(O_V(1)) = number of degree-one monomials on a plane
    ChernChar ov1 = mul(mk(0, 1, Rat(-1, 2), Rat(1, 6)), line_bundle_char(1));
    CHECK(ov1 == mk(0, 1, Rat(1, 2), Rat(1, 6)));
    CHECK(chi(ov1) == Rat(3));
    // Omega(1) out of the dual Euler sequence data
    CHECK(mul(mk(3, -4, Rat(2), Rat(-2, 3)), line_bundle_char(1)) ==
          mk(3, -1, Rat(-1, 2), Rat(-1, 6)));
    proptest::Rng rng;
    for (int i = 0; i < 60; ++i) {
        ChernChar a = proptest::random_char(rng);
        ChernChar b = proptest::random_char(rng);
        ChernChar c = proptest::random_char(rng);
        CHECK(mul(a, b) == mul(b, a));
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
        CHECK(mul(a, unit) == a);
    }
}

TEST_CASE("derived dual at the character level") {
    CHECK(dual(structure_sheaf_char()).plain == structure_sheaf_char());
    CHECK(dual(mk(1, 0, Rat(-2), Rat(3))).shifted == mk(-1, 0, Rat(2), Rat(3)));
    proptest::Rng rng;
    for (int i = 0; i < 60; ++i) {
        ChernChar a = proptest::random_char(rng);
        ChernChar b = proptest::random_char(rng);
        CHECK(dual(mul(a, b)).plain == mul(dual(a).plain, dual(b).plain));
        CHECK(dual(a).shifted == -dual(a).plain);
    }
}

TEST_CASE("euler characteristic and pairing") {
    CHECK(chi(structure_sheaf_char()) == Rat(1));
    CHECK(chi(mk(4, -1, Rat(-1, 2), Rat(-7, 6))) == Rat(0));  // e + 7/6 at e = -7/6
    CHECK(chi(mk(3, -1, Rat(-1, 2), Rat(-1, 6))) == Rat(0));
    // chi(O(n)) = (n+1)(n+2)(n+3)/6 including negative n
    for (long long n = -6; n <= 6; ++n)
        CHECK(chi(line_bundle_char(n)) == Rat((n + 1) * (n + 2) * (n + 3), 6));

    CHECK(euler_pairing(line_bundle_char(-1), mk(3, -2, Rat(0), Rat(2, 3))) == Rat(4));
    CHECK(euler_pairing(mk(3, -1, Rat(-1, 2), Rat(-1, 6)), mk(4, -1, Rat(-3, 2), Rat(5, 6))) ==
          Rat(1));  // 3e - 3/2 at e = 5/6
    CHECK(euler_pairing(structure_sheaf_char(), structure_sheaf_char()) == Rat(1));

    proptest::Rng rng;
    for (int i = 0; i < 80; ++i) {
        ChernChar v = proptest::random_char(rng);
        CHECK(chi(v).is_integer());
        ChernChar w = proptest::random_char(rng);
        // Serre duality on P3
        CHECK(euler_pairing(w, v) == -euler_pairing(v, twist(w, -4)));
    }
    // binomial oracle for the pairing on line bundles
    for (long long a = -3; a <= 3; ++a)
        for (long long b = -3; b <= 3; ++b) {
            long long n = b - a;
            Rat expect = Rat((n + 1) * (n + 2) * (n + 3), 6);
            CHECK(euler_pairing(line_bundle_char(a), line_bundle_char(b)) == expect);
        }
}

TEST_CASE("slope and discriminant") {
    CHECK(*mu(mk(3, -1, Rat(-1, 2), Rat(-1, 6))) == Rat(-1, 3));
    CHECK_FALSE(mu(mk(0, 2, Rat(-1), Rat(1, 3))).has_value());
    CHECK(delta(mk(1, 0, Rat(0), Rat(0))) == Rat(0));
    CHECK(delta(mk(3, -1, Rat(-5, 2), Rat(23, 6))) == Rat(16));
    CHECK(delta(mk(4, -1, Rat(-3, 2), Rat(5, 6))) == Rat(13));
    proptest::Rng rng;
    for (int i = 0; i < 50; ++i) {
        ChernChar v = proptest::random_char(rng);
        if (v.r().is_zero()) continue;
        long long n = rng.range(-5, 5);
        CHECK(*mu(twist(v, n)) == *mu(v) + Rat(n));
    }
}

TEST_CASE("twisted characters, nu, and Q") {
    proptest::Rng rng;
    for (int i = 0; i < 40; ++i) {
        ChernChar v = proptest::random_char(rng);
        TwistedChern t = twisted_ch(v, Rat(0));
        CHECK(t.ch1b == Rat(v.c()));
        CHECK(t.ch2b == v.d());
        CHECK(t.ch3b == v.e());
    }
    CHECK(twisted_ch(mk(3, -1, Rat(-1, 2), Rat(-1, 6)), Rat(-1)).ch2b == Rat(0));
    CHECK(twisted_ch(mk(4, -2, Rat(-1), Rat(5, 3)), Rat(-1)).ch1b == Rat(2));

    CHECK(*nu(mk(3, -1, Rat(-1, 2), Rat(-1, 6)), Rat(0), Rat(-1)) == Rat(0));
    CHECK(*nu(mk(4, -2, Rat(0), Rat(2, 3)), Rat(0), Rat(-1)) == Rat(0));
    CHECK_FALSE(nu(mk(1, 0, Rat(0), Rat(0)), Rat(1), Rat(0)).has_value());

    CHECK(big_q(mk(1, 0, Rat(0), Rat(0)), Rat(7), Rat(0)) == Rat(0));
    CHECK(big_q(mk(3, -1, Rat(-7, 2), Rat(41, 6)), Rat(0), Rat(-1)) == Rat(-4));
    CHECK(big_q(mk(3, 0, Rat(-3), Rat(3)), Rat(0), Rat(-1)) == Rat(0));

    // Q twist covariance: Q(v(n)) at beta+n equals Q(v) at beta
    for (int i = 0; i < 40; ++i) {
        ChernChar v = proptest::random_char(rng);
        long long n = rng.range(-3, 3);
        Rat a2(rng.range(0, 6), rng.range(1, 4));
        Rat beta(rng.range(-8, 8), rng.range(1, 4));
        CHECK(big_q(twist(v, n), a2, beta + Rat(n)) == big_q(v, a2, beta));
    }
}

TEST_CASE("hilbert polynomials") {
    HilbertPoly p = hilbert_poly(structure_sheaf_char());
    CHECK(p.a3 == Rat(1, 6));
    CHECK(p.a2 == Rat(1));
    CHECK(p.a1 == Rat(11, 6));
    CHECK(p.a0 == Rat(1));
    // P(O_V, m) = (m+1)(m+2)/2 by the difference oracle P(O,m) - P(O,m-1)
    HilbertPoly pv = hilbert_poly(mk(0, 1, Rat(-1, 2), Rat(1, 6)));
    for (long long m = -4; m <= 4; ++m)
        CHECK(pv.eval(Rat(m)) == p.eval(Rat(m)) - p.eval(Rat(m - 1)));

    proptest::Rng rng;
    for (int i = 0; i < 50; ++i) {
        ChernChar v = proptest::random_char(rng);
        HilbertPoly h = hilbert_poly(v);
        CHECK(h.a3 == Rat(v.r(), BigInt(6)));
        CHECK(h.eval(Rat(0)) == chi(v));
        long long n = rng.range(-4, 4), m = rng.range(-4, 4);
        CHECK(hilbert_poly(twist(v, n)).eval(Rat(m)) == h.eval(Rat(m + n)));
    }
}

TEST_CASE("gieseker pre-order") {
    HilbertPoly po = hilbert_poly(structure_sheaf_char());
    HilbertPoly poo = hilbert_poly(mk(2, 0, Rat(0), Rat(0)));
    HilbertPoly p1 = hilbert_poly(line_bundle_char(1));
    HilbertPoly pv = hilbert_poly(mk(0, 1, Rat(-1, 2), Rat(1, 6)));
    CHECK(gieseker_compare(po, poo) == PolyOrder::equiv);
    CHECK(gieseker_compare(po, p1) == PolyOrder::prec);
    CHECK(gieseker_compare(p1, po) == PolyOrder::succ);
    CHECK(gieseker_compare(po, pv) == PolyOrder::prec);  // higher degree loses
    // nonzero f satisfies f < 0
    HilbertPoly zero{Rat(0), Rat(0), Rat(0), Rat(0)};
    CHECK(gieseker_compare(po, zero) == PolyOrder::prec);
    CHECK_THROWS_AS(gieseker_compare(zero, zero), Error);
    // P2 mode drops the constant coefficient
    HilbertPoly shifted = po;
    shifted.a0 = Rat(5);
    CHECK(gieseker_compare(po, shifted, CompareMode::p2) == PolyOrder::equiv);
    CHECK(gieseker_compare(po, shifted, CompareMode::full) == PolyOrder::prec);
}

TEST_CASE("membership classification") {
    MembershipReport rep = classify_membership(Rat(0), Rat(0), Rat(-1));
    CHECK_FALSE(rep.in_ch_le2);
    CHECK(rep.in_ch_le1);

    rep = classify_membership(Rat(2), Rat(1), Rat(1, 2));
    CHECK(rep.in_ch_le2);

    rep = classify_membership(Rat(-1), Rat(0));
    CHECK_FALSE(rep.in_ch_le1);

    rep = classify_membership(Rat(2), Rat(1), Rat(0));
    CHECK_FALSE(rep.in_ch_le2);  // parity

    rep = classify_membership(Rat(0), Rat(0), Rat(0), Rat(-2));
    CHECK_FALSE(rep.in_ch);

    rep = classify_membership(mk(3, -1, Rat(-1, 2), Rat(-1, 6)));
    CHECK(rep.in_ch);

    proptest::Rng rng;
    for (int i = 0; i < 200; ++i) {
        // lattice closure: every constructed character passes both invariants
        ChernChar v = proptest::random_char(rng);
        ChernChar w = proptest::random_char(rng);
        CHECK_NOTHROW(mul(v, w));
        CHECK_NOTHROW(twist(v, rng.range(-6, 6)));
        CHECK_NOTHROW(dual(v));
        CHECK(chi(mul(v, w)).is_integer());
    }
}
