#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prop_random.hpp"
#include "tiltwall/walls.hpp"

using namespace tiltwall;

namespace {
Semicircle semi(const WallLocus& w) { return as_semicircle(w); }
}  // namespace

TEST_CASE("wall_between reproduces the classification loci") {
    CHECK(semi(wall_between(Chern2(3, -1, Rat(-5, 2)), Chern2(1, -1, Rat(1, 2)))) ==
          Semicircle{Rat(-2), Rat(1)});
    CHECK(semi(wall_between(Chern2(3, 0, Rat(-3)), Chern2(3, -1, Rat(-1, 2)))) ==
          Semicircle{Rat(-5, 2), Rat(17, 4)});
    CHECK(semi(wall_between(Chern2(4, -2, Rat(-2)), Chern2(3, -2, Rat(0)))) ==
          Semicircle{Rat(-3), Rat(5)});
    CHECK(std::holds_alternative<EverywhereWall>(
        wall_between(Chern2(1, 0, Rat(0)), Chern2(2, 0, Rat(0)))));
    CHECK(std::holds_alternative<EmptyWall>(
        wall_between(Chern2(3, -1, Rat(-1, 2)), Chern2(3, -2, Rat(0)))));
    CHECK_THROWS_AS(wall_between(Chern2(0, 0, Rat(0)), Chern2(1, 0, Rat(0))), Error);
}

TEST_CASE("beta_pm roots kill the twisted ch2") {
    auto [lo, hi] = beta_pm(Chern2(3, 0, Rat(-1)));
    CHECK(lo == -QuadIrr::sqrt_of(Rat(2, 3)));
    CHECK(hi == QuadIrr::sqrt_of(Rat(2, 3)));
    auto [lo2, hi2] = beta_pm(Chern2(4, -1, Rat(-1, 2)));
    CHECK(lo2 == QuadIrr::make(Rat(-1, 4), Rat(-1, 4), 5));
    CHECK(hi2 == QuadIrr::make(Rat(-1, 4), Rat(1, 4), 5));
    auto [lo3, hi3] = beta_pm(Chern2(1, 0, Rat(0)));
    CHECK(lo3 == QuadIrr(Rat(0)));
    CHECK(hi3 == QuadIrr(Rat(0)));
    CHECK_THROWS_AS(beta_pm(Chern2(0, 1, Rat(0))), Error);
    CHECK_THROWS_AS(beta_pm(Chern2(2, 0, Rat(1))), Error);

    proptest::Rng rng;
    int done = 0;
    while (done < 200) {
        ChernChar v = proptest::random_char(rng);
        if (v.r().is_zero() || delta(v).sign() < 0) continue;
        ++done;
        auto [a, b] = beta_pm(v);
        CHECK(a <= b);
        // ch2^beta = d - beta c + beta^2 r/2 vanishes at both roots
        for (const QuadIrr& root : {a, b}) {
            QuadIrr val = QuadIrr(v.d()) - root * Rat(v.c()) + root.square() * Rat(v.r(), BigInt(2));
            CHECK(val.sign() == 0);
        }
    }
}

TEST_CASE("q_wall is the vanishing locus of Q") {
    ChernChar v = ChernChar::make(1, 0, Rat(-3), Rat(5));
    CHECK(semi(q_wall(v)) == Semicircle{Rat(-5, 2), Rat(1, 4)});
    CHECK(big_q(v, Rat(1, 4), Rat(-5, 2)) == Rat(0));
    CHECK(big_q(v, Rat(0), Rat(-2)) == Rat(0));

    ChernChar w = ChernChar::make(3, -1, Rat(-5, 2), Rat(23, 6));
    CHECK(semi(q_wall(w)) == Semicircle{Rat(-2), Rat(1)});
    CHECK_THROWS_AS(q_wall(ChernChar::make(1, 0, Rat(0), Rat(0))), Error);

    proptest::Rng rng;
    int done = 0;
    while (done < 200) {
        ChernChar u = proptest::random_char(rng);
        if (delta(u).sign() <= 0) continue;
        WallLocus locus = q_wall(u);
        if (!is_semicircle(locus)) continue;
        ++done;
        Semicircle s = semi(locus);
        // rational points on the circle: beta = center + off, alpha^2 = rho^2 - off^2
        for (int k = -2; k <= 2; ++k) {
            Rat off = Rat(k, 3);
            Rat alpha_sq = s.radius_sq - off * off;
            if (alpha_sq.sign() < 0) continue;
            CHECK(big_q(u, alpha_sq, s.center + off) == Rat(0));
            if (alpha_sq.sign() > 0) {
                // strictly inside
                CHECK(big_q(u, alpha_sq / Rat(2), s.center + off).sign() < 0);
            }
        }
    }
}

TEST_CASE("crossing and point predicates") {
    WallLocus w = WallLocus(Semicircle{Rat(-2), Rat(1)});
    CHECK(crosses_line(w, QuadIrr(Rat(-3, 2))));
    CHECK_FALSE(crosses_line(w, QuadIrr(Rat(-1))));  // endpoint: alpha = 0 only
    CHECK_FALSE(crosses_line(WallLocus(EmptyWall{}), QuadIrr(Rat(0))));
    CHECK(crosses_line(WallLocus(EverywhereWall{}), QuadIrr(Rat(0))));

    // exact decision against the golden-ratio ray
    Chern2 e(4, -1, Rat(-1, 2));
    QuadIrr beta0 = beta_pm(e).first;
    WallLocus wall = wall_between(e, Chern2(1, -1, Rat(1, 2)));
    CHECK(is_semicircle(wall));
    bool crossing = crosses_line(wall, beta0);
    // W(E, O(-1)): A = 3, B = -7/2*... computed exactly by the library; the
    // ray beta_- ~ -0.809 must decide consistently with the square compare
    Semicircle s = semi(wall);
    QuadIrr off = beta0 - QuadIrr(s.center);
    CHECK(crossing == (off.square().compare(QuadIrr(s.radius_sq)) < 0));

    ChernChar v = ChernChar::make(1, 0, Rat(-3), Rat(5));
    CHECK(point_position(q_wall(v), Rat(1, 4), Rat(-5, 2)) == PointPosition::on);
    CHECK(point_position(q_wall(v), Rat(4), Rat(-5, 2)) == PointPosition::outside);
    CHECK(point_position(q_wall(v), Rat(0), Rat(-5, 2)) == PointPosition::inside);
    CHECK_THROWS_AS(point_position(WallLocus(EmptyWall{}), Rat(0), Rat(0)), Error);
}

TEST_CASE("left_of_vertical with the tangency convention") {
    Chern2 v(4, -1, Rat(-1, 2));  // mu = -1/4
    CHECK(left_of_vertical(WallLocus(Semicircle{Rat(-2), Rat(1)}), v));
    CHECK_FALSE(left_of_vertical(WallLocus(Semicircle{Rat(-2), Rat(9)}), v));
    Chern2 w(2, 0, Rat(-1));  // mu = 0, tangency counts as left
    CHECK(left_of_vertical(WallLocus(Semicircle{Rat(-1, 2), Rat(1, 4)}), w));
    CHECK_THROWS_AS(left_of_vertical(WallLocus(Semicircle{Rat(0), Rat(1)}), Chern2(0, 1, Rat(0))),
                    Error);
    CHECK_THROWS_AS(left_of_vertical(WallLocus(EmptyWall{}), v), Error);
}

TEST_CASE("nesting classification") {
    WallLocus a(Semicircle{Rat(-2), Rat(1)});
    WallLocus b(Semicircle{Rat(-5, 2), Rat(35, 12)});
    WallLocus c(Semicircle{Rat(-7, 2), Rat(33, 4)});
    CHECK(nesting_compare(a, b) == NestRel::first_inside_second);
    CHECK(nesting_compare(c, b) == NestRel::second_inside_first);
    CHECK(nesting_compare(a, a) == NestRel::equal);
    CHECK(nesting_compare(a, WallLocus(Semicircle{Rat(2), Rat(1)})) == NestRel::disjoint);
    CHECK(nesting_compare(a, WallLocus(Semicircle{Rat(-3), Rat(1)})) == NestRel::crossing);
    // internal tangency: dist = 1, radii 1 and 2 -> nested for alpha > 0
    CHECK(nesting_compare(a, WallLocus(Semicircle{Rat(-3), Rat(4)})) ==
          NestRel::first_inside_second);
    // external tangency -> disjoint in the open half-plane
    CHECK(nesting_compare(a, WallLocus(Semicircle{Rat(0), Rat(1)})) == NestRel::disjoint);
}

TEST_CASE("nu agreement on sampled wall points") {
    proptest::Rng rng;
    int done = 0;
    while (done < 200) {
        ChernChar v = proptest::random_char(rng);
        ChernChar w = proptest::random_char(rng);
        WallLocus locus;
        try {
            locus = wall_between(Chern2(v), Chern2(w));
        } catch (const Error&) {
            continue;
        }
        if (!is_semicircle(locus)) continue;
        Semicircle s = as_semicircle(locus);
        Rat off = s.radius_sq * Rat(1, 7);  // rational point with off^2 < rho^2 when rho^2 < 49/...
        if ((off * off) >= s.radius_sq) off = Rat(0);
        Rat alpha_sq = s.radius_sq - off * off;
        if (alpha_sq.sign() <= 0) continue;
        auto nv = nu(v, alpha_sq, s.center + off);
        auto nw = nu(w, alpha_sq, s.center + off);
        if (!nv || !nw) continue;
        ++done;
        CHECK(*nv == *nw);
    }
}

TEST_CASE("walls crossing the beta_- ray are pairwise nested") {
    proptest::Rng rng;
    int done = 0;
    while (done < 120) {
        ChernChar v = proptest::random_char(rng);
        if (v.r().sign() <= 0 || delta(v).sign() <= 0) continue;
        QuadIrr anchor = beta_pm(v).first;
        std::vector<WallLocus> crossing;
        for (int i = 0; i < 24; ++i) {
            ChernChar w = proptest::random_char(rng);
            WallLocus locus;
            try {
                locus = wall_between(Chern2(v), Chern2(w));
            } catch (const Error&) {
                continue;
            }
            if (is_semicircle(locus) && crosses_line(locus, anchor)) crossing.push_back(locus);
        }
        if (crossing.size() < 2) continue;
        ++done;
        for (size_t i = 0; i < crossing.size(); ++i)
            for (size_t j = i + 1; j < crossing.size(); ++j) {
                NestRel rel = nesting_compare(crossing[i], crossing[j]);
                CHECK(rel != NestRel::crossing);
                CHECK(rel != NestRel::disjoint);
            }
    }
}

TEST_CASE("shift equivariance of walls") {
    proptest::Rng rng;
    int done = 0;
    while (done < 150) {
        ChernChar v = proptest::random_char(rng);
        ChernChar w = proptest::random_char(rng);
        long long n = rng.range(-4, 4);
        WallLocus base, shifted;
        try {
            base = wall_between(Chern2(v), Chern2(w));
            shifted = wall_between(Chern2(twist(v, n)), Chern2(twist(w, n)));
        } catch (const Error&) {
            continue;
        }
        if (!is_semicircle(base)) continue;
        ++done;
        Semicircle sb = as_semicircle(base);
        Semicircle ss = as_semicircle(shifted);
        CHECK(ss.center == sb.center + Rat(n));
        CHECK(ss.radius_sq == sb.radius_sq);
    }
}
