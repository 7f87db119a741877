#pragma once

// The randomized property suites behind the acceptance gate.  Each suite runs
// at least `cases` independent samples and returns the number of failures;
// the oracles recompute everything from first principles (spec formulas
// inlined) rather than through the code path under test.

#include <optional>
#include <string>
#include <vector>

#include "prop_random.hpp"
#include "tiltwall/bounds.hpp"
#include "tiltwall/destab.hpp"

namespace proptest {

using namespace tiltwall;

struct SuiteReport {
    int cases = 0;
    int failures = 0;
    std::string first_failure;

    void fail(const std::string& what) {
        ++failures;
        if (first_failure.empty()) first_failure = what;
    }
    bool ok(int min_cases) const { return failures == 0 && cases >= min_cases; }
};

// (i) make/twist/mul/dual always land on the lattice.
inline SuiteReport prop_lattice_closure(int cases) {
    SuiteReport rep;
    Rng rng(11);
    for (int i = 0; i < cases; ++i) {
        ++rep.cases;
        try {
            ChernChar v = random_char(rng);
            ChernChar w = random_char(rng);
            ChernChar m = mul(v, w);
            ChernChar t = twist(v, rng.range(-6, 6));
            DualPair dp = dual(m);
            if (!chi(m).is_integer() || !chi(t).is_integer() || !chi(dp.plain).is_integer())
                rep.fail("chi left the integers");
        } catch (const std::exception& e) {
            rep.fail(e.what());
        }
    }
    return rep;
}

// (ii) Delta is twist-invariant and Q is twist-covariant.
inline SuiteReport prop_twist_invariance(int cases) {
    SuiteReport rep;
    Rng rng(12);
    for (int i = 0; i < cases; ++i) {
        ++rep.cases;
        ChernChar v = random_char(rng);
        long long n = rng.range(-5, 5);
        if (delta(twist(v, n)) != delta(v)) rep.fail("Delta moved under twist of " + v.to_string());
        Rat a2(rng.range(0, 9), rng.range(1, 5));
        Rat beta(rng.range(-9, 9), rng.range(1, 5));
        if (big_q(twist(v, n), a2, beta + Rat(n)) != big_q(v, a2, beta))
            rep.fail("Q not twist-covariant at " + v.to_string());
    }
    return rep;
}

// (iii) Serre duality pairing identity, with a binomial oracle on line bundles.
inline SuiteReport prop_serre_duality(int cases) {
    SuiteReport rep;
    Rng rng(13);
    for (int i = 0; i < cases; ++i) {
        ++rep.cases;
        ChernChar v = random_char(rng);
        ChernChar w = random_char(rng);
        if (euler_pairing(w, v) != -euler_pairing(v, twist(w, -4)))
            rep.fail("Serre identity failed at " + v.to_string() + " / " + w.to_string());
    }
    for (long long a = -4; a <= 4; ++a)
        for (long long b = -4; b <= 4; ++b) {
            ++rep.cases;
            long long n = b - a;
            Rat expect((n + 1) * (n + 2) * (n + 3), 6);  // monomial count for n >= 0
            if (euler_pairing(line_bundle_char(a), line_bundle_char(b)) != expect)
                rep.fail("binomial oracle failed");
        }
    return rep;
}

// (iv) nu agreement at rational points of a wall.
inline SuiteReport prop_nu_agreement(int cases) {
    SuiteReport rep;
    Rng rng(14);
    while (rep.cases < cases) {
        ChernChar v = random_char(rng);
        ChernChar w = random_char(rng);
        if (Chern2(v).is_zero() || Chern2(w).is_zero()) continue;
        WallLocus locus = wall_between(Chern2(v), Chern2(w));
        if (!is_semicircle(locus)) continue;
        Semicircle s = as_semicircle(locus);
        Rat off(rng.range(-3, 3), 7);
        Rat alpha_sq = s.radius_sq - off * off;
        if (alpha_sq.sign() <= 0) continue;
        auto nv = nu(v, alpha_sq, s.center + off);
        auto nw = nu(w, alpha_sq, s.center + off);
        if (!nv || !nw) continue;
        ++rep.cases;
        if (*nv != *nw) rep.fail("nu disagrees on the wall of " + v.to_string());
    }
    return rep;
}

// (v) q_wall is exactly the zero locus of Q, negative inside.
inline SuiteReport prop_q_wall(int cases) {
    SuiteReport rep;
    Rng rng(15);
    while (rep.cases < cases) {
        ChernChar v = random_char(rng);
        if (delta(v).sign() <= 0) continue;
        WallLocus locus = q_wall(v);
        if (!is_semicircle(locus)) {
            // no real circle: Q should have a sign on the axis
            continue;
        }
        Semicircle s = as_semicircle(locus);
        ++rep.cases;
        for (int k = -2; k <= 2; ++k) {
            Rat off = Rat(k, 3);
            Rat alpha_sq = s.radius_sq - off * off;
            if (alpha_sq.sign() < 0) continue;
            if (big_q(v, alpha_sq, s.center + off) != Rat(0))
                rep.fail("Q nonzero on its own wall at " + v.to_string());
            if (alpha_sq.sign() > 0 && big_q(v, alpha_sq / Rat(2), s.center + off).sign() >= 0)
                rep.fail("Q non-negative inside the disk at " + v.to_string());
        }
    }
    return rep;
}

// (vi) enumeration equals a brute-force box scan under the base filters, up
// to the certified rank cutoff; beyond it the box scan may still contain
// numerical classes (they exist at arbitrarily large rank, Pell-style), and
// for each of those the discriminant certificate is re-verified instead.
inline SuiteReport prop_enumeration_oracle(int cases) {
    SuiteReport rep;
    Rng rng(16);
    while (rep.cases < cases) {
        ChernChar vc = random_char_rank(rng, rng.range(1, 4), 6);
        Chern2 v(vc);
        Rat dis = v.delta();
        if (dis.sign() < 0 || dis > Rat(40)) continue;
        RankBound rb;
        try {
            rb = rank_bound(v, RegionSpec::left_of_vertical());
        } catch (const Error&) {
            continue;
        }
        if (!rb.certified) continue;
        ++rep.cases;

        EnumerationResult res =
            enumerate_candidate_walls(v, RegionSpec::left_of_vertical(), FilterSet::minimal());
        std::vector<std::string> got;
        for (const auto& cand : res.candidates) {
            bool in_box = cand.sub.r <= BigInt(10) && cand.sub.c.abs() <= BigInt(15) &&
                          (cand.sub.d * Rat(2)).num().abs() <= BigInt(60);
            if (in_box) got.push_back(cand.sub.to_string());
        }

        // Brute force over the integer box with the defining inequalities
        // spelled out (window, Bogomolov, locus, region).
        QuadIrr anchor = beta_pm(v).first;
        QuadIrr mu_v(Rat(v.c, v.r));
        QuadIrr sqrt_delta = QuadIrr::sqrt_of(dis);
        QuadIrr top(Rat(anchor.floor() + BigInt(1)));
        std::vector<std::string> want;
        for (long long s = 1; s <= 10; ++s)
            for (long long x = -15; x <= 15; ++x)
                for (long long m = -60; m <= 60; ++m) {
                    if (((m - x) % 2 + 2) % 2 != 0) continue;  // parity
                    Rat y(m, 2);
                    // slope condition mu(sub) < mu(v)
                    if (Rat(x) * Rat(v.r) >= Rat(v.c) * Rat(s)) continue;
                    // the heart window 0 < ch1^b(sub) < ch1^b(v) on the ray
                    QuadIrr ch1_sub = QuadIrr(Rat(x)) - anchor * Rat(s);
                    QuadIrr ch1_v = QuadIrr(Rat(v.c)) - anchor * Rat(v.r);
                    if (ch1_sub.sign() <= 0) continue;
                    if ((ch1_v - ch1_sub).sign() <= 0) continue;
                    // Bogomolov on both factors
                    if (Rat(x * x) - Rat(2 * s) * y < Rat(0)) continue;
                    Rat cq = Rat(v.c) - Rat(x);
                    Rat rq = Rat(v.r) - Rat(s);
                    if (cq * cq - Rat(2) * rq * (v.d - y) < Rat(0)) continue;
                    // wall locus from the A, B, C coefficients
                    Rat a = Rat(v.c) * Rat(s) - Rat(x) * Rat(v.r);
                    if (a.is_zero()) continue;
                    Rat b = v.d * Rat(s) - y * Rat(v.r);
                    Rat c = v.d * Rat(x) - y * Rat(v.c);
                    Rat center = b / a;
                    Rat rho_sq = center * center - Rat(2) * c / a;
                    if (rho_sq.sign() <= 0) continue;
                    // region: crosses the beta_- ray and stays left of mu
                    QuadIrr off = anchor - QuadIrr(center);
                    if (off.square().compare(QuadIrr(rho_sq)) >= 0) continue;
                    QuadIrr right = QuadIrr(center) + QuadIrr::sqrt_of(rho_sq);
                    if (right.compare(mu_v) > 0) continue;

                    if (s <= rb.bound) {
                        want.push_back(Chern2(s, x, y).to_string());
                        continue;
                    }
                    // Tail class: must be covered by the cutoff certificate.
                    if (Rat(3, 8) * Rat(s) * Rat(s) <= dis)
                        rep.fail("tail class escapes the discriminant cap at " + v.to_string());
                    QuadIrr upper = (QuadIrr(Rat(x)) + sqrt_delta) / Rat(s);
                    if (upper.compare(top) > 0)
                        rep.fail("tail class escapes the interval pin at " + v.to_string());
                    // Delta = 0 classes dodge the transcribed bound only at
                    // integer slope, which the window forbids here.
                    if (Rat(x * x) == Rat(2 * s) * y && (x % s == 0))
                        rep.fail("integer-slope tail class at " + v.to_string());
                }
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        if (got != want)
            rep.fail("box scan mismatch at " + v.to_string() + ": got " +
                     std::to_string(got.size()) + ", want " + std::to_string(want.size()));
    }
    return rep;
}

// (vii) covariance consistency of the D/E tables under twist (dual for D).
inline SuiteReport prop_table_covariance(int cases) {
    SuiteReport rep;
    Rng rng(17);
    while (rep.cases < cases) {
        long long r = rng.range(1, 4);
        long long c = rng.range(-6, 6);
        long long n = rng.range(-3, 3);
        ++rep.cases;
        Rat dr = finite_value(bound_D(r, c));
        if (finite_value(bound_D(r, -c)) != dr) rep.fail("D dual rule");
        if (finite_value(bound_D(r, c + n * r)) != dr + Rat(n * c) + Rat(n * n * r, 2))
            rep.fail("D twist rule");
        // a lattice-valid d at or below the cap
        Rat d = dr - Rat(rng.range(0, 5));
        Rat e = finite_value(bound_E(r, c, d));
        Rat d_tw = d + Rat(n * c) + Rat(n * n * r, 2);
        if (finite_value(bound_E(r, c + n * r, d_tw)) !=
            e + Rat(n) * d + Rat(n * n * c, 2) + Rat(n * n * n * r, 6))
            rep.fail("E twist rule");
    }
    return rep;
}

}  // namespace proptest
