#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tiltwall/walls.hpp"

namespace tiltwall {

struct BoundFinite {
    Rat value;
};
struct BoundInfinity {};
struct BoundUnknown {
    std::string reason;
};
using BoundValue = std::variant<BoundFinite, BoundInfinity, BoundUnknown>;

bool is_finite(const BoundValue& b);
const Rat& finite_value(const BoundValue& b);  // requires is_finite
std::string bound_to_string(const BoundValue& b);

// Sharp upper bound for ch2 of slope-semistable sheaves with ch_{<=1} = (r, c);
// +infinity at rank zero, Unknown for rank >= 5.
BoundValue bound_D(const BigInt& r, const BigInt& c);
BoundValue bound_D(long long r, long long c);

// Sharp upper bound for ch3 of 2-Gieseker-semistable sheaves with
// ch_{<=2} = (r, c, d) (Gieseker for (0,0,d)); Unknown for rank >= 5.
BoundValue bound_E(const BigInt& r, const BigInt& c, const Rat& d);
BoundValue bound_E(long long r, long long c, const Rat& d);

// (f/2)(c - f - 1 + f/c) for 0 <= f < c.
Rat epsilon_correction(const BigInt& c, const BigInt& f);
// Solves d + c^2/2 == -f (mod c) with f in [0, c).
BigInt rank_zero_f(const BigInt& c, const Rat& d);

// Max ch3 of a rank-one object (1, 0, d), d <= -3, semistable on a numerical
// wall with center s < 0.  Piecewise in s; branch one is the global bound.
Rat rank1_center_bound(const BigInt& d, const Rat& s);

// Max ch3 for tilt-semistable (-1, 0, d, e), d >= 0.
Rat negative_rank1_bound(const BigInt& d);

// Max ch3 among tilt-semistable objects with the given truncation, assembled
// from the in-scope bounds.  A rank-one factor sitting on a wall with known
// center is sharpened by rank1_center_bound; negative ranks go through the
// derived dual.  Unknown when no table covers the shape.
BoundValue max_ch3(const Chern2& w, const std::optional<Rat>& wall_center = std::nullopt);

struct FactorShape {
    enum class Kind {
        line_bundle,        // O(n)^mult
        line_bundle_shift,  // O(n)^mult [1]
        plane_torsion,      // O_V(m), ch = (0, 1, m - 1/2, m^2/2 - m/2 + 1/6)
        ideal_plane_curve,  // I_C(t), C plane curve of degree k
        dual_ideal_plane_curve,
        twisted_tangent,    // T(-2)
        twisted_cotangent,  // Omega(1)
        extremal_class,     // explicit character
    };

    Kind kind;
    BigInt n;        // line-bundle twist / plane-torsion m / curve twist t
    long long mult = 1;
    BigInt deg;      // plane-curve degree
    std::optional<ChernChar> cls;

    static FactorShape line_bundle(const BigInt& n, long long mult = 1);
    static FactorShape line_bundle(long long n, long long mult = 1);
    static FactorShape line_bundle_shift(const BigInt& n, long long mult = 1);
    static FactorShape line_bundle_shift(long long n, long long mult = 1);
    static FactorShape plane_torsion(const BigInt& m);
    static FactorShape ideal_plane_curve(const BigInt& deg, const BigInt& twist);
    static FactorShape dual_ideal_plane_curve(const BigInt& deg, const BigInt& twist);
    static FactorShape twisted_tangent();
    static FactorShape twisted_cotangent();
    static FactorShape extremal_class(const ChernChar& v);

    ChernChar chern() const;
    std::string to_string() const;
};

struct ExtremalWall {
    WallLocus locus;
    FactorShape sub, quot;
};

struct ExtremalWallEntry {
    Chern2 key;  // normalized representative (c reduced into (-r, 0] for r >= 1)
    Rat e_max;
    std::vector<ExtremalWall> walls;  // largest first; empty = stable everywhere left
};

// Wall/factor data attained at e = E(r,c,d), as far as classified; nullopt
// where the classification is out of scope (general rank two, rank >= 5).
std::optional<ExtremalWallEntry> extremal_walls(const BigInt& r, const BigInt& c, const Rat& d);
std::optional<ExtremalWallEntry> extremal_walls(long long r, long long c, const Rat& d);

// true/false where the tables decide; nullopt beyond rank four.
std::optional<bool> exists_2gieseker(const ChernChar& v);

// (c0, n) with c0 = c + n*r in (-r, 0]; requires r >= 1.
std::pair<BigInt, BigInt> normalize_c(const BigInt& r, const BigInt& c);

}  // namespace tiltwall
