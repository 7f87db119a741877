#pragma once

#include <utility>
#include <variant>

#include "tiltwall/chern.hpp"
#include "tiltwall/quadirr.hpp"

namespace tiltwall {

// Truncated character (ch0, ch1, ch2); all the wall geometry lives here.
struct Chern2 {
    BigInt r, c;
    Rat d;

    Chern2() = default;
    Chern2(BigInt r_, BigInt c_, Rat d_) : r(std::move(r_)), c(std::move(c_)), d(std::move(d_)) {}
    Chern2(long long r_, long long c_, Rat d_) : r(r_), c(c_), d(std::move(d_)) {}
    explicit Chern2(const ChernChar& v) : r(v.r()), c(v.c()), d(v.d()) {}

    bool operator==(const Chern2& o) const { return r == o.r && c == o.c && d == o.d; }
    bool is_zero() const { return r.is_zero() && c.is_zero() && d.is_zero(); }
    Chern2 operator-() const { return Chern2(-r, -c, -d); }
    Chern2 operator-(const Chern2& o) const { return Chern2(r - o.r, c - o.c, d - o.d); }

    Rat delta() const { return Rat(c) * Rat(c) - Rat(2) * Rat(r) * d; }
    std::string to_string() const {
        return "(" + r.to_string() + "," + c.to_string() + "," + d.to_string() + ")";
    }
};

struct Semicircle {
    Rat center;     // s, on the beta axis
    Rat radius_sq;  // rho^2 > 0
    bool operator==(const Semicircle& o) const {
        return center == o.center && radius_sq == o.radius_sq;
    }
};
struct VerticalWall {
    Rat beta;
    bool operator==(const VerticalWall& o) const { return beta == o.beta; }
};
struct EmptyWall {
    bool operator==(const EmptyWall&) const { return true; }
};
struct EverywhereWall {
    bool operator==(const EverywhereWall&) const { return true; }
};

using WallLocus = std::variant<Semicircle, VerticalWall, EmptyWall, EverywhereWall>;

bool is_semicircle(const WallLocus& w);
const Semicircle& as_semicircle(const WallLocus& w);  // Error(unsupported_locus) otherwise
std::string locus_to_string(const WallLocus& w);

// Locus of nu(v) = nu(w).  With A = c s - x r, B = d s - y r, C = d x - y c
// the equation is (A/2)(alpha^2 + beta^2) - B beta + C = 0.
WallLocus wall_between(const Chern2& v, const Chern2& w);

// Roots of ch2^beta(v) = 0, i.e. (c -+ sqrt(Delta))/r, ordered.
std::pair<QuadIrr, QuadIrr> beta_pm(const Chern2& v);
std::pair<QuadIrr, QuadIrr> beta_pm(const ChernChar& v);

// The wall W((r,c,d),(c,2d,3e)) carrying Q_{alpha,beta}(v) = 0; requires
// Delta(v) > 0.  Interior points have Q < 0.
WallLocus q_wall(const ChernChar& v);

// Does the wall meet the open ray beta = beta0, alpha > 0?
bool crosses_line(const WallLocus& w, const QuadIrr& beta0);

enum class PointPosition { inside, on, outside };
PointPosition point_position(const WallLocus& w, const Rat& alpha_sq, const Rat& beta);

// Whole semicircle at beta <= mu(v); tangency counts as left.
bool left_of_vertical(const WallLocus& w, const Chern2& v);

enum class NestRel { equal, first_inside_second, second_inside_first, disjoint, crossing };
NestRel nesting_compare(const WallLocus& w1, const WallLocus& w2);

}  // namespace tiltwall
