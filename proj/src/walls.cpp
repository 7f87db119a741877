#include "tiltwall/walls.hpp"

namespace tiltwall {

bool is_semicircle(const WallLocus& w) { return std::holds_alternative<Semicircle>(w); }

const Semicircle& as_semicircle(const WallLocus& w) {
    if (const auto* s = std::get_if<Semicircle>(&w)) return *s;
    throw Error(Errc::unsupported_locus, "expected a semicircular wall");
}

std::string locus_to_string(const WallLocus& w) {
    if (const auto* s = std::get_if<Semicircle>(&w))
        return "semicircle(s=" + s->center.to_string() + ", rho2=" + s->radius_sq.to_string() + ")";
    if (const auto* v = std::get_if<VerticalWall>(&w))
        return "vertical(beta=" + v->beta.to_string() + ")";
    if (std::holds_alternative<EmptyWall>(w)) return "empty";
    return "everywhere";
}

WallLocus wall_between(const Chern2& v, const Chern2& w) {
    if (v.is_zero() || w.is_zero())
        throw Error(Errc::unsupported_locus, "wall_between: zero truncated character");
    Rat a = Rat(v.c * w.r) - Rat(w.c * v.r);
    Rat b = v.d * Rat(w.r) - w.d * Rat(v.r);
    Rat c = v.d * Rat(w.c) - w.d * Rat(v.c);
    if (!a.is_zero()) {
        Rat center = b / a;
        Rat radius_sq = center * center - Rat(2) * c / a;
        if (radius_sq.sign() <= 0) return EmptyWall{};
        return Semicircle{center, radius_sq};
    }
    if (!b.is_zero()) return VerticalWall{c / b};
    if (c.is_zero()) return EverywhereWall{};
    return EmptyWall{};
}

std::pair<QuadIrr, QuadIrr> beta_pm(const Chern2& v) {
    if (v.r.is_zero()) throw Error(Errc::zero_rank, "beta_pm: rank zero");
    Rat dis = v.delta();
    if (dis.sign() < 0) throw Error(Errc::negative_discriminant, "beta_pm: Delta < 0");
    QuadIrr root = QuadIrr::sqrt_of(dis);
    Rat slope(v.c, v.r);
    Rat inv_r = Rat(1) / Rat(v.r);
    QuadIrr lo = QuadIrr(slope) - root * inv_r.abs();
    QuadIrr hi = QuadIrr(slope) + root * inv_r.abs();
    return {lo, hi};
}

std::pair<QuadIrr, QuadIrr> beta_pm(const ChernChar& v) { return beta_pm(Chern2(v)); }

WallLocus q_wall(const ChernChar& v) {
    Rat dis = delta(v);
    if (dis.sign() <= 0)
        throw Error(Errc::degenerate_discriminant, "q_wall: requires Delta > 0");
    Chern2 lead(v);
    Chern2 shifted(v.c(), v.d2() /* = 2d */, Rat(v.e6(), BigInt(2)) /* 3e */);
    return wall_between(lead, shifted);
}

bool crosses_line(const WallLocus& w, const QuadIrr& beta0) {
    if (std::holds_alternative<EmptyWall>(w)) return false;
    if (std::holds_alternative<EverywhereWall>(w)) return true;
    if (const auto* vert = std::get_if<VerticalWall>(&w))
        return beta0.compare(QuadIrr(vert->beta)) == 0;
    const auto& s = std::get<Semicircle>(w);
    QuadIrr offset = beta0 - QuadIrr(s.center);
    return offset.square().compare(QuadIrr(s.radius_sq)) < 0;
}

PointPosition point_position(const WallLocus& w, const Rat& alpha_sq, const Rat& beta) {
    if (const auto* vert = std::get_if<VerticalWall>(&w))
        return beta == vert->beta ? PointPosition::on : PointPosition::outside;
    const auto& s = as_semicircle(w);
    Rat off = beta - s.center;
    int sign = (alpha_sq + off * off - s.radius_sq).sign();
    if (sign < 0) return PointPosition::inside;
    if (sign == 0) return PointPosition::on;
    return PointPosition::outside;
}

bool left_of_vertical(const WallLocus& w, const Chern2& v) {
    if (v.r.is_zero()) throw Error(Errc::zero_rank, "left_of_vertical: rank zero");
    const auto& s = as_semicircle(w);
    QuadIrr right_end = QuadIrr(s.center) + QuadIrr::sqrt_of(s.radius_sq);
    return right_end.compare(QuadIrr(Rat(v.c, v.r))) <= 0;
}

NestRel nesting_compare(const WallLocus& w1, const WallLocus& w2) {
    const auto& a = as_semicircle(w1);
    const auto& b = as_semicircle(w2);
    if (a == b) return NestRel::equal;
    Rat dist_sq = (a.center - b.center) * (a.center - b.center);
    // Let T = dist^2 - rho1^2 - rho2^2.  Then
    //   dist > rho1 + rho2  <=>  T > 0 and T^2 > 4 rho1^2 rho2^2   (disjoint)
    //   dist < |rho1 - rho2| <=> T < 0 and T^2 > 4 rho1^2 rho2^2   (nested)
    // with tangency at T^2 = 4 rho1^2 rho2^2; tangent circles share no point
    // with alpha > 0, so internal tangency counts as nested, external as
    // disjoint.
    Rat t = dist_sq - a.radius_sq - b.radius_sq;
    int cmp = (t * t).compare(Rat(4) * a.radius_sq * b.radius_sq);
    if (cmp >= 0) {
        if (t.sign() > 0) return NestRel::disjoint;
        return a.radius_sq < b.radius_sq ? NestRel::first_inside_second
                                         : NestRel::second_inside_first;
    }
    return NestRel::crossing;
}

}  // namespace tiltwall
