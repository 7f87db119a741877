#include "tiltwall/bounds.hpp"

#include <algorithm>

namespace tiltwall {

namespace {

Rat half(long long n) { return Rat(n, 2); }

ChernChar scale(const ChernChar& v, const BigInt& m) {
    return ChernChar::make(m * v.r(), m * v.c(), Rat(m) * v.d(), Rat(m) * v.e());
}

ChernChar tangent_twisted() {
    // T(-2) from the Euler sequence: 4 ch(O(-1)) - ch(O(-2)).
    return scale(line_bundle_char(-1), BigInt(4)) - line_bundle_char(-2);
}

ChernChar cotangent_twisted() {
    // Omega(1): 4 ch(O(-1))^dual trickery is overkill; it is (3,-1,-1/2,-1/6).
    return ChernChar::make(3, -1, Rat(-1, 2), Rat(-1, 6));
}

}  // namespace

bool is_finite(const BoundValue& b) { return std::holds_alternative<BoundFinite>(b); }

const Rat& finite_value(const BoundValue& b) { return std::get<BoundFinite>(b).value; }

std::string bound_to_string(const BoundValue& b) {
    if (const auto* f = std::get_if<BoundFinite>(&b)) return f->value.to_string();
    if (std::holds_alternative<BoundInfinity>(b)) return "infinity";
    return "unknown(" + std::get<BoundUnknown>(b).reason + ")";
}

std::pair<BigInt, BigInt> normalize_c(const BigInt& r, const BigInt& c) {
    BigInt q, rem;
    BigInt::divmod_floor(-c, r, q, rem);  // rem in [0, r)
    BigInt c0 = -rem;
    BigInt n = (c0 - c) / r;
    return {c0, n};
}

BoundValue bound_D(const BigInt& r, const BigInt& c) {
    if (r.is_negative() || (r.is_zero() && c.is_negative()))
        throw Error(Errc::not_a_sheaf_class,
                    "bound_D: (" + r.to_string() + "," + c.to_string() + ") not in CH_{<=1}");
    if (r.is_zero()) return BoundInfinity{};
    if (r > BigInt(4)) return BoundUnknown{"rank >= 5 out of scope"};

    auto [c0, n] = normalize_c(r, c);
    long long rr = r.to_longlong();
    long long cc = c0.to_longlong();  // in (-r, 0]
    Rat d0;
    switch (rr) {
        case 1: d0 = Rat(0); break;
        case 2: d0 = (cc == 0) ? Rat(0) : half(-1); break;
        case 3: d0 = (cc == -1) ? half(-1) : Rat(0); break;
        default:  // 4
            if (cc == 0) d0 = Rat(0);
            else if (cc == -1) d0 = half(-3);
            else if (cc == -2) d0 = Rat(-1);
            else d0 = half(-1);
    }
    // D(r, c + n r) = D(r, c) + n c + n^2 r / 2
    Rat corr = Rat(n) * Rat(c) + Rat(n * n) * Rat(r) / Rat(2);
    return BoundFinite{d0 - corr};
}

BoundValue bound_D(long long r, long long c) { return bound_D(BigInt(r), BigInt(c)); }

Rat epsilon_correction(const BigInt& c, const BigInt& f) {
    if (c.sign() <= 0 || f.is_negative() || f >= c)
        throw Error(Errc::out_of_range, "epsilon requires 0 <= f < c");
    Rat fc = Rat(f);
    return fc / Rat(2) * (Rat(c) - fc - Rat(1) + fc / Rat(c));
}

BigInt rank_zero_f(const BigInt& c, const Rat& d) {
    Rat t = d + Rat(c * c, BigInt(2));
    if (!t.is_integer())
        throw Error(Errc::lattice_violation, "rank_zero_f: d + c^2/2 not an integer");
    BigInt q, rem;
    BigInt::divmod_floor(-t.num(), c, q, rem);
    return rem;  // in [0, c)
}

namespace {

// The residue table of E on normalized keys; d0 <= D(r, c0) assumed.
Rat e_table(long long r, long long c0, const Rat& d0) {
    Rat d = d0, d2 = d0 * d0;
    switch (r) {
        case 1:
            return d2 / Rat(2) - d / Rat(2);
        case 2:
            if (c0 == -1) return d2 / Rat(2) - d + Rat(5, 24);
            if (d == Rat(0) || d == Rat(-1)) return Rat(0);
            return d2 / Rat(2) + d / Rat(2) + Rat(1);
        case 3:
            if (c0 == -2) return d2 / Rat(2) - Rat(3) * d / Rat(2) + Rat(2, 3);
            if (c0 == -1) {
                if (d == Rat(-1, 2)) return Rat(-1, 6);
                return d2 / Rat(2) + Rat(17, 24);
            }
            if (d == Rat(0)) return Rat(0);
            if (d == Rat(-1)) return Rat(-1);
            return d2 / Rat(2) + d / Rat(2);
        default:  // 4
            if (c0 == -3) return d2 / Rat(2) - Rat(2) * d + Rat(11, 8);
            if (c0 == -2) return d2 / Rat(2) - d / Rat(2) + Rat(2, 3);
            if (c0 == -1) return d2 / Rat(2) - Rat(7, 24);
            if (d == Rat(0) || d == Rat(-2)) return Rat(0);
            if (d == Rat(-1)) return Rat(-2);
            return d2 / Rat(2) + Rat(3) * d / Rat(2) + Rat(2);
    }
}

// E(r, c, d) = E(r, c0, d0) - (n d + n^2 c / 2 + n^3 r / 6)
Rat untwist_e(const Rat& e0, const BigInt& n, const BigInt& r, const BigInt& c, const Rat& d) {
    return e0 - (Rat(n) * d + Rat(n * n) * Rat(c) / Rat(2) + Rat(n * n * n) * Rat(r) / Rat(6));
}

}  // namespace

BoundValue bound_E(const BigInt& r, const BigInt& c, const Rat& d) {
    MembershipReport rep = classify_membership(Rat(r), Rat(c), d);
    if (!rep.in_ch_le2)
        throw Error(Errc::not_a_sheaf_class, "bound_E: (" + r.to_string() + "," + c.to_string() +
                                                 "," + d.to_string() + ") not in CH_{<=2}");
    if (r.is_zero()) {
        if (c.is_zero()) return BoundInfinity{};
        BigInt f = rank_zero_f(c, d);
        Rat e = Rat(c * c * c, BigInt(24)) + d * d / (Rat(2) * Rat(c)) - epsilon_correction(c, f);
        return BoundFinite{e};
    }
    if (r > BigInt(4)) return BoundUnknown{"rank >= 5 out of scope"};

    BoundValue dcap = bound_D(r, c);
    if (d > finite_value(dcap))
        throw Error(Errc::above_d_bound, "bound_E: ch2 exceeds D(" + r.to_string() + "," +
                                             c.to_string() + ") = " + finite_value(dcap).to_string());
    auto [c0, n] = normalize_c(r, c);
    Rat d0 = d + Rat(n) * Rat(c) + Rat(n * n) * Rat(r) / Rat(2);
    Rat e0 = e_table(r.to_longlong(), c0.to_longlong(), d0);
    return BoundFinite{untwist_e(e0, n, r, c, d)};
}

BoundValue bound_E(long long r, long long c, const Rat& d) {
    return bound_E(BigInt(r), BigInt(c), d);
}

Rat rank1_center_bound(const BigInt& d, const Rat& s) {
    if (d > BigInt(-3))
        throw Error(Errc::out_of_range, "rank1_center_bound: requires d <= -3");
    if (s.sign() >= 0)
        throw Error(Errc::out_of_range, "rank1_center_bound: requires center s < 0");
    Rat f = d.is_even() ? Rat(0) : Rat(1);
    Rat dr(d), d2 = dr * dr;
    Rat break_lo = dr - Rat(1, 2);
    Rat break_hi = dr / Rat(2) + (f - Rat(3)) / Rat(2);
    if (s <= break_lo) return d2 / Rat(2) - dr / Rat(2);
    if (s <= break_hi)
        return d2 / Rat(2) - dr * s + s * s - Rat(2) * dr + Rat(2) * s + Rat(3, 4);
    return d2 / Rat(4) - dr - f / Rat(4);
}

Rat negative_rank1_bound(const BigInt& d) {
    if (d.is_negative())
        throw Error(Errc::out_of_range, "negative_rank1_bound: requires d >= 0");
    Rat dr(d);
    return dr * dr / Rat(2) + dr / Rat(2);
}

BoundValue max_ch3(const Chern2& w, const std::optional<Rat>& wall_center) {
    const BigInt& r = w.r;
    const BigInt& c = w.c;
    const Rat& d = w.d;
    if (w.delta().sign() < 0) return BoundUnknown{"Bogomolov violated"};

    if (r.is_zero()) {
        if (c.sign() < 0) return BoundUnknown{"rank zero with negative ch1"};
        if (c.is_zero()) return d.sign() >= 0 ? BoundValue(BoundInfinity{})
                                              : BoundValue(BoundUnknown{"negative ch2"});
        return bound_E(r, c, d);
    }

    // Characters proportional to a line-bundle power are pinned by the
    // generalized Bogomolov inequality at any point of semistability.
    if ((c % r).is_zero()) {
        BigInt k = c / r;
        if (d == Rat(c * k, BigInt(2))) return BoundFinite{Rat(r * k * k * k, BigInt(6))};
    }

    if (r.sign() > 0) {
        if (r > BigInt(4)) return BoundUnknown{"rank >= 5 out of scope"};
        BoundValue dcap = bound_D(r, c);
        if (d > finite_value(dcap)) return BoundUnknown{"above the sharp ch2 bound"};
        Rat global = finite_value(bound_E(r, c, d));
        if (r == BigInt(1) && wall_center) {
            auto [c0, n] = normalize_c(r, c);
            Rat d0 = d + Rat(n) * Rat(c) + Rat(n * n) / Rat(2);
            Rat s0 = *wall_center + Rat(n);
            if (d0 <= Rat(-3) && s0.sign() < 0) {
                Rat e0 = rank1_center_bound(d0.num(), s0);
                Rat sharpened = untwist_e(e0, n, r, c, d);
                return BoundFinite{sharpened < global ? sharpened : global};
            }
        }
        return BoundFinite{global};
    }

    if (r == BigInt(-1)) {
        // Through the derived dual: twist to (-1, 0, d0) with d0 = d + c^2/2.
        BigInt n = c;
        Rat d0 = d + Rat(c * c, BigInt(2));
        if (d0.sign() < 0) return BoundUnknown{"dual out of range"};
        Rat e0 = negative_rank1_bound(d0.num());
        return BoundFinite{untwist_e(e0, n, r, c, d)};
    }
    return BoundUnknown{"negative rank out of scope"};
}

FactorShape FactorShape::line_bundle(const BigInt& n, long long mult) {
    FactorShape s;
    s.kind = Kind::line_bundle;
    s.n = n;
    s.mult = mult;
    return s;
}
FactorShape FactorShape::line_bundle(long long n, long long mult) {
    return line_bundle(BigInt(n), mult);
}
FactorShape FactorShape::line_bundle_shift(const BigInt& n, long long mult) {
    FactorShape s;
    s.kind = Kind::line_bundle_shift;
    s.n = n;
    s.mult = mult;
    return s;
}
FactorShape FactorShape::line_bundle_shift(long long n, long long mult) {
    return line_bundle_shift(BigInt(n), mult);
}
FactorShape FactorShape::plane_torsion(const BigInt& m) {
    FactorShape s;
    s.kind = Kind::plane_torsion;
    s.n = m;
    return s;
}
FactorShape FactorShape::ideal_plane_curve(const BigInt& deg, const BigInt& twist) {
    FactorShape s;
    s.kind = Kind::ideal_plane_curve;
    s.deg = deg;
    s.n = twist;
    return s;
}
FactorShape FactorShape::dual_ideal_plane_curve(const BigInt& deg, const BigInt& twist) {
    FactorShape s;
    s.kind = Kind::dual_ideal_plane_curve;
    s.deg = deg;
    s.n = twist;
    return s;
}
FactorShape FactorShape::twisted_tangent() {
    FactorShape s;
    s.kind = Kind::twisted_tangent;
    return s;
}
FactorShape FactorShape::twisted_cotangent() {
    FactorShape s;
    s.kind = Kind::twisted_cotangent;
    return s;
}
FactorShape FactorShape::extremal_class(const ChernChar& v) {
    FactorShape s;
    s.kind = Kind::extremal_class;
    s.cls = v;
    return s;
}

ChernChar FactorShape::chern() const {
    switch (kind) {
        case Kind::line_bundle:
            return scale(line_bundle_char(n), BigInt(mult));
        case Kind::line_bundle_shift:
            return -scale(line_bundle_char(n), BigInt(mult));
        case Kind::plane_torsion: {
            Rat m(n);
            return ChernChar::make(BigInt(0), BigInt(1), m - Rat(1, 2),
                                   m * m / Rat(2) - m / Rat(2) + Rat(1, 6));
        }
        case Kind::ideal_plane_curve: {
            Rat k(deg);
            ChernChar ic = ChernChar::make(BigInt(1), BigInt(0), -k, (k * k + k) / Rat(2));
            return twist(ic, n);
        }
        case Kind::dual_ideal_plane_curve: {
            Rat k(deg);
            ChernChar ic = ChernChar::make(BigInt(1), BigInt(0), -k, (k * k + k) / Rat(2));
            return twist(dual(ic).shifted, n);
        }
        case Kind::twisted_tangent:
            return tangent_twisted();
        case Kind::twisted_cotangent:
            return cotangent_twisted();
        case Kind::extremal_class:
            return *cls;
    }
    throw std::logic_error("FactorShape: bad kind");
}

std::string FactorShape::to_string() const {
    switch (kind) {
        case Kind::line_bundle:
            return "O(" + n.to_string() + ")^" + std::to_string(mult);
        case Kind::line_bundle_shift:
            return "O(" + n.to_string() + ")^" + std::to_string(mult) + "[1]";
        case Kind::plane_torsion:
            return "O_V(" + n.to_string() + ")";
        case Kind::ideal_plane_curve:
            return "I_C(deg " + deg.to_string() + ")(" + n.to_string() + ")";
        case Kind::dual_ideal_plane_curve:
            return "D(I_C(deg " + deg.to_string() + "))(" + n.to_string() + ")";
        case Kind::twisted_tangent:
            return "T(-2)";
        case Kind::twisted_cotangent:
            return "Omega(1)";
        case Kind::extremal_class:
            return "class(" + cls->to_string() + ")";
    }
    return "?";
}

namespace {

ExtremalWall make_wall(const Chern2& key, FactorShape sub, FactorShape quot) {
    WallLocus locus = wall_between(key, Chern2(sub.chern()));
    return {locus, std::move(sub), std::move(quot)};
}

void sort_largest_first(std::vector<ExtremalWall>& walls) {
    std::stable_sort(walls.begin(), walls.end(), [](const ExtremalWall& a, const ExtremalWall& b) {
        return as_semicircle(a.locus).radius_sq > as_semicircle(b.locus).radius_sq;
    });
}

std::optional<ExtremalWallEntry> rank_zero_entry(const BigInt& c, const Rat& d) {
    ExtremalWallEntry entry;
    entry.key = Chern2(BigInt(0), c, d);
    entry.e_max = finite_value(bound_E(BigInt(0), c, d));
    using FS = FactorShape;
    if (c == BigInt(1)) {
        BigInt t_hi = (d + Rat(1, 2)).num();
        BigInt t_lo = (d - Rat(1, 2)).num();
        entry.walls.push_back(
            make_wall(entry.key, FS::line_bundle(t_hi), FS::line_bundle_shift(t_lo)));
        return entry;
    }
    BigInt f = rank_zero_f(c, d);
    if (c == BigInt(2) && f == BigInt(1)) {
        BigInt t_hi = ((d + Rat(1)) / Rat(2)).num();
        BigInt t_lo = ((d - Rat(1)) / Rat(2)).num();
        entry.walls.push_back(
            make_wall(entry.key, FS::line_bundle(t_hi, 2), FS::line_bundle_shift(t_lo, 2)));
        return entry;
    }
    Rat t1r = (d + Rat(c * c, BigInt(2)) + Rat(f)) / Rat(c);
    BigInt t1 = t1r.num();  // integral by the congruence defining f
    BigInt t2 = t1 - c;
    BigInt two_f = BigInt(2) * f;
    if (two_f <= c) {
        FS sub = f.is_zero() ? FS::line_bundle(t1) : FS::ideal_plane_curve(f, t1);
        entry.walls.push_back(make_wall(entry.key, sub, FS::line_bundle_shift(t2)));
    }
    if (two_f >= c && c >= BigInt(3)) {
        entry.walls.push_back(make_wall(entry.key, FS::line_bundle(t1 - BigInt(1)),
                                        FS::dual_ideal_plane_curve(c - f, t2 - BigInt(1))));
    }
    return entry;
}

}  // namespace

std::optional<ExtremalWallEntry> extremal_walls(const BigInt& r, const BigInt& c, const Rat& d) {
    using FS = FactorShape;
    if (r.is_zero()) {
        if (c.is_zero()) return std::nullopt;
        BoundValue e = bound_E(r, c, d);  // validates membership
        if (!is_finite(e)) return std::nullopt;
        return rank_zero_entry(c, d);
    }
    if (r.sign() < 0 || r > BigInt(4)) return std::nullopt;

    BoundValue e = bound_E(r, c, d);  // may throw AboveDBound / NotASheafClass
    if (!is_finite(e)) return std::nullopt;

    auto [c0, n] = normalize_c(r, c);
    Rat d0 = d + Rat(n) * Rat(c) + Rat(n * n) * Rat(r) / Rat(2);
    ExtremalWallEntry entry;
    entry.key = Chern2(r, c0, d0);
    entry.e_max = finite_value(bound_E(r, c0, d0));
    long long rr = r.to_longlong();
    long long cc = c0.to_longlong();
    const Chern2& key = entry.key;
    auto& walls = entry.walls;

    if (rr == 1) {
        if (d0.sign() < 0)
            walls.push_back(make_wall(key, FS::line_bundle(-1), FS::plane_torsion(d0.num())));
    } else if (rr == 2) {
        if (cc == -1 && d0 == Rat(-1, 2))
            walls.push_back(make_wall(key, FS::line_bundle(-1, 3), FS::line_bundle_shift(-2, 1)));
        else
            return std::nullopt;  // general rank two defers to the literature
    } else if (rr == 3) {
        ChernChar f_class = ChernChar::make(2, -1, Rat(-1, 2), Rat(5, 6));
        if (cc == -2) {
            if (d0.is_zero())
                walls.push_back(make_wall(key, FS::line_bundle(-1, 4), FS::line_bundle_shift(-2, 1)));
            else
                walls.push_back(make_wall(key, FS::line_bundle(-1, 3),
                                          FS::plane_torsion((d0 - Rat(1)).num())));
        } else if (cc == -1) {
            if (d0 == Rat(-3, 2)) {
                walls.push_back(make_wall(key, FS::line_bundle(-1, 5), FS::line_bundle_shift(-2, 2)));
            } else if (d0 == Rat(-5, 2)) {
                walls.push_back(make_wall(key, FS::extremal_class(f_class),
                                          FS::ideal_plane_curve(BigInt(2), BigInt(0))));
                walls.push_back(make_wall(key, FS::twisted_tangent(), FS::plane_torsion(BigInt(-2))));
                walls.push_back(make_wall(key, FS::line_bundle(-1, 4), FS::line_bundle_shift(-3, 1)));
            } else if (d0 <= Rat(-7, 2)) {
                walls.push_back(make_wall(key, FS::extremal_class(f_class),
                                          FS::ideal_plane_curve((-d0 - Rat(1, 2)).num(), BigInt(0))));
                walls.push_back(make_wall(key, FS::twisted_tangent(),
                                          FS::plane_torsion((d0 + Rat(1, 2)).num())));
            }
            // d0 = -1/2 is Omega(1): no wall left of the vertical one.
        } else {
            if (d0 == Rat(-2)) {
                walls.push_back(make_wall(key, FS::twisted_cotangent(), FS::plane_torsion(BigInt(-1))));
            } else if (d0 == Rat(-3)) {
                walls.push_back(make_wall(key, FS::twisted_cotangent(), FS::plane_torsion(BigInt(-2))));
                walls.push_back(make_wall(key, FS::line_bundle(-1, 6), FS::line_bundle_shift(-2, 3)));
            } else if (d0 <= Rat(-4)) {
                walls.push_back(make_wall(key, FS::twisted_cotangent(),
                                          FS::plane_torsion((d0 + Rat(1)).num())));
            }
        }
    } else {
        if (cc == -3) {
            walls.push_back(
                make_wall(key, FS::line_bundle(-1, 4), FS::plane_torsion((d0 - Rat(3, 2)).num())));
        } else if (cc == -2) {
            if (d0 == Rat(-1)) {
                walls.push_back(make_wall(key, FS::line_bundle(-1, 6), FS::line_bundle_shift(-2, 2)));
            } else if (d0 == Rat(-2)) {
                walls.push_back(make_wall(key, FS::twisted_tangent(),
                                          FS::ideal_plane_curve(BigInt(2), BigInt(0))));
                walls.push_back(make_wall(key, FS::line_bundle(-1, 5), FS::line_bundle_shift(-3, 1)));
            } else {
                walls.push_back(make_wall(key, FS::twisted_tangent(),
                                          FS::ideal_plane_curve((-d0).num(), BigInt(0))));
            }
        } else if (cc == -1) {
            if (d0 == Rat(-3, 2)) {
                walls.push_back(make_wall(key, FS::twisted_cotangent(),
                                          FS::ideal_plane_curve(BigInt(1), BigInt(0))));
            } else if (d0 == Rat(-5, 2)) {
                walls.push_back(make_wall(key, FS::twisted_cotangent(),
                                          FS::ideal_plane_curve(BigInt(2), BigInt(0))));
                walls.push_back(make_wall(key, FS::line_bundle(-1, 7), FS::line_bundle_shift(-2, 3)));
            } else {
                walls.push_back(make_wall(key, FS::twisted_cotangent(),
                                          FS::ideal_plane_curve((-d0 - Rat(1, 2)).num(), BigInt(0))));
            }
        } else {
            if (d0 == Rat(-3)) {
                walls.push_back(make_wall(
                    key, FS::twisted_cotangent(),
                    FS::extremal_class(ChernChar::make(1, 1, Rat(-5, 2), Rat(13, 6)))));
            } else if (d0 == Rat(-4)) {
                walls.push_back(make_wall(
                    key, FS::twisted_cotangent(),
                    FS::extremal_class(ChernChar::make(1, 1, Rat(-7, 2), Rat(25, 6)))));
                walls.push_back(make_wall(key, FS::line_bundle(-1, 8), FS::line_bundle_shift(-2, 4)));
            } else if (d0 <= Rat(-5)) {
                walls.push_back(make_wall(
                    key, FS::extremal_class(ChernChar::make(4, -1, Rat(-3, 2), Rat(5, 6))),
                    FS::plane_torsion((d0 + Rat(2)).num())));
            }
            // d0 in {0, -1, -2}: stable left of the vertical wall, no walls.
        }
    }
    sort_largest_first(walls);
    return entry;
}

std::optional<ExtremalWallEntry> extremal_walls(long long r, long long c, const Rat& d) {
    return extremal_walls(BigInt(r), BigInt(c), d);
}

std::optional<bool> exists_2gieseker(const ChernChar& v) {
    if (v.r().sign() < 0) return false;
    if (v.r() > BigInt(4)) return std::nullopt;
    if (!classify_membership(v).in_ch) return false;
    if (v.r().is_zero() && v.c().is_zero()) return true;
    BoundValue dcap = bound_D(v.r(), v.c());
    if (is_finite(dcap) && v.d() > finite_value(dcap)) return false;
    BoundValue ecap = bound_E(v.r(), v.c(), v.d());
    if (std::holds_alternative<BoundInfinity>(ecap)) return true;
    return v.e() <= finite_value(ecap);
}

}  // namespace tiltwall
