#include "tiltwall/destab.hpp"

#include <algorithm>

namespace tiltwall {

namespace {

constexpr long long kRankSearchCap = 4096;

QuadIrr twisted_ch1(const Chern2& v, const QuadIrr& beta) {
    return QuadIrr(Rat(v.c)) - beta * Rat(v.r);
}

QuadIrr twisted_ch2(const Chern2& v, const QuadIrr& beta) {
    return QuadIrr(v.d) - beta * Rat(v.c) + beta.square() * Rat(v.r, BigInt(2));
}

// Largest integer strictly below x.
BigInt strict_floor(const QuadIrr& x) {
    BigInt f = x.floor();
    return x.is_integer() ? f - BigInt(1) : f;
}

struct Rays {
    std::vector<QuadIrr> lines;           // crossing rays
    std::optional<Semicircle> larger;     // containment reference
    bool larger_inclusive = false;
    std::optional<Rat> center_cap;
    bool left_of_vertical = false;
};

Rays collect_rays(const Chern2& v, const RegionSpec& region) {
    Rays rays;
    for (const auto& c : region.constraints) {
        if (const auto* line = std::get_if<CrossLine>(&c)) {
            rays.lines.push_back(line->beta);
        } else if (std::holds_alternative<LeftOfVerticalRegion>(c)) {
            if (v.r.is_zero())
                throw Error(Errc::zero_rank, "left-of-vertical region needs positive rank");
            rays.lines.push_back(beta_pm(v).first);
            rays.left_of_vertical = true;
        } else if (const auto* larger = std::get_if<LargerThanRegion>(&c)) {
            rays.lines.push_back(QuadIrr(larger->wall.center));
            if (rays.larger)
                throw Error(Errc::unbounded_region, "at most one containment constraint");
            rays.larger = larger->wall;
            rays.larger_inclusive = larger->inclusive;
        } else {
            const auto& cap = std::get<CenterAtMost>(c);
            if (rays.center_cap)
                rays.center_cap = std::min(*rays.center_cap, cap.bound);
            else
                rays.center_cap = cap.bound;
        }
    }
    if (rays.lines.empty())
        throw Error(Errc::unbounded_region, "region admits no crossing line");
    return rays;
}

bool region_satisfied(const WallLocus& locus, const Chern2& v, const Rays& rays) {
    if (!is_semicircle(locus)) return false;
    for (const auto& beta0 : rays.lines)
        if (!crosses_line(locus, beta0)) return false;
    if (rays.left_of_vertical && !left_of_vertical(locus, v)) return false;
    if (rays.larger) {
        NestRel rel = nesting_compare(locus, WallLocus(*rays.larger));
        bool ok = rel == NestRel::second_inside_first ||
                  (rays.larger_inclusive && rel == NestRel::equal);
        if (!ok) return false;
    }
    if (rays.center_cap && as_semicircle(locus).center > *rays.center_cap) return false;
    return true;
}

}  // namespace

RegionSpec RegionSpec::left_of_vertical() {
    RegionSpec r;
    r.constraints.push_back(LeftOfVerticalRegion{});
    return r;
}

RegionSpec RegionSpec::crossing(const QuadIrr& beta0) {
    RegionSpec r;
    r.constraints.push_back(CrossLine{beta0});
    return r;
}

RegionSpec RegionSpec::larger_than(const Semicircle& wall, bool inclusive) {
    RegionSpec r;
    r.constraints.push_back(LargerThanRegion{wall, inclusive});
    return r;
}

RegionSpec& RegionSpec::cross(const QuadIrr& beta0) {
    constraints.push_back(CrossLine{beta0});
    return *this;
}

RegionSpec& RegionSpec::center_at_most(const Rat& bound) {
    constraints.push_back(CenterAtMost{bound});
    return *this;
}

std::string RegionSpec::to_string() const {
    std::string out;
    for (const auto& c : constraints) {
        if (!out.empty()) out += " & ";
        if (const auto* line = std::get_if<CrossLine>(&c))
            out += "cross(" + line->beta.to_string() + ")";
        else if (std::holds_alternative<LeftOfVerticalRegion>(c))
            out += "left-of-vertical";
        else if (const auto* lg = std::get_if<LargerThanRegion>(&c))
            out += std::string("larger-than(") + (lg->inclusive ? ">=" : ">") + " s=" +
                   lg->wall.center.to_string() + ", rho2=" + lg->wall.radius_sq.to_string() + ")";
        else
            out += "center<=" + std::get<CenterAtMost>(c).bound.to_string();
    }
    return out.empty() ? "(empty)" : out;
}

FilterSet FilterSet::minimal() {
    FilterSet f;
    f.delta_additivity = false;
    f.li_filter = false;
    f.beta_minus_monotone = false;
    f.known_exclusions = false;
    return f;
}

std::vector<BigInt> ch1_window(const Chern2& v, long long s, const QuadIrr& beta0) {
    std::vector<BigInt> xs;
    if (s < 1) return xs;
    QuadIrr width = twisted_ch1(v, beta0);
    if (width.sign() <= 0) return xs;
    QuadIrr lo = beta0 * Rat(s);
    QuadIrr hi = lo + width;
    BigInt x = lo.floor() + BigInt(1);
    BigInt x_max = strict_floor(hi);
    if (v.r.sign() > 0) {
        // mu(sub) < mu(v):  x r < c s
        Rat cap(v.c * BigInt(s), v.r);
        BigInt slope_max = strict_floor(QuadIrr(cap));
        if (slope_max < x_max) x_max = slope_max;
    }
    for (; x <= x_max; x = x + BigInt(1)) xs.push_back(x);
    return xs;
}

bool li_violation(const Chern2& w) {
    if (w.r.is_zero()) throw Error(Errc::zero_rank, "li_violation: rank zero");
    Rat dis = w.delta();
    if (dis.sign() <= 0) return false;  // Delta = 0 classes (line bundles) exempt
    if (dis >= Rat(3, 8) * Rat(w.r * w.r)) return false;
    auto [lo, hi] = beta_pm(w);
    BigInt n = lo.floor();
    int cmp = hi.compare(QuadIrr(Rat(n + BigInt(1))));
    if (cmp < 0) return true;  // both in [n, n+1)
    if (cmp == 0 && lo.compare(QuadIrr(Rat(n))) > 0) return true;  // both in (n, n+1]
    return false;
}

std::optional<std::string> known_empty(const Chern2& w) {
    if (w.r.is_zero()) return std::nullopt;
    // Shift-normalize to positive rank, then compare both the class and its
    // derived dual against the proven-empty table, up to twist.
    Chern2 base = w.r.sign() > 0 ? w : -w;
    struct Key {
        long long r, c;
        Rat d;
        const char* tag;
    };
    static const Key table[] = {
        {4, -1, Rat(-1, 2), "no tilt-stable class (4,-1,-1/2)"},
        {5, -1, Rat(-1, 2), "no tilt-stable class (5,-1,-1/2)"},
        {4, -2, Rat(0), "no tilt-stable class (4,-2,0)"},
    };
    for (const Chern2& cand : {base, Chern2(base.r, -base.c, base.d)}) {
        auto [c0, n] = normalize_c(cand.r, cand.c);
        Rat d0 = cand.d + Rat(n) * Rat(cand.c) + Rat(n * n) * Rat(cand.r) / Rat(2);
        for (const Key& key : table)
            if (cand.r == BigInt(key.r) && c0 == BigInt(key.c) && d0 == key.d)
                return std::string(key.tag);
    }
    return std::nullopt;
}

namespace {

// Li-certificate for a single rank in a window anchored at beta0: every
// lattice slope in the window forces beta_+- of the factor into one unit
// interval while the discriminant cap contradicts the resulting bound.
bool rank_excluded_by_window(const Chern2& v, long long s, const QuadIrr& beta0,
                             const QuadIrr& beta_anchor, const QuadIrr& sqrt_delta,
                             const Rat& delta_v) {
    if (Rat(3, 8) * Rat(s) * Rat(s) <= delta_v) return false;
    std::vector<BigInt> xs = ch1_window(v, s, beta0);
    if (xs.empty()) return true;
    BigInt top = beta_anchor.floor() + BigInt(1);
    for (const BigInt& x : xs) {
        QuadIrr upper = (QuadIrr(Rat(x)) + sqrt_delta) / Rat(s);
        if (upper.compare(QuadIrr(Rat(top))) > 0) return false;
    }
    return true;
}

}  // namespace

RankBound rank_bound(const Chern2& v, const RegionSpec& region) {
    if (v.r.sign() < 0)
        throw Error(Errc::unbounded_region, "rank_bound: negative-rank base character");
    Rat delta_v = v.delta();
    if (delta_v.sign() < 0)
        throw Error(Errc::negative_discriminant, "rank_bound: Delta(v) < 0");
    Rays rays = collect_rays(v, region);

    RankBound out;
    if (rays.larger) {
        // For s > ch0(v) the radius bound rho^2 <= Delta/(4 s (s - r)) applies;
        // containing the reference wall needs rho^2 >(=) rho*^2.
        const Rat& rho2 = rays.larger->radius_sq;
        long long r = v.r.to_longlong();
        long long s = std::max(r, 0LL);
        for (;;) {
            long long next = s + 1;
            Rat ratio = delta_v / (Rat(4) * Rat(next) * Rat(next - r));
            bool pass = rays.larger_inclusive ? ratio >= rho2 : ratio > rho2;
            if (!pass) break;
            s = next;
        }
        out.bound = s;
        out.certified = true;
        out.justification = "radius bound vs reference wall closes above s = " +
                            std::to_string(s);
        return out;
    }

    if (v.r.is_zero()) {
        if (v.c.sign() <= 0)
            throw Error(Errc::unbounded_region,
                        "rank_bound: rank-zero base character needs positive ch1");
        // Rank-zero base: rho^2 <= Delta/(4 s^2); the wall must still reach
        // each crossing ray, whose distance to the fixed center d/c bounds s.
        Rat center = v.d / Rat(v.c);
        Rat best_gap(0);
        for (const QuadIrr& ray : rays.lines) {
            QuadIrr off = ray - QuadIrr(center);
            if (off.sign() == 0) continue;
            QuadIrr gap = off.square();
            if (gap.is_rational()) {
                if (best_gap.is_zero() || gap.as_rational() < best_gap)
                    best_gap = gap.as_rational();
            }
        }
        if (best_gap.is_zero())
            throw Error(Errc::unbounded_region,
                        "rank-zero region crosses only the central ray");
        long long s = 0;
        while (delta_v / (Rat(4) * Rat(s + 1) * Rat(s + 1)) > best_gap) ++s;
        out.bound = s;
        out.certified = true;
        out.justification = "radius bound vs ray offset closes above s = " + std::to_string(s);
        return out;
    }

    // Window route: anchor at beta_-(v) (factors have beta_- strictly above
    // it), cap the factor discriminant by Delta(v), and close with the
    // 3/8 s^2 bound once the whole window fits one unit interval.
    QuadIrr anchor = beta_pm(v).first;
    QuadIrr sqrt_delta = QuadIrr::sqrt_of(delta_v);
    const QuadIrr& beta0 = rays.lines.front();
    QuadIrr width = twisted_ch1(v, beta0);
    if (width.sign() <= 0) {
        out.bound = 0;
        out.certified = true;
        out.justification = "empty ch1 window on the crossing ray";
        return out;
    }
    QuadIrr top(Rat(anchor.floor() + BigInt(1)));
    long long coarse = -1;
    for (long long s = 1; s <= kRankSearchCap; ++s) {
        if (Rat(3, 8) * Rat(s) * Rat(s) <= delta_v) continue;
        QuadIrr reach = beta0 + (width + sqrt_delta) / Rat(s);
        if (reach.compare(top) <= 0) {
            coarse = s;
            break;
        }
    }
    if (coarse < 0) {
        out.bound = kRankSearchCap;
        out.certified = false;
        out.justification = "window certificate did not close below the search cap";
        return out;
    }
    long long s = coarse - 1;
    while (s >= 1 && rank_excluded_by_window(v, s, beta0, anchor, sqrt_delta, delta_v)) --s;
    out.bound = s;
    out.certified = true;
    out.justification = "window certificate closes above s = " + std::to_string(s);
    return out;
}

EnumerationResult enumerate_candidate_walls(const Chern2& v, const RegionSpec& region,
                                            const FilterSet& filters) {
    if (v.r.sign() < 0)
        throw Error(Errc::unbounded_region, "enumerate: negative-rank base character");
    if (v.delta().sign() < 0)
        throw Error(Errc::negative_discriminant, "enumerate: Delta(v) < 0");

    EnumerationResult result;
    result.bound = rank_bound(v, region);
    if (!result.bound.certified)
        result.warnings.push_back("uncertified cutoff: " + result.bound.justification);
    Rays rays = collect_rays(v, region);

    std::optional<QuadIrr> beta_minus_v;
    if (!v.r.is_zero()) beta_minus_v = beta_pm(v).first;

    for (long long s = 1; s <= result.bound.bound; ++s) {
        // Intersect the ch1 windows over every crossing ray.
        std::optional<std::pair<BigInt, BigInt>> xr;
        for (const QuadIrr& ray : rays.lines) {
            std::vector<BigInt> xs = ch1_window(v, s, ray);
            if (xs.empty()) {
                xr.reset();
                break;
            }
            if (!xr)
                xr = {xs.front(), xs.back()};
            else {
                if (xs.front() > xr->first) xr->first = xs.front();
                if (xs.back() < xr->second) xr->second = xs.back();
            }
        }
        if (!xr || xr->first > xr->second) continue;

        for (BigInt x = xr->first; x <= xr->second; x = x + BigInt(1)) {
            // Half-integer lattice for y with 2y == x (mod 2).
            BigInt m_hi, m_lo;  // bounds on m = 2y
            bool have_hi = false, have_lo = false;
            auto cap_hi = [&](const Rat& bound) {
                BigInt m = (bound * Rat(2)).floor();
                if (!have_hi || m < m_hi) m_hi = m, have_hi = true;
            };
            auto raise_lo_strict = [&](const QuadIrr& bound) {
                BigInt m = (bound * Rat(2)).floor() + BigInt(1);
                if (!have_lo || m > m_lo) m_lo = m, have_lo = true;
            };
            auto raise_lo = [&](const Rat& bound) {
                BigInt m = (bound * Rat(2)).ceil();
                if (!have_lo || m > m_lo) m_lo = m, have_lo = true;
            };

            // Bogomolov on the sub: y <= x^2 / (2s).
            cap_hi(Rat(x * x, BigInt(2) * BigInt(s)));
            // Bogomolov on the quotient.
            BigInt rq = v.r - BigInt(s);
            BigInt cq = v.c - x;
            if (rq.sign() > 0)
                raise_lo(v.d - Rat(cq * cq, BigInt(2) * rq));
            else if (rq.sign() < 0)
                cap_hi(v.d + Rat(cq * cq, BigInt(2) * (-rq)));
            // Region: reaching the open ray beta = beta0 means alpha^2 > 0
            // there, a strict linear lower bound on y:
            //   y > ch2v^b ch1w^b / ch1v^b + b x - b^2 s / 2
            for (const QuadIrr& ray : rays.lines) {
                QuadIrr ch1v = twisted_ch1(v, ray);
                QuadIrr ch2v = twisted_ch2(v, ray);
                QuadIrr ch1w = QuadIrr(Rat(x)) - ray * Rat(s);
                QuadIrr t = ch2v * ch1w / ch1v + ray * Rat(x) - ray.square() * Rat(s, 2);
                raise_lo_strict(t);
            }
            // Containment constraint: center ordering (and radius growth for
            // the concentric rank-zero family).
            if (rays.larger) {
                Rat a = Rat(v.c * BigInt(s) - x * v.r);
                if (v.r.sign() > 0) {
                    // (d s - y r)/A <= center*  =>  y >= (d s - center* A)/r
                    raise_lo((v.d * Rat(s) - rays.larger->center * a) / Rat(v.r));
                } else {
                    // concentric family: rho^2 increasing in y
                    Rat ctr = v.d * Rat(s) / a;
                    Rat c_bound = (ctr * ctr - rays.larger->radius_sq) * a / Rat(2);
                    raise_lo((v.d * Rat(x) - c_bound) / Rat(v.c));
                }
            }
            if (rays.center_cap && v.r.sign() > 0) {
                Rat a = Rat(v.c * BigInt(s) - x * v.r);
                raise_lo((v.d * Rat(s) - *rays.center_cap * a) / Rat(v.r));
            }
            if (!have_hi || !have_lo || m_lo > m_hi) continue;
            // parity: m = 2y == x (mod 2)
            BigInt m = m_lo;
            if ((m - x) % BigInt(2) != BigInt(0)) m = m + BigInt(1);

            for (; m <= m_hi; m = m + BigInt(2)) {
                Chern2 sub(BigInt(s), x, Rat(m, BigInt(2)));
                Chern2 quot = v - sub;
                WallLocus locus = wall_between(v, sub);
                if (!region_satisfied(locus, v, rays)) continue;

                std::vector<std::string> evidence;
                evidence.push_back("window");
                evidence.push_back("bogomolov-sub");
                evidence.push_back("bogomolov-quot");

                Rat delta_sum = sub.delta() + quot.delta();
                if (filters.delta_additivity) {
                    if (delta_sum >= v.delta()) continue;
                    evidence.push_back("delta-additivity");
                }
                if (filters.beta_minus_monotone && beta_minus_v) {
                    auto [sub_lo, sub_hi] = beta_pm(sub);
                    (void)sub_hi;
                    if (sub_lo.compare(*beta_minus_v) <= 0) continue;
                    evidence.push_back("beta-minus-monotone");
                }
                if (filters.li_filter) {
                    if (li_violation(sub)) continue;
                    if (!quot.r.is_zero() && li_violation(quot)) continue;
                    evidence.push_back("li");
                }
                if (filters.known_exclusions) {
                    if (known_empty(sub) || known_empty(quot)) continue;
                    evidence.push_back("known-exclusions");
                }
                std::optional<Rat> budget = ch3_budget(sub, quot, locus);
                if (filters.e_budget) {
                    if (budget && *budget < *filters.e_budget) continue;
                    evidence.push_back(budget ? "budget" : "budget-unknown");
                }
                result.candidates.push_back(
                    {std::move(sub), std::move(quot), locus, budget, std::move(evidence)});
            }
        }
    }

    std::sort(result.candidates.begin(), result.candidates.end(),
              [](const CandidateWall& a, const CandidateWall& b) {
                  const auto& wa = as_semicircle(a.locus);
                  const auto& wb = as_semicircle(b.locus);
                  if (wa.radius_sq != wb.radius_sq) return wa.radius_sq > wb.radius_sq;
                  if (wa.center != wb.center) return wa.center < wb.center;
                  if (a.sub.r != b.sub.r) return a.sub.r < b.sub.r;
                  if (a.sub.c != b.sub.c) return a.sub.c < b.sub.c;
                  return a.sub.d < b.sub.d;
              });
    return result;
}

EnumerationResult enumerate_candidate_walls(const ChernChar& v, const RegionSpec& region,
                                            const FilterSet& filters) {
    return enumerate_candidate_walls(Chern2(v), region, filters);
}

std::optional<Rat> ch3_budget(const Chern2& sub, const Chern2& quot, const WallLocus& locus) {
    std::optional<Rat> center;
    if (is_semicircle(locus)) center = as_semicircle(locus).center;
    BoundValue a = max_ch3(sub, center);
    BoundValue b = max_ch3(quot, center);
    if (!is_finite(a) || !is_finite(b)) return std::nullopt;
    return finite_value(a) + finite_value(b);
}

std::optional<Rat> ch3_budget(const ChernChar& v, const CandidateWall& cand) {
    Chern2 quot = Chern2(v) - cand.sub;
    return ch3_budget(cand.sub, quot, cand.locus);
}

std::vector<CandidateWall> distinct_walls(const std::vector<CandidateWall>& candidates) {
    std::vector<CandidateWall> out;
    for (const auto& cand : candidates) {
        bool seen = false;
        for (const auto& kept : out)
            if (as_semicircle(kept.locus) == as_semicircle(cand.locus)) {
                seen = true;
                break;
            }
        if (!seen) out.push_back(cand);
    }
    return out;
}

}  // namespace tiltwall
