#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tiltwall/bounds.hpp"
#include "tiltwall/walls.hpp"

namespace tiltwall {

// Region constraints (conjunctive).  Every satisfiable region must pin down
// at least one crossing ray, explicitly or through a reference wall.
struct CrossLine {
    QuadIrr beta;
};
struct LeftOfVerticalRegion {};
struct LargerThanRegion {
    Semicircle wall;
    bool inclusive = false;
};
struct CenterAtMost {
    Rat bound;
};
using RegionConstraint =
    std::variant<CrossLine, LeftOfVerticalRegion, LargerThanRegion, CenterAtMost>;

struct RegionSpec {
    std::vector<RegionConstraint> constraints;

    static RegionSpec left_of_vertical();
    static RegionSpec crossing(const QuadIrr& beta0);
    static RegionSpec larger_than(const Semicircle& wall, bool inclusive);
    RegionSpec& cross(const QuadIrr& beta0);
    RegionSpec& center_at_most(const Rat& bound);
    std::string to_string() const;
};

struct FilterSet {
    // Bogomolov on both factors is part of the enumeration lattice box and is
    // always enforced; the flags only control the extra necessary conditions.
    bool bogomolov_sub = true;
    bool bogomolov_quot = true;
    bool delta_additivity = true;
    bool li_filter = true;
    bool beta_minus_monotone = true;
    bool known_exclusions = true;
    std::optional<Rat> e_budget;

    static FilterSet all() { return FilterSet{}; }
    static FilterSet minimal();  // Bogomolov + lattice + region only
};

struct RankBound {
    long long bound = 0;
    bool certified = false;
    std::string justification;
};

struct CandidateWall {
    Chern2 sub;   // positive rank, slope strictly below mu(v)
    Chern2 quot;  // v - sub
    WallLocus locus;
    std::optional<Rat> ch3_budget;
    std::vector<std::string> evidence;
};

struct EnumerationResult {
    std::vector<CandidateWall> candidates;  // sorted, largest wall first
    RankBound bound;
    std::vector<std::string> warnings;
};

// Smallest S such that every destabilizer rank s > S is excluded in the
// region, with a certificate (radius bound against a reference wall, or the
// discriminant bound from the beta window).
RankBound rank_bound(const Chern2& v, const RegionSpec& region);

// Integers x with 0 < x - beta0 s < ch1^{beta0}(v), intersected with the
// slope condition x/s < mu(v) when v has positive rank.
std::vector<BigInt> ch1_window(const Chern2& v, long long s, const QuadIrr& beta0);

// Characters excluded by the discriminant bound for stable objects whose
// beta-window sits in one unit interval; Delta = 0 classes are exempt.
bool li_violation(const Chern2& w);

// Citation tag when w matches a proven-empty class, up to twist, shift and
// derived dual.
std::optional<std::string> known_empty(const Chern2& w);

EnumerationResult enumerate_candidate_walls(const Chern2& v, const RegionSpec& region,
                                            const FilterSet& filters);
EnumerationResult enumerate_candidate_walls(const ChernChar& v, const RegionSpec& region,
                                            const FilterSet& filters);

// Max ch3 compatible with both factors being semistable along the wall;
// nullopt when a factor is out of scope of the bound tables.
std::optional<Rat> ch3_budget(const Chern2& sub, const Chern2& quot, const WallLocus& locus);
std::optional<Rat> ch3_budget(const ChernChar& v, const CandidateWall& cand);

// One representative per locus, keeping the sorted order.
std::vector<CandidateWall> distinct_walls(const std::vector<CandidateWall>& candidates);

}  // namespace tiltwall
