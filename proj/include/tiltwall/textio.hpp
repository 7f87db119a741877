#pragma once

#include <optional>
#include <string>

#include "tiltwall/bounds.hpp"
#include "tiltwall/chern.hpp"
#include "tiltwall/destab.hpp"

namespace tiltwall {

// Character text format "r,c,d,e", truncations "r,c,d" / "r,c"; rationals
// as "p/q".
struct ParsedCharacter {
    BigInt r, c;
    std::optional<Rat> d, e;

    bool is_full() const { return d && e; }
    ChernChar full() const;  // validates the lattice constraints
    Chern2 truncated() const;
};

ParsedCharacter parse_character(const std::string& text);
Rat parse_rational(const std::string& text);

// JSON fragments; exact rationals always render as quoted strings.
std::string json_string(const std::string& s);
std::string json_rat(const Rat& x);
std::string json_chern(const ChernChar& v);
std::string json_chern2(const Chern2& v);
std::string json_locus(const WallLocus& w);
std::string json_bound(const BoundValue& b);
std::string json_quadirr(const QuadIrr& q);
std::string json_candidate(const CandidateWall& c);
std::string json_enumeration(const EnumerationResult& r);

}  // namespace tiltwall
