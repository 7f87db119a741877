#include "tiltwall/textio.hpp"

#include <vector>

namespace tiltwall {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

}  // namespace

Rat parse_rational(const std::string& text) {
    std::string t = trim(text);
    if (t.empty()) throw Error(Errc::parse_error, "empty rational");
    try {
        return Rat::from_string(t);
    } catch (const std::exception& e) {
        throw Error(Errc::parse_error, "bad rational '" + t + "': " + e.what());
    }
}

ParsedCharacter parse_character(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    if (parts.size() < 2 || parts.size() > 4)
        throw Error(Errc::parse_error,
                    "expected 'r,c', 'r,c,d' or 'r,c,d,e', got " + std::to_string(parts.size()) +
                        " fields");
    ParsedCharacter out;
    Rat r = parse_rational(parts[0]);
    Rat c = parse_rational(parts[1]);
    if (!r.is_integer())
        throw Error(Errc::parse_error, "field 1 (rank) must be an integer, got " + r.to_string());
    if (!c.is_integer())
        throw Error(Errc::parse_error, "field 2 (ch1) must be an integer, got " + c.to_string());
    out.r = r.num();
    out.c = c.num();
    if (parts.size() >= 3) out.d = parse_rational(parts[2]);
    if (parts.size() == 4) out.e = parse_rational(parts[3]);
    return out;
}

ChernChar ParsedCharacter::full() const {
    if (!is_full()) throw Error(Errc::parse_error, "character needs all four entries");
    return ChernChar::make(r, c, *d, *e);
}

Chern2 ParsedCharacter::truncated() const {
    if (!d) throw Error(Errc::parse_error, "character needs at least three entries");
    Rat two_d = *d * Rat(2);
    if (!two_d.is_integer())
        throw Error(Errc::lattice_violation, "ch2 must be a half-integer: " + d->to_string());
    if (((two_d.num() - c) % BigInt(2)) != BigInt(0))
        throw Error(Errc::lattice_violation, "parity: 2*ch2 and ch1 must agree mod 2");
    return Chern2(r, c, *d);
}

std::string json_string(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out.push_back('\\');
        out.push_back(ch);
    }
    out += "\"";
    return out;
}

std::string json_rat(const Rat& x) { return json_string(x.to_string()); }

std::string json_chern(const ChernChar& v) {
    return "{\"r\":" + v.r().to_string() + ",\"c\":" + v.c().to_string() +
           ",\"d\":" + json_rat(v.d()) + ",\"e\":" + json_rat(v.e()) + "}";
}

std::string json_chern2(const Chern2& v) {
    return "{\"r\":" + v.r.to_string() + ",\"c\":" + v.c.to_string() +
           ",\"d\":" + json_rat(v.d) + "}";
}

std::string json_locus(const WallLocus& w) {
    if (const auto* s = std::get_if<Semicircle>(&w))
        return "{\"type\":\"semicircle\",\"s\":" + json_rat(s->center) +
               ",\"rho_sq\":" + json_rat(s->radius_sq) + "}";
    if (const auto* v = std::get_if<VerticalWall>(&w))
        return "{\"type\":\"vertical\",\"beta\":" + json_rat(v->beta) + "}";
    if (std::holds_alternative<EmptyWall>(w)) return "{\"type\":\"empty\"}";
    return "{\"type\":\"everywhere\"}";
}

std::string json_bound(const BoundValue& b) {
    if (const auto* f = std::get_if<BoundFinite>(&b)) return "{\"finite\":" + json_rat(f->value) + "}";
    if (std::holds_alternative<BoundInfinity>(b)) return "{\"infinity\":true}";
    return "{\"unknown\":" + json_string(std::get<BoundUnknown>(b).reason) + "}";
}

std::string json_quadirr(const QuadIrr& q) {
    return "{\"a\":" + json_rat(q.rational_part()) + ",\"b\":" + json_rat(q.radical_coeff()) +
           ",\"D\":" + std::to_string(q.radicand()) + "}";
}

std::string json_candidate(const CandidateWall& c) {
    std::string ev = "[";
    for (size_t i = 0; i < c.evidence.size(); ++i) {
        if (i) ev += ",";
        ev += json_string(c.evidence[i]);
    }
    ev += "]";
    std::string budget = c.ch3_budget ? json_rat(*c.ch3_budget) : "null";
    return "{\"sub\":" + json_chern2(c.sub) + ",\"quot\":" + json_chern2(c.quot) +
           ",\"locus\":" + json_locus(c.locus) + ",\"ch3_budget\":" + budget +
           ",\"evidence\":" + ev + "}";
}

std::string json_enumeration(const EnumerationResult& r) {
    std::string out = "{\"rank_bound\":" + std::to_string(r.bound.bound) +
                      ",\"certified\":" + (r.bound.certified ? "true" : "false") +
                      ",\"warnings\":[";
    for (size_t i = 0; i < r.warnings.size(); ++i) {
        if (i) out += ",";
        out += json_string(r.warnings[i]);
    }
    out += "],\"candidates\":[";
    for (size_t i = 0; i < r.candidates.size(); ++i) {
        if (i) out += ",";
        out += json_candidate(r.candidates[i]);
    }
    out += "]}";
    return out;
}

}  // namespace tiltwall
