#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "tiltwall/destab.hpp"
#include "tiltwall/render.hpp"
#include "tiltwall/textio.hpp"
#include "tiltwall/verify.hpp"

using namespace tiltwall;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitVerify = 3;

struct Options {
    bool json = false;
    std::string character;
    std::string second;
    std::vector<std::string> regions;
    std::string filters = "all";
    std::string e_budget;
    std::string svg_path;
    std::string check_name;
    std::string rank, c1, d2;
    std::string mode = "full";
};

RegionSpec parse_region_flags(const std::vector<std::string>& flags, const Chern2& v) {
    RegionSpec region;
    if (flags.empty()) {
        region.constraints.push_back(LeftOfVerticalRegion{});
        return region;
    }
    for (const std::string& flag : flags) {
        if (flag == "left" || flag == "left-of-vertical") {
            region.constraints.push_back(LeftOfVerticalRegion{});
        } else if (flag.rfind("cross=", 0) == 0) {
            std::string arg = flag.substr(6);
            if (arg == "beta-") {
                region.cross(beta_pm(v).first);
            } else {
                region.cross(QuadIrr(parse_rational(arg)));
            }
        } else if (flag.rfind("larger=", 0) == 0) {
            std::string arg = flag.substr(7);
            bool inclusive = false;
            if (arg.size() > 5 && arg.substr(arg.size() - 5) == ",incl") {
                inclusive = true;
                arg = arg.substr(0, arg.size() - 5);
            }
            size_t comma = arg.find(',');
            if (comma == std::string::npos)
                throw Error(Errc::parse_error, "--region larger=s,rho2[,incl]");
            Semicircle wall{parse_rational(arg.substr(0, comma)),
                            parse_rational(arg.substr(comma + 1))};
            region.constraints.push_back(LargerThanRegion{wall, inclusive});
        } else if (flag.rfind("center-max=", 0) == 0) {
            region.center_at_most(parse_rational(flag.substr(11)));
        } else {
            throw Error(Errc::parse_error, "unknown region constraint '" + flag + "'");
        }
    }
    return region;
}

FilterSet parse_filters(const std::string& spec, const std::string& e_budget) {
    FilterSet f;
    if (spec == "all") {
        f = FilterSet::all();
    } else if (spec == "minimal") {
        f = FilterSet::minimal();
    } else {
        f = FilterSet::minimal();
        std::string cur;
        auto apply = [&f](const std::string& name) {
            if (name == "delta-additivity") f.delta_additivity = true;
            else if (name == "li") f.li_filter = true;
            else if (name == "beta-monotone") f.beta_minus_monotone = true;
            else if (name == "known") f.known_exclusions = true;
            else if (!name.empty())
                throw Error(Errc::parse_error, "unknown filter '" + name + "'");
        };
        for (char ch : spec) {
            if (ch == ',') {
                apply(cur);
                cur.clear();
            } else
                cur.push_back(ch);
        }
        apply(cur);
    }
    if (!e_budget.empty()) f.e_budget = parse_rational(e_budget);
    return f;
}

void emit(bool json, const std::string& json_payload, const std::string& text) {
    if (json)
        std::cout << json_payload << "\n";
    else
        std::cout << text << "\n";
}

int cmd_verify(const Options& opt) {
    std::optional<double> budget;
    if (const char* env = std::getenv("TILTWALL_CHECK_TIMEOUT_SECS")) budget = std::atof(env);
    std::vector<CheckResult> results;
    if (opt.check_name == "all" || opt.check_name.empty()) {
        results = run_all_checks(budget);
    } else if (opt.check_name == "list") {
        for (const CheckInfo& info : list_checks())
            std::cout << info.name << "  [" << info.citation << "]\n";
        return kExitOk;
    } else {
        results.push_back(run_check(opt.check_name));
    }
    if (opt.json) {
        for (const CheckResult& r : results) std::cout << json_check_result(r) << "\n";
    } else {
        for (const CheckResult& r : results) {
            std::cout << check_status_name(r.status) << "  " << r.name << "\n";
            if (r.status != CheckStatus::pass)
                for (const CheckItem& item : r.items)
                    if (!item.ok)
                        std::cout << "    " << item.label << ": expected " << item.expected
                                  << ", got " << item.computed << "\n";
        }
    }
    return all_passed(results) ? kExitOk : kExitVerify;
}

int dispatch(const std::string& group, const std::string& action, const Options& opt) {
    if (group == "chern") {
        ParsedCharacter pc = parse_character(opt.character);
        if (action == "validate") {
            if (pc.is_full()) {
                ChernChar v = pc.full();
                MembershipReport rep = classify_membership(v);
                std::string rules;
                for (const auto& rule : rep.violated_rules) rules += " " + rule;
                emit(opt.json,
                     "{\"character\":" + json_chern(v) +
                         ",\"in_ch\":" + (rep.in_ch ? "true" : "false") + "}",
                     std::string("valid lattice point; in CH(P3): ") +
                         (rep.in_ch ? "yes" : "no") + rules);
            } else {
                MembershipReport rep = classify_membership(Rat(pc.r), Rat(pc.c), pc.d);
                bool in = pc.d ? rep.in_ch_le2 : rep.in_ch_le1;
                std::string level = pc.d ? "2" : "1";
                emit(opt.json,
                     "{\"in_ch_le" + level + "\":" + (in ? "true" : "false") + "}",
                     "in CH_{<=" + level + "}(P3): " + (in ? "yes" : "no"));
            }
            return kExitOk;
        }
        if (action == "chi") {
            ChernChar v = pc.full();
            emit(opt.json, "{\"chi\":" + json_rat(chi(v)) + "}", chi(v).to_string());
            return kExitOk;
        }
        if (action == "pair") {
            ChernChar w = pc.full();
            ChernChar v = parse_character(opt.second).full();
            Rat val = euler_pairing(w, v);
            emit(opt.json, "{\"euler_pairing\":" + json_rat(val) + "}", val.to_string());
            return kExitOk;
        }
        if (action == "delta") {
            ChernChar v = pc.is_full() ? pc.full()
                                       : ChernChar::make(pc.r, pc.c, pc.d ? *pc.d : Rat(0), Rat(0));
            emit(opt.json, "{\"delta\":" + json_rat(delta(v)) + "}", delta(v).to_string());
            return kExitOk;
        }
        if (action == "hilbert") {
            HilbertPoly p = hilbert_poly(pc.full());
            emit(opt.json,
                 "{\"a0\":" + json_rat(p.a0) + ",\"a1\":" + json_rat(p.a1) +
                     ",\"a2\":" + json_rat(p.a2) + ",\"a3\":" + json_rat(p.a3) + "}",
                 "P(m) = (" + p.a3.to_string() + ")m^3 + (" + p.a2.to_string() + ")m^2 + (" +
                     p.a1.to_string() + ")m + (" + p.a0.to_string() + ")");
            return kExitOk;
        }
    }
    if (group == "walls") {
        if (action == "between") {
            Chern2 v = parse_character(opt.character).truncated();
            Chern2 w = parse_character(opt.second).truncated();
            WallLocus locus = wall_between(v, w);
            emit(opt.json, "{\"wall\":" + json_locus(locus) + "}", locus_to_string(locus));
            return kExitOk;
        }
        if (action == "q") {
            ChernChar v = parse_character(opt.character).full();
            WallLocus locus = q_wall(v);
            emit(opt.json, "{\"q_wall\":" + json_locus(locus) + "}", locus_to_string(locus));
            return kExitOk;
        }
        if (action == "beta") {
            Chern2 v = parse_character(opt.character).truncated();
            auto [lo, hi] = beta_pm(v);
            emit(opt.json,
                 "{\"beta_minus\":" + json_quadirr(lo) + ",\"beta_plus\":" + json_quadirr(hi) + "}",
                 "beta_- = " + lo.to_string() + ", beta_+ = " + hi.to_string());
            return kExitOk;
        }
    }
    if (group == "destab" && action == "enum") {
        ParsedCharacter pc = parse_character(opt.character);
        Chern2 v = pc.truncated();
        RegionSpec region = parse_region_flags(opt.regions, v);
        FilterSet filters = parse_filters(opt.filters, opt.e_budget);
        EnumerationResult res = enumerate_candidate_walls(v, region, filters);
        if (opt.json) {
            std::cout << json_enumeration(res) << "\n";
        } else {
            std::cout << "rank bound " << res.bound.bound
                      << (res.bound.certified ? " (certified)" : " (NOT certified)") << ": "
                      << res.bound.justification << "\n";
            for (const std::string& w : res.warnings) std::cout << "warning: " << w << "\n";
            for (const CandidateWall& cand : res.candidates) {
                std::cout << locus_to_string(cand.locus) << "  sub=" << cand.sub.to_string()
                          << " quot=" << cand.quot.to_string();
                if (cand.ch3_budget) std::cout << "  budget=" << cand.ch3_budget->to_string();
                std::cout << "\n";
            }
            std::cout << res.candidates.size() << " candidate(s), "
                      << distinct_walls(res.candidates).size() << " distinct wall(s)\n";
        }
        return kExitOk;
    }
    if (group == "bounds") {
        if (action == "d") {
            BoundValue b = bound_D(BigInt::from_string(opt.rank), BigInt::from_string(opt.c1));
            emit(opt.json, "{\"D\":" + json_bound(b) + "}", bound_to_string(b));
            return kExitOk;
        }
        if (action == "e") {
            BoundValue b = bound_E(BigInt::from_string(opt.rank), BigInt::from_string(opt.c1),
                                   parse_rational(opt.d2));
            emit(opt.json, "{\"E\":" + json_bound(b) + "}", bound_to_string(b));
            return kExitOk;
        }
        if (action == "extremal") {
            auto entry = extremal_walls(BigInt::from_string(opt.rank),
                                        BigInt::from_string(opt.c1), parse_rational(opt.d2));
            if (!entry) {
                emit(opt.json, "{\"extremal\":\"unknown\"}", "unknown (outside the tabulated range)");
                return kExitOk;
            }
            if (opt.json) {
                std::string out = "{\"key\":" + json_chern2(entry->key) +
                                  ",\"e_max\":" + json_rat(entry->e_max) + ",\"walls\":[";
                for (size_t i = 0; i < entry->walls.size(); ++i) {
                    const auto& w = entry->walls[i];
                    if (i) out += ",";
                    out += "{\"locus\":" + json_locus(w.locus) +
                           ",\"sub\":" + json_string(w.sub.to_string()) +
                           ",\"quot\":" + json_string(w.quot.to_string()) + "}";
                }
                out += "]}";
                std::cout << out << "\n";
            } else {
                std::cout << "key " << entry->key.to_string() << ", E = "
                          << entry->e_max.to_string() << "\n";
                for (const auto& w : entry->walls)
                    std::cout << "  " << locus_to_string(w.locus) << "  " << w.sub.to_string()
                              << "  ->  " << w.quot.to_string() << "\n";
                if (entry->walls.empty()) std::cout << "  (no wall left of the vertical wall)\n";
            }
            return kExitOk;
        }
        if (action == "exists") {
            ChernChar v = parse_character(opt.character).full();
            auto verdict = exists_2gieseker(v);
            std::string text = verdict ? (*verdict ? "true" : "false") : "unknown";
            emit(opt.json, "{\"exists\":\"" + text + "\"}", text);
            return kExitOk;
        }
    }
    if (group == "plot") {
        ParsedCharacter pc = parse_character(opt.character);
        ChernChar v = pc.full();
        std::vector<WallLocus> walls;
        try {
            if (auto entry = extremal_walls(v.r(), v.c(), v.d()))
                for (const auto& w : entry->walls) walls.push_back(w.locus);
        } catch (const Error&) {
            // character above the sharp bounds: plot only the Q-wall
        }
        if (delta(v).sign() > 0) walls.push_back(q_wall(v));
        RenderOptions ro;
        ro.title = v.to_string();
        std::string svg = render_walls_svg(v, walls, ro);
        if (opt.svg_path.empty() || opt.svg_path == "-") {
            std::cout << svg;
        } else {
            std::ofstream out(opt.svg_path, std::ios::binary);
            out << svg;
        }
        return kExitOk;
    }
    throw Error(Errc::parse_error, "unknown command");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tilt-stability calculator for sheaves on P3"};
    app.require_subcommand(1);
    Options opt;

    auto* chern = app.add_subcommand("chern", "character arithmetic");
    chern->require_subcommand(1);
    for (const char* name : {"validate", "chi", "delta", "hilbert"}) {
        auto* sub = chern->add_subcommand(name);
        sub->add_option("character", opt.character)->required();
        sub->add_flag("--json", opt.json);
    }
    auto* pair = chern->add_subcommand("pair");
    pair->add_option("from", opt.character)->required();
    pair->add_option("to", opt.second)->required();
    pair->add_flag("--json", opt.json);

    auto* walls = app.add_subcommand("walls", "wall geometry");
    walls->require_subcommand(1);
    auto* between = walls->add_subcommand("between");
    between->add_option("v", opt.character)->required();
    between->add_option("w", opt.second)->required();
    between->add_flag("--json", opt.json);
    for (const char* name : {"q", "beta"}) {
        auto* sub = walls->add_subcommand(name);
        sub->add_option("character", opt.character)->required();
        sub->add_flag("--json", opt.json);
    }

    auto* destab = app.add_subcommand("destab", "destabilizer enumeration");
    auto* denum = destab->add_subcommand("enum");
    denum->add_option("character", opt.character)->required();
    denum->add_option("--region", opt.regions,
                      "left | cross=Q|beta- | larger=s,rho2[,incl] | center-max=Q");
    denum->add_option("--filters", opt.filters, "all | minimal | csv of extra filters");
    denum->add_option("--e-budget", opt.e_budget);
    denum->add_flag("--json", opt.json);

    auto* bounds = app.add_subcommand("bounds", "sharp Chern character bounds");
    bounds->require_subcommand(1);
    auto* bd = bounds->add_subcommand("d");
    bd->add_option("r", opt.rank)->required();
    bd->add_option("c", opt.c1)->required();
    bd->add_flag("--json", opt.json);
    for (const char* name : {"e", "extremal"}) {
        auto* sub = bounds->add_subcommand(name);
        sub->add_option("r", opt.rank)->required();
        sub->add_option("c", opt.c1)->required();
        sub->add_option("d", opt.d2)->required();
        sub->add_flag("--json", opt.json);
    }
    auto* bexists = bounds->add_subcommand("exists");
    bexists->add_option("character", opt.character)->required();
    bexists->add_flag("--json", opt.json);

    auto* verify = app.add_subcommand("verify", "run the reproduction checks");
    verify->add_option("name", opt.check_name, "all | list | a check name")
        ->default_val("all");
    verify->add_flag("--json", opt.json);

    auto* plot = app.add_subcommand("plot", "SVG wall diagram");
    plot->add_option("character", opt.character)->required();
    plot->add_option("--svg", opt.svg_path, "output file ('-' for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand("verify")) return cmd_verify(opt);
        for (const char* group : {"chern", "walls", "destab", "bounds"}) {
            if (!app.got_subcommand(group)) continue;
            CLI::App* sub = app.get_subcommand(group);
            for (CLI::App* leaf : sub->get_subcommands())
                return dispatch(group, leaf->get_name(), opt);
        }
        if (app.got_subcommand("plot")) return dispatch("plot", "", opt);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == Errc::parse_error ? kExitUsage : kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}
