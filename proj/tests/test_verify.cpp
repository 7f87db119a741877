#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tiltwall/errors.hpp"
#include "tiltwall/verify.hpp"

using namespace tiltwall;

TEST_CASE("registry has the documented shape") {
    auto checks = list_checks();
    CHECK(checks.size() >= 25);
    auto has = [&checks](const std::string& name) {
        for (const auto& c : checks)
            if (c.name == name) return true;
        return false;
    };
    CHECK(has("no-left-walls:(4,-1,-1/2)"));
    CHECK(has("wall-list:(3,-1,-5/2)"));
    CHECK(has("euler-table:chi"));
    CHECK(has("inductive:(4,0,-5)"));
    CHECK_THROWS_AS(run_check("no-such-check"), Error);
}

TEST_CASE("single checks pass") {
    for (const char* name : {"beta-roots", "derived-dual", "bound-table:D", "q-wall:(3,-1,-5/2)"}) {
        CheckResult r = run_check(name);
        INFO(name);
        for (const auto& item : r.items) {
            INFO(item.label, ": expected ", item.expected, ", got ", item.computed);
            CHECK(item.ok);
        }
        CHECK(r.status == CheckStatus::pass);
    }
}

TEST_CASE("full registry passes deterministically") {
    auto first = run_all_checks();
    for (const auto& r : first) {
        INFO(r.name);
        for (const auto& item : r.items) {
            if (!item.ok) {
                INFO(item.label, ": expected ", item.expected, ", got ", item.computed);
            }
            CHECK(item.ok);
        }
        CHECK(r.status == CheckStatus::pass);
    }
    auto second = run_all_checks();
    CHECK(json_check_results(first) == json_check_results(second));
    CHECK(all_passed(first));
}

TEST_CASE("time budget marks later checks inconclusive") {
    auto rs = run_all_checks(0.0);
    bool saw_inconclusive = false;
    for (const auto& r : rs) saw_inconclusive |= r.status == CheckStatus::inconclusive;
    CHECK(saw_inconclusive);
    CHECK_FALSE(all_passed(rs));
}
