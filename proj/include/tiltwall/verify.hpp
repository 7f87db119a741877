#pragma once

#include <optional>
#include <string>
#include <vector>

namespace tiltwall {

enum class CheckStatus { pass, fail, inconclusive };

struct CheckItem {
    std::string label;
    std::string expected;
    std::string computed;
    bool ok;
};

struct CheckResult {
    std::string name;
    std::string citation;
    CheckStatus status = CheckStatus::pass;
    std::vector<CheckItem> items;
};

struct CheckInfo {
    std::string name;
    std::string citation;
};

std::vector<CheckInfo> list_checks();
CheckResult run_check(const std::string& name);  // Error(unknown_check) if absent

// Runs the whole registry in order; checks past the optional time budget are
// reported inconclusive rather than silently skipped.
std::vector<CheckResult> run_all_checks(std::optional<double> timeout_secs = std::nullopt);

std::string check_status_name(CheckStatus s);
std::string json_check_result(const CheckResult& r);
std::string json_check_results(const std::vector<CheckResult>& rs);
bool all_passed(const std::vector<CheckResult>& rs);

}  // namespace tiltwall
