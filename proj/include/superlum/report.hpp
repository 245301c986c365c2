#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace superlum {

/// One line of a verification report.
struct CheckResult {
    std::string name;
    nlohmann::json params = nlohmann::json::object();
    double deviation = 0.0;
    double tolerance = 0.0;
    bool passed = true;
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool all_passed() const;
    std::size_t failures() const;
    /// {"checks": [{name, params, deviation, tolerance, passed}], "all_passed": bool}
    nlohmann::json to_json() const;
};

}  // namespace superlum
