#include "superlum/report.hpp"

#include <algorithm>
#include <cmath>

namespace superlum {

namespace {

// JSON has no inf/nan; keep the report loadable.
nlohmann::json number(double v) {
    if (std::isfinite(v)) return v;
    if (std::isnan(v)) return "nan";
    return v > 0 ? "inf" : "-inf";
}

}  // namespace

bool VerificationReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::size_t VerificationReport::failures() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json out;
    out["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
        out["checks"].push_back({{"name", c.name},
                                 {"params", c.params},
                                 {"deviation", number(c.deviation)},
                                 {"tolerance", number(c.tolerance)},
                                 {"passed", c.passed}});
    }
    out["all_passed"] = all_passed();
    return out;
}

}  // namespace superlum
