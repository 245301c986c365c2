#pragma once

// JSON forms of scenarios, boosts, invariant specs and phase sets.
//
// Scenario: {"c": 1, "events": {"A": [t, x], ...}, "segments": [["A", "B"], ...],
//            "source": "A", "sinks": ["B"]}
// Boost:    {"velocity": V | [Vx, Vy, Vz] | "inf", "branch": "subluminal"|"superluminal",
//            "sign": "negative"|"positive"}    (branch and sign optional)
// Spec:     {"alpha": [re, im] | re, "beta": b, "gamma": g, "phases": [...]}

#include <filesystem>
#include <string>

#include <json.hpp>

#include "superlum/diagrams.hpp"
#include "superlum/invariants.hpp"
#include "superlum/kinematics.hpp"

namespace superlum {

/// All parse functions throw Error(Schema) with the offending field named.
Diagram diagram_from_json(const nlohmann::json& j);
nlohmann::json diagram_to_json(const Diagram& d);

nlohmann::json read_json(const std::filesystem::path& path);
Diagram load_scenario(const std::filesystem::path& path);

/// A number, or one of "inf", "+inf", "-inf" for the infinitely fast observer.
double velocity_from_json(const nlohmann::json& j);
Vec3 vec3_from_json(const nlohmann::json& j);
Boost boost_from_json(const nlohmann::json& j, double c = 1.0);
nlohmann::json boost_to_json(const Boost& b);

InvariantSpec spec_from_json(const nlohmann::json& j);
PhaseSet phases_from_json(const nlohmann::json& j);

/// Segment classes, roles and frame path count of a diagram.
nlohmann::json diagram_report(const Diagram& d);

}  // namespace superlum
