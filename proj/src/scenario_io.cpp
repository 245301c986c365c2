#include "superlum/scenario_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>

#include "superlum/error.hpp"

namespace superlum {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw Error(ErrorCode::Schema, what); }

const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) schema_error(std::string("missing field '") + name + "'");
    return j.at(name);
}

double number(const json& j, const std::string& what) {
    if (!j.is_number()) schema_error(what + " must be a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) schema_error(what + " must be finite");
    return v;
}

Event1p1 event_from_json(const json& j, const std::string& label) {
    if (!j.is_array() || j.size() != 2) schema_error("event '" + label + "' must be [t, x]");
    return Event1p1{number(j[0], "event '" + label + "' t"), number(j[1], "event '" + label + "' x")};
}

json real_or_string(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
}

}  // namespace

Diagram diagram_from_json(const json& j) {
    if (!j.is_object()) schema_error("scenario must be a JSON object");
    Diagram d;
    if (j.contains("c")) d.c = number(j.at("c"), "c");
    if (!(d.c > 0.0)) schema_error("c must be positive");

    const json& events = field(j, "events");
    if (!events.is_object() || events.empty()) schema_error("'events' must be a nonempty object");
    for (const auto& [label, coords] : events.items()) {
        d.events.emplace(label, event_from_json(coords, label));
    }

    const json& segments = field(j, "segments");
    if (!segments.is_array()) schema_error("'segments' must be an array");
    for (const auto& s : segments) {
        if (!s.is_array() || s.size() != 2 || !s[0].is_string() || !s[1].is_string()) {
            schema_error("each segment must be [from, to] labels");
        }
        d.segments.push_back(Segment{s[0].get<std::string>(), s[1].get<std::string>()});
    }

    if (j.contains("source")) {
        if (!j.at("source").is_string()) schema_error("'source' must be a label");
        d.source = j.at("source").get<std::string>();
        if (!d.events.contains(d.source)) schema_error("'source' names an unknown event");
    }
    if (j.contains("sinks")) {
        if (!j.at("sinks").is_array()) schema_error("'sinks' must be an array of labels");
        for (const auto& s : j.at("sinks")) {
            if (!s.is_string() || !d.events.contains(s.get<std::string>())) {
                schema_error("'sinks' must name known events");
            }
            d.sinks.push_back(s.get<std::string>());
        }
    }
    try {
        validate(d);
    } catch (const Error& e) {
        schema_error(e.what());
    }
    return d;
}

json diagram_to_json(const Diagram& d) {
    json j;
    j["c"] = d.c;
    j["events"] = json::object();
    for (const auto& [label, e] : d.events) j["events"][label] = {e.t, e.x};
    j["segments"] = json::array();
    for (const auto& s : d.segments) j["segments"].push_back({s.from, s.to});
    if (!d.source.empty()) j["source"] = d.source;
    if (!d.sinks.empty()) j["sinks"] = d.sinks;
    return j;
}

json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) schema_error("cannot open '" + path.string() + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        schema_error("'" + path.string() + "' is not valid JSON: " + e.what());
    }
}

Diagram load_scenario(const std::filesystem::path& path) { return diagram_from_json(read_json(path)); }

double velocity_from_json(const json& j) {
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "inf" || s == "+inf" || s == "infinity") return std::numeric_limits<double>::infinity();
        if (s == "-inf" || s == "-infinity") return -std::numeric_limits<double>::infinity();
        schema_error("velocity string must be 'inf' or '-inf'");
    }
    return number(j, "velocity");
}

Vec3 vec3_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3) schema_error("expected a 3-vector");
    return Vec3{number(j[0], "x"), number(j[1], "y"), number(j[2], "z")};
}

Boost boost_from_json(const json& j, double c) {
    const double v = velocity_from_json(field(j, "velocity"));
    Boost b = Boost::from_velocity(v, c);
    if (j.contains("branch")) {
        const auto branch = j.at("branch").get<std::string>();
        if (branch == "subluminal") {
            b.branch = Branch::Subluminal;
        } else if (branch == "superluminal") {
            b.branch = Branch::Superluminal;
        } else {
            schema_error("branch must be 'subluminal' or 'superluminal'");
        }
    }
    if (j.contains("sign")) {
        const auto sign = j.at("sign").get<std::string>();
        if (sign == "negative") {
            b.sign = SuperluminalSign::Negative;
        } else if (sign == "positive") {
            b.sign = SuperluminalSign::Positive;
        } else {
            schema_error("sign must be 'negative' or 'positive'");
        }
    }
    return b;
}

json boost_to_json(const Boost& b) {
    return {{"branch", b.branch == Branch::Subluminal ? "subluminal" : "superluminal"},
            {"velocity", real_or_string(b.speed)},
            {"K", b.K},
            {"sign", b.sign == SuperluminalSign::Negative ? "negative" : "positive"}};
}

InvariantSpec spec_from_json(const json& j) {
    InvariantSpec spec;
    if (j.contains("alpha")) {
        const json& a = j.at("alpha");
        if (a.is_array()) {
            if (a.size() != 2) schema_error("alpha must be [re, im]");
            spec.alpha = Complex{number(a[0], "alpha re"), number(a[1], "alpha im")};
        } else {
            spec.alpha = Complex{number(a, "alpha"), 0.0};
        }
    }
    if (j.contains("beta")) spec.beta = number(j.at("beta"), "beta");
    if (j.contains("gamma")) spec.gamma = number(j.at("gamma"), "gamma");
    return spec;
}

PhaseSet phases_from_json(const json& j) {
    const json& arr = field(j, "phases");
    if (!arr.is_array() || arr.empty()) schema_error("'phases' must be a nonempty array");
    PhaseSet phases;
    for (const auto& p : arr) phases.push_back(number(p, "phase"));
    return phases;
}

json diagram_report(const Diagram& d) {
    json report;
    report["segments"] = json::array();
    for (const auto& s : d.segments) {
        report["segments"].push_back(
            {{"from", s.from}, {"to", s.to}, {"class", std::string(to_string(classify_segment(d, s)))}});
    }
    report["roles"] = json::object();
    for (const auto& r : role_report(d)) report["roles"][r.label] = std::string(to_string(r.role));
    const PathCount paths = count_frame_paths(d);
    report["path_count"] = paths.count;
    report["sources"] = paths.set.sources;
    report["sinks"] = paths.set.sinks;
    report["paths"] = paths.set.paths;
    report["events"] = json::object();
    for (const auto& [label, e] : d.events) report["events"][label] = {e.t, e.x};
    return report;
}

}  // namespace superlum
