#include <cmath>
#include <filesystem>
#include <limits>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "superlum/error.hpp"
#include "superlum/fixtures.hpp"
#include "superlum/report.hpp"
#include "superlum/scenario_io.hpp"
#include "superlum/svg.hpp"
#include "superlum/verify.hpp"

using namespace superlum;
using nlohmann::json;

namespace {

const std::filesystem::path kData = SUPERLUM_DATA_DIR;

std::size_t count_of(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
    return n;
}

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InvalidArgument;
}

void check_same(const Diagram& a, const Diagram& b) {
    CHECK(a.c == b.c);
    CHECK(a.source == b.source);
    CHECK(a.sinks == b.sinks);
    CHECK(a.segments == b.segments);
    REQUIRE(a.events.size() == b.events.size());
    for (const auto& [label, e] : a.events) {
        CHECK(b.events.at(label).t == e.t);
        CHECK(b.events.at(label).x == e.x);
    }
}

}  // namespace

TEST_SUITE("scenario io") {

TEST_CASE("shipped scenario files match the built-in fixtures") {
    check_same(load_scenario(kData / "scenarios/fig2.json"), fixtures::superluminal_exchange());
    check_same(load_scenario(kData / "scenarios/fig3.json"), fixtures::decay());
    check_same(load_scenario(kData / "scenarios/fig4.json"), fixtures::mirror());
    check_same(load_scenario(kData / "scenarios/fig5.json"), fixtures::scattering());
}

TEST_CASE("diagram json round trip") {
    const Diagram d = fixtures::scattering();
    check_same(diagram_from_json(diagram_to_json(d)), d);
}

TEST_CASE("schema violations name the field") {
    auto bad = [](const char* text) { return code_of([&] { diagram_from_json(json::parse(text)); }); };
    CHECK(bad("[]") == ErrorCode::Schema);
    CHECK(bad(R"({"segments": []})") == ErrorCode::Schema);
    CHECK(bad(R"({"events": {"A": [0]}, "segments": []})") == ErrorCode::Schema);
    CHECK(bad(R"({"events": {"A": [0, 0]}, "segments": [["A", "B"]]})") == ErrorCode::Schema);
    CHECK(bad(R"({"events": {"A": [0, 0]}, "segments": [], "source": "Z"})") == ErrorCode::Schema);
    CHECK(bad(R"({"c": -1, "events": {"A": [0, 0]}, "segments": []})") == ErrorCode::Schema);
    try {
        diagram_from_json(json::parse(R"({"segments": []})"));
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("events") != std::string::npos);
    }
    CHECK(code_of([] { read_json("/nonexistent/file.json"); }) == ErrorCode::Schema);
}

TEST_CASE("boost and spec json") {
    CHECK(std::isinf(velocity_from_json("inf")));
    CHECK(velocity_from_json("-inf") < 0);
    CHECK(velocity_from_json(0.25) == 0.25);
    CHECK(code_of([] { velocity_from_json("fast"); }) == ErrorCode::Schema);

    const Boost b = boost_from_json(json::parse(R"({"velocity": 3, "sign": "positive"})"), 2.0);
    CHECK(b.branch == Branch::Superluminal);
    CHECK(b.sign == SuperluminalSign::Positive);
    CHECK(b.K == 0.25);
    const json back = boost_to_json(Boost::superluminal(std::numeric_limits<double>::infinity()));
    CHECK(back.at("velocity") == "inf");
    CHECK(back.at("branch") == "superluminal");

    const InvariantSpec s = spec_from_json(json::parse(R"({"alpha": [0, 2], "beta": 1, "gamma": -1})"));
    CHECK(s.alpha == Complex{0, 2});
    CHECK(s.beta == 1.0);
    CHECK(s.gamma == -1.0);
    CHECK(spec_from_json(json::parse(R"({"alpha": 0.5})")).alpha == Complex{0.5, 0});
    CHECK(phases_from_json(json::parse(R"({"phases": [1, 2]})")).size() == 2);
    CHECK(code_of([] { phases_from_json(json::parse(R"({"phases": []})")); }) == ErrorCode::Schema);
}

TEST_CASE("diagram report") {
    const json r = diagram_report(fixtures::superluminal_exchange());
    CHECK(r.at("roles").at("A") == "emission");
    CHECK(r.at("roles").at("B") == "absorption");
    std::size_t super = 0;
    for (const auto& s : r.at("segments")) super += s.at("class") == "superluminal";
    CHECK(super == 1);
}

TEST_CASE("svg rendering") {
    const std::string svg = render_svg(fixtures::superluminal_exchange());
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(count_of(svg, "class=\"superluminal\"") == 1);
    CHECK(count_of(svg, "class=\"subluminal\"") == 4);
    CHECK(count_of(svg, "stroke-dasharray=\"8,5\"") == 1);
    CHECK(svg.find(">A<") != std::string::npos);

    Diagram light;
    light.events = {{"A", {0, 0}}, {"B", {1, 1}}};
    light.segments = {{"A", "B"}};
    const std::string dotted = render_svg(light);
    CHECK(count_of(dotted, "class=\"luminal\"") == 1);
    CHECK(count_of(dotted, "stroke-dasharray=\"2,4\"") >= 1);
    CHECK(dotted == render_svg(light));
}

TEST_CASE("report json") {
    VerificationReport rep;
    rep.checks.push_back({"a", json::object(), 0.5, 1.0, true});
    rep.checks.push_back({"b", json::object(), std::numeric_limits<double>::infinity(), 1.0, false});
    CHECK_FALSE(rep.all_passed());
    CHECK(rep.failures() == 1);
    const json j = rep.to_json();
    CHECK(j.at("all_passed") == false);
    CHECK(j.at("checks").at(1).at("deviation") == "inf");
}

}  // TEST_SUITE

TEST_SUITE("verify suite") {

TEST_CASE("default run passes and is deterministic") {
    const VerificationReport a = run_verification({});
    for (const auto& c : a.checks) {
        INFO(c.name);
        CHECK(c.passed);
    }
    CHECK(a.to_json().dump() == run_verification({}).to_json().dump());
}

TEST_CASE("other seeds pass too") {
    for (std::uint64_t seed : {1ULL, 42ULL, 987654321ULL}) {
        VerifyOptions opt;
        opt.seed = seed;
        const VerificationReport r = run_verification(opt);
        for (const auto& c : r.checks) {
            INFO(seed, " ", c.name);
            CHECK(c.passed);
        }
    }
}

TEST_CASE("sabotage flags produce failures") {
    VerifyOptions broken;
    broken.break_antisymmetric_term = true;
    const VerificationReport r = run_verification(broken);
    CHECK_FALSE(r.all_passed());
    bool inverse_failed = false;
    for (const auto& c : r.checks) inverse_failed |= c.name == "inverse_law" && !c.passed;
    CHECK(inverse_failed);

    VerifyOptions perturbed;
    perturbed.perturb_cauchy = 0.1;
    const VerificationReport p = run_verification(perturbed);
    bool cauchy_failed = false;
    for (const auto& c : p.checks) cauchy_failed |= c.name == "cauchy_condition" && !c.passed;
    CHECK(cauchy_failed);
}

}  // TEST_SUITE
