// superlum: command-line front end for the transformation, scenario,
// invariant and verification routines.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or validation error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "superlum/diagrams.hpp"
#include "superlum/error.hpp"
#include "superlum/invariants.hpp"
#include "superlum/kinematics.hpp"
#include "superlum/scenario_io.hpp"
#include "superlum/svg.hpp"
#include "superlum/verify.hpp"

namespace {

using nlohmann::json;
using namespace superlum;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
    std::string input;
    std::string output;
    std::string format;
    std::uint64_t seed = 0;
    std::optional<double> tolerance;
    std::optional<double> c;
    // diagram
    std::string velocity;
    std::string report;
    // verify
    bool break_antisymmetric_term = false;
    std::optional<double> perturb_cauchy;
};

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
    out << text;
}

json require_input(const RunConfig& cfg) {
    if (cfg.input.empty()) throw Error(ErrorCode::InvalidArgument, "--input is required");
    return read_json(cfg.input);
}

double config_c(const RunConfig& cfg, const json& in) {
    double c = 1.0;
    if (in.contains("c")) {
        if (!in.at("c").is_number()) throw Error(ErrorCode::Schema, "c must be a number");
        c = in.at("c").get<double>();
    }
    if (cfg.c) c = *cfg.c;
    if (!(c > 0.0) || !std::isfinite(c)) throw Error(ErrorCode::InvalidArgument, "c must be positive");
    return c;
}

json number_or_inf(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
}

int cmd_boost(const RunConfig& cfg) {
    const json in = require_input(cfg);
    const double c = config_c(cfg, in);
    if (!in.contains("event") || !in.at("event").is_array()) {
        throw Error(ErrorCode::Schema, "'event' must be [t, x] or [t, x, y, z]");
    }
    if (!in.contains("boost")) throw Error(ErrorCode::Schema, "missing field 'boost'");
    const json& ev = in.at("event");
    const json& bj = in.at("boost");
    for (const auto& v : ev) {
        if (!v.is_number()) throw Error(ErrorCode::Schema, "event coordinates must be numbers");
    }

    json out;
    if (ev.size() == 2) {
        const Boost b = boost_from_json(bj, c);
        const Event1p1 e{ev[0].get<double>(), ev[1].get<double>()};
        const Event1p1 r = boost_1p1(e, b);
        out["boost"] = boost_to_json(b);
        out["event"] = {r.t, r.x};
        out["interval_sign"] = b.branch == Branch::Subluminal ? 1 : -1;
    } else if (ev.size() == 4) {
        if (!bj.contains("velocity")) throw Error(ErrorCode::Schema, "missing field 'velocity'");
        const Vec3 v = vec3_from_json(bj.at("velocity"));
        const Event1p3 e{ev[0].get<double>(), Vec3{ev[1].get<double>(), ev[2].get<double>(), ev[3].get<double>()}};
        if (norm(v) < c) {
            const Event1p3 r = boost_1p3_subluminal(e, v, c);
            out["branch"] = "subluminal";
            out["event"] = {r.t, r.r.x, r.r.y, r.r.z};
        } else {
            const SuperluminalEvent1p3 r = boost_1p3_superluminal(e, v, c);
            out["branch"] = "superluminal";
            out["event"] = {{"t", {r.tvec.x, r.tvec.y, r.tvec.z}}, {"x", r.x}};
        }
    } else {
        throw Error(ErrorCode::Schema, "'event' must have 2 or 4 coordinates");
    }
    emit(out.dump(2) + "\n", cfg.output);
    return kExitOk;
}

int cmd_compose(const RunConfig& cfg) {
    const json in = require_input(cfg);
    const double c = config_c(cfg, in);
    if (!in.contains("boosts") || !in.at("boosts").is_array() || in.at("boosts").empty()) {
        throw Error(ErrorCode::Schema, "'boosts' must be a nonempty array");
    }
    Boost total = Boost::identity(c);
    for (const auto& bj : in.at("boosts")) total = compose_boosts_1p1(total, boost_from_json(bj, c));
    const Matrix2 m = boost_matrix(total);
    json out;
    out["boost"] = boost_to_json(total);
    out["rapidity"] = rapidity(total);
    out["matrix"] = {{m.tt, m.tx}, {m.xt, m.xx}};
    out["velocity"] = number_or_inf(total.speed);
    emit(out.dump(2) + "\n", cfg.output);
    return kExitOk;
}

int cmd_diagram(const RunConfig& cfg) {
    const json in = require_input(cfg);
    Diagram d = diagram_from_json(in);
    if (cfg.c) d.c = *cfg.c;
    if (!cfg.velocity.empty()) {
        json v;
        try {
            v = json::parse(cfg.velocity);
        } catch (const json::exception&) {
            v = cfg.velocity;
        }
        d = transform_diagram(d, Boost::from_velocity(velocity_from_json(v), d.c));
    }
    json report = diagram_report(d);
    if (!cfg.velocity.empty()) report["velocity"] = cfg.velocity;

    const std::string format = cfg.format.empty() ? "svg" : cfg.format;
    if (format == "svg") {
        if (cfg.output.empty()) throw Error(ErrorCode::InvalidArgument, "--output is required for SVG");
        emit(render_svg(d), cfg.output);
    } else if (format == "json") {
        if (!cfg.output.empty()) emit(diagram_to_json(d).dump(2) + "\n", cfg.output);
    } else {
        throw Error(ErrorCode::InvalidArgument, "diagram supports --format svg or json");
    }
    const std::string text = report.dump(2) + "\n";
    if (!cfg.report.empty()) emit(text, cfg.report);
    std::cout << text;
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
    VerifyOptions opt;
    opt.seed = cfg.seed;
    opt.tolerance = cfg.tolerance;
    opt.break_antisymmetric_term = cfg.break_antisymmetric_term;
    opt.perturb_cauchy = cfg.perturb_cauchy;
    const VerificationReport report = run_verification(opt);
    emit(report.to_json().dump(2) + "\n", cfg.output);
    for (const auto& check : report.checks) {
        std::cerr << (check.passed ? "PASS " : "FAIL ") << check.name << " deviation=" << check.deviation
                  << " tolerance=" << check.tolerance << '\n';
    }
    std::cerr << report.checks.size() - report.failures() << "/" << report.checks.size()
              << " checks passed\n";
    return report.all_passed() ? kExitOk : kExitFailed;
}

int cmd_scan(const RunConfig& cfg) {
    const json in = require_input(cfg);
    const InvariantSpec spec = spec_from_json(in);
    std::vector<std::size_t> n_values{100, 1000, 10000};
    if (in.contains("n_values")) n_values = in.at("n_values").get<std::vector<std::size_t>>();
    const int trials = in.value("trials", 100);
    PhaseSampler sampler;
    if (in.contains("sampler")) {
        const json& s = in.at("sampler");
        const std::string kind = s.value("kind", "normal");
        if (kind == "uniform") {
            sampler = PhaseSampler{PhaseSampler::Kind::Uniform, s.value("low", 0.0), s.value("high", 1.0)};
        } else if (kind == "normal") {
            sampler = PhaseSampler{PhaseSampler::Kind::Normal, s.value("mean", 0.0), s.value("sigma", 1.0)};
        } else {
            throw Error(ErrorCode::Schema, "sampler kind must be 'normal' or 'uniform'");
        }
    }
    const ScanResult result = finiteness_scan(spec, n_values, sampler, trials, cfg.seed);
    const std::string cls(to_string(result.classification));

    const std::string format = cfg.format.empty() ? "csv" : cfg.format;
    std::ostringstream os;
    if (format == "csv") {
        os.precision(17);
        os << "n,median_abs_P,classification\n";
        for (const auto& row : result.rows) os << row.n << ',' << row.median_abs_P << ',' << cls << '\n';
    } else if (format == "json") {
        json out;
        out["rows"] = json::array();
        for (const auto& row : result.rows) out["rows"].push_back({{"n", row.n}, {"median_abs_P", row.median_abs_P}});
        out["slope"] = result.slope;
        out["classification"] = cls;
        os << out.dump(2) << '\n';
    } else {
        throw Error(ErrorCode::InvalidArgument, "scan supports --format csv or json");
    }
    emit(os.str(), cfg.output);
    return kExitOk;
}

int cmd_amplitude(const RunConfig& cfg) {
    const json in = require_input(cfg);
    const PhaseSet phases = phases_from_json(in);
    const InvariantSpec spec = spec_from_json(in);
    const Amplitude amp = amplitude(phases, std::abs(spec.alpha));
    const Complex p = invariant_P(spec, phases);
    json out;
    out["n_paths"] = amp.n_paths;
    out["value"] = {amp.value.real(), amp.value.imag()};
    out["probability"] = std::norm(amp.value);
    out["invariant_P"] = {p.real(), p.imag()};
    emit(out.dump(2) + "\n", cfg.output);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Subluminal and superluminal transformations, path invariants and checks"};
    app.require_subcommand(1);
    RunConfig cfg;

    app.add_option("--input", cfg.input, "Input JSON file");
    app.add_option("--output", cfg.output, "Output file (stdout when omitted)");
    app.add_option("--format", cfg.format, "Output format: json, csv or svg");
    app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    app.add_option("--tolerance", cfg.tolerance, "Override pass tolerance of verification checks");
    app.add_option("--c", cfg.c, "Invariant speed (default 1 or the input's c)");

    auto* boost = app.add_subcommand("boost", "Transform an event");
    auto* compose = app.add_subcommand("compose", "Compose a chain of 1+1 boosts");
    auto* diagram = app.add_subcommand("diagram", "Transform and render a scenario");
    diagram->add_option("--velocity", cfg.velocity, "Boost velocity (number or inf)");
    diagram->add_option("--report", cfg.report, "Also write the role/path report here");
    auto* verify = app.add_subcommand("verify", "Run the property verification suite");
    verify->add_flag("--break-antisymmetric-term", cfg.break_antisymmetric_term,
                     "Drop the W/|W| factor from superluminal boosts");
    verify->add_option("--perturb-cauchy", cfg.perturb_cauchy, "Perturb one coefficient per Cauchy check");
    auto* scan = app.add_subcommand("scan", "Finiteness scan of an invariant over path counts");
    auto* amp = app.add_subcommand("amplitude", "Path amplitude of a phase set");
    for (auto* sub : {boost, compose, diagram, verify, scan, amp}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*boost) return cmd_boost(cfg);
        if (*compose) return cmd_compose(cfg);
        if (*diagram) return cmd_diagram(cfg);
        if (*verify) return cmd_verify(cfg);
        if (*scan) return cmd_scan(cfg);
        if (*amp) return cmd_amplitude(cfg);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: Schema: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
