#include "superlum/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "superlum/diagrams.hpp"
#include "superlum/error.hpp"
#include "superlum/fixtures.hpp"
#include "superlum/invariants.hpp"
#include "superlum/kinematics.hpp"
#include "superlum/sympoly.hpp"

namespace superlum {

namespace {

using nlohmann::json;

class Draw {
public:
    explicit Draw(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin() { return integer(0, 1) == 1; }
    std::mt19937_64& engine() { return rng_; }

    Boost subluminal() { return Boost::subluminal(uniform(-0.99, 0.99)); }
    Boost superluminal() {
        const double w = 1.0 / uniform(0.01, 0.99);
        return Boost::superluminal(coin() ? w : -w);
    }
    Boost any_boost() { return coin() ? subluminal() : superluminal(); }
    Event1p1 event() { return Event1p1{uniform(-1.0, 1.0), uniform(-1.0, 1.0)}; }
    Event1p3 event3() {
        return Event1p3{uniform(-1.0, 1.0), Vec3{uniform(-1.0, 1.0), uniform(-1.0, 1.0), uniform(-1.0, 1.0)}};
    }
    Vec3 direction() {
        while (true) {
            Vec3 v{uniform(-1.0, 1.0), uniform(-1.0, 1.0), uniform(-1.0, 1.0)};
            const double r = norm(v);
            if (r > 0.1 && r <= 1.0) return (1.0 / r) * v;
        }
    }
    PhaseSet phases(std::size_t n, double lo = -1.0, double hi = 1.0) {
        PhaseSet p(n);
        for (auto& v : p) v = uniform(lo, hi);
        return p;
    }

private:
    std::mt19937_64 rng_;
};

class Suite {
public:
    explicit Suite(const VerifyOptions& opt) : opt_(opt) {}

    // A check that must hold: deviation <= tolerance (overridable).
    void hold(std::string name, json params, double deviation, double tolerance) {
        const double tol = opt_.tolerance.value_or(tolerance);
        report_.checks.push_back(
            CheckResult{std::move(name), std::move(params), deviation, tol, deviation <= tol});
    }

    // A check that must fail: deviation must exceed the threshold.
    void breaks(std::string name, json params, double deviation, double threshold) {
        report_.checks.push_back(
            CheckResult{std::move(name), std::move(params), deviation, threshold, deviation > threshold});
    }

    void exact(std::string name, json params, bool ok) {
        report_.checks.push_back(CheckResult{std::move(name), std::move(params), ok ? 0.0 : 1.0, 0.0, ok});
    }

    VerificationReport take() { return std::move(report_); }

private:
    const VerifyOptions& opt_;
    VerificationReport report_;
};

Boost with_factor(Boost b, const VerifyOptions& opt) {
    if (b.branch == Branch::Superluminal && opt.break_antisymmetric_term) b.direction_factor = false;
    return b;
}

double separation_scale(const Event1p1& a, const Event1p1& b) {
    const double dt = b.t - a.t;
    const double dx = b.x - a.x;
    return dt * dt + dx * dx;
}

void kinematics_checks(Suite& suite, Draw& draw, const VerifyOptions& opt) {
    constexpr int kInstances = 1000;

    double cone = 0.0;
    for (int i = 0; i < kInstances; ++i) {
        const Boost b = with_factor(draw.any_boost(), opt);
        const Event1p1 a = draw.event();
        const double dt = draw.uniform(-1.0, 1.0);
        const Event1p1 e{a.t + dt, a.x + (draw.coin() ? dt : -dt)};
        cone = std::max(cone, std::abs(interval_1p1(boost_1p1(a, b), boost_1p1(e, b))));
    }
    suite.hold("light_cone_preservation", {{"instances", kInstances}}, cone, 1e-10);

    double flip = 0.0;
    double keep = 0.0;
    for (int i = 0; i < kInstances; ++i) {
        const Event1p1 a = draw.event();
        const Event1p1 e = draw.event();
        const double s = interval_1p1(a, e);
        const Boost sup = with_factor(draw.superluminal(), opt);
        const Event1p1 a1 = boost_1p1(a, sup);
        const Event1p1 e1 = boost_1p1(e, sup);
        flip = std::max(flip, std::abs(interval_1p1(a1, e1) + s) /
                                  std::max(separation_scale(a, e), separation_scale(a1, e1)));
        const Boost sub = draw.subluminal();
        const Event1p1 a2 = boost_1p1(a, sub);
        const Event1p1 e2 = boost_1p1(e, sub);
        keep = std::max(keep, std::abs(interval_1p1(a2, e2) - s) /
                                  std::max(separation_scale(a, e), separation_scale(a2, e2)));
    }
    suite.hold("interval_sign_flip_1p1", {{"instances", kInstances}}, flip, 1e-10);
    suite.hold("interval_invariance_subluminal_1p1", {{"instances", kInstances}}, keep, 1e-10);

    double flip3 = 0.0;
    double keep3 = 0.0;
    for (int i = 0; i < kInstances; ++i) {
        const Event1p3 a = draw.event3();
        const Event1p3 e = draw.event3();
        const Vec3 dr = e.r - a.r;
        const double dts[] = {e.t - a.t};
        const double drs[] = {dr.x, dr.y, dr.z};
        const double s = interval_nm(dts, drs);
        const double in_scale = dts[0] * dts[0] + dot(dr, dr);

        const Vec3 w = (1.0 / draw.uniform(0.01, 0.99)) * draw.direction();
        const auto a1 = boost_1p3_superluminal(a, w);
        const auto e1 = boost_1p3_superluminal(e, w);
        const Vec3 dtv = e1.tvec - a1.tvec;
        const double dts1[] = {dtv.x, dtv.y, dtv.z};
        const double drs1[] = {e1.x - a1.x};
        const double out_scale = dot(dtv, dtv) + drs1[0] * drs1[0];
        flip3 = std::max(flip3, std::abs(interval_nm(dts1, drs1) + s) / std::max(in_scale, out_scale));

        const Vec3 v = draw.uniform(0.0, 0.99) * draw.direction();
        const auto a2 = boost_1p3_subluminal(a, v);
        const auto e2 = boost_1p3_subluminal(e, v);
        const Vec3 dr2 = e2.r - a2.r;
        const double dts2[] = {e2.t - a2.t};
        const double drs2[] = {dr2.x, dr2.y, dr2.z};
        const double out2 = dts2[0] * dts2[0] + dot(dr2, dr2);
        keep3 = std::max(keep3, std::abs(interval_nm(dts2, drs2) - s) / std::max(in_scale, out2));
    }
    suite.hold("interval_sign_flip_1p3", {{"instances", kInstances}}, flip3, 1e-10);
    suite.hold("interval_invariance_subluminal_1p3", {{"instances", kInstances}}, keep3, 1e-10);

    // Inverse law: boost(-v) after boost(v) is the identity on both branches.
    double inverse = 0.0;
    for (int i = 0; i < kInstances; ++i) {
        const Boost b = with_factor(draw.any_boost(), opt);
        Boost back = b;
        back.speed = -b.speed;
        const Matrix2 m = boost_matrix(back) * boost_matrix(b);
        inverse = std::max({inverse, std::abs(m.tt - 1.0), std::abs(m.tx), std::abs(m.xt),
                            std::abs(m.xx - 1.0)});
    }
    suite.hold("inverse_law", {{"instances", kInstances},
                               {"direction_factor", !opt.break_antisymmetric_term}},
               inverse, 1e-10);

    // Branch XOR rule, orthochronous closure and agreement with sequential application.
    bool xor_ok = true;
    double closure = 0.0;
    double velocity = 0.0;
    double antisym = 0.0;
    int representable = 0;
    for (int i = 0; i < kInstances; ++i) {
        const Boost b1 = with_factor(draw.any_boost(), opt);
        const Boost b2 = with_factor(draw.any_boost(), opt);
        const Event1p1 e = draw.event();
        try {
            const Boost b = compose_boosts_1p1(b1, b2);
            ++representable;
            xor_ok = xor_ok && ((b1.branch == b2.branch) == (b.branch == Branch::Subluminal));
            const Event1p1 direct = boost_1p1(e, b);
            const Event1p1 seq = boost_1p1(boost_1p1(e, b1), b2);
            const double scale = std::max({1.0, std::abs(seq.t), std::abs(seq.x)});
            closure = std::max({closure, std::abs(direct.t - seq.t) / scale,
                                std::abs(direct.x - seq.x) / scale});
            const auto cv = compose_velocities_1p1(b1.speed, b2.speed);
            velocity = std::max(velocity, std::abs(cv.velocity - b.speed) /
                                              std::max(std::abs(cv.velocity), std::abs(b.speed)));
            const auto rev = compose_velocities_1p1(-b2.speed, -b1.speed);
            antisym = std::max(antisym, std::abs(rev.velocity + cv.velocity));
        } catch (const Error&) {
            xor_ok = false;
        }
    }
    suite.exact("branch_xor_rule", {{"instances", kInstances}, {"representable", representable}}, xor_ok);
    suite.hold("composition_matches_sequential", {{"instances", kInstances}}, closure, 1e-10);
    suite.hold("velocity_composition_matches_matrix", {{"instances", kInstances}}, velocity, 1e-10);
    suite.hold("velocity_composition_antisymmetry", {{"instances", kInstances}}, antisym, 1e-12);

    // Infinite-speed limit at |W| = 1e8 c.
    double limit = 0.0;
    for (int i = 0; i < kInstances; ++i) {
        const Event1p1 e = draw.event();
        const double w = draw.coin() ? 1e8 : -1e8;
        const Event1p1 out = boost_1p1(e, with_factor(Boost::superluminal(w), opt));
        const double scale = std::hypot(e.t, e.x);
        limit = std::max({limit, std::abs(out.x - e.t) / scale, std::abs(out.t - e.x) / scale});

        const Event1p3 e3 = draw.event3();
        const auto o3 = boost_1p3_superluminal(e3, 1e8 * draw.direction());
        const double s3 = std::sqrt(e3.t * e3.t + dot(e3.r, e3.r));
        const Vec3 d = o3.tvec - e3.r;
        limit = std::max({limit, std::abs(o3.x - e3.t) / s3, std::abs(d.x) / s3, std::abs(d.y) / s3,
                          std::abs(d.z) / s3});
    }
    suite.hold("infinite_speed_limit", {{"instances", kInstances}, {"speed", 1e8}}, limit, 1e-8);

    double kdev = 0.0;
    for (double K : {-1.0, 0.0, 1.0}) {
        GeneralTransformFamily fam{[K](double v) { return 1.0 / std::sqrt(1.0 - K * v * v); },
                                   Parity::Symmetric};
        const double samples[] = {0.1, 0.5, 0.9};
        kdev = std::max(kdev, std::abs(extract_K(fam, samples) - K));
    }
    suite.hold("extract_K", {{"K", {-1, 0, 1}}}, kdev, 1e-9);
}

void figure_checks(Suite& suite) {
    const Boost inf = Boost::superluminal(std::numeric_limits<double>::infinity());

    const Diagram fig2 = fixtures::superluminal_exchange();
    const Diagram fig2b = transform_diagram(fig2, Boost::subluminal(0.8));
    const std::vector<RoleEntry> before{{"A", Role::Emission}, {"B", Role::Absorption}};
    const std::vector<RoleEntry> after{{"A", Role::Absorption}, {"B", Role::Emission}};
    suite.exact("fig2_role_swap", {{"velocity", 0.8}},
                role_report(fig2) == before && role_report(fig2b) == after);

    const Diagram fig3b = transform_diagram(fixtures::decay(), inf);
    const bool all_super = std::all_of(fig3b.segments.begin(), fig3b.segments.end(), [&](const Segment& s) {
        return classify_segment(fig3b, s) == SpeedClass::Superluminal;
    });
    suite.exact("fig3_all_superluminal", {{"velocity", "inf"}}, all_super);

    const Diagram fig4 = fixtures::mirror();
    suite.exact("fig4_path_count", {{"rest", 1}, {"infinite", 2}},
                count_frame_paths(fig4).count == 1 &&
                    count_frame_paths(transform_diagram(fig4, inf)).count == 2);

    const Diagram fig5 = fixtures::scattering();
    suite.exact("fig5_path_count", {{"rest", 2}, {"infinite", 3}},
                count_frame_paths(fig5).count == 2 &&
                    count_frame_paths(transform_diagram(fig5, inf)).count == 3);
}

InvariantSpec random_spec(Draw& draw, int kind) {
    InvariantSpec spec;
    spec.beta = draw.uniform(-2.0, 2.0);
    switch (kind) {
        case 0:
            spec.alpha = Complex{draw.uniform(-2.0, 2.0), 0.0};
            spec.gamma = draw.uniform(-2.0, 2.0);
            break;
        case 1:
            spec.alpha = Complex{0.0, draw.uniform(-3.0, 3.0)};
            spec.gamma = draw.uniform(-2.0, 2.0);
            break;
        default: {
            // Integer exponents keep principal-branch powers multiplicative.
            spec.alpha = Complex{draw.uniform(-1.0, 1.0), draw.uniform(-1.0, 1.0)};
            const int g = draw.integer(1, 2);
            spec.gamma = draw.coin() ? g : -g;
        }
    }
    return spec;
}

void invariant_checks(Suite& suite, Draw& draw) {
    constexpr int kGrid = 50;
    constexpr int kSumProbes = 4;
    double sym = 0.0;
    double rev = 0.0;
    double mult = 0.0;
    double sum_min = std::numeric_limits<double>::infinity();
    for (int i = 0; i < kGrid; ++i) {
        const InvariantSpec spec = random_spec(draw, i % 3);
        const PhaseFunction f = as_function(spec);
        const PhaseSet a = draw.phases(static_cast<std::size_t>(draw.integer(1, 6)));
        const PhaseSet b = draw.phases(static_cast<std::size_t>(draw.integer(1, 6)));
        sym = std::max(sym, check_symmetry(f, a, 10, draw.engine()).deviation);
        rev = std::max(rev, check_time_reversal(f, a).deviation);
        mult = std::max(mult, check_multiplicativity(f, a, b).deviation);

        InvariantSpec p{Complex{draw.uniform(0.3, 1.5), 0.0}, draw.uniform(-1.0, 1.0), 1.0};
        InvariantSpec q{Complex{0.0, draw.uniform(0.3, 1.5)}, draw.uniform(-1.0, 1.0), 1.0};
        const PhaseFunction sum = [p, q](std::span<const double> ph) {
            return invariant_P(p, ph) + invariant_P(q, ph);
        };
        // Worst violation over a few phase-set pairs: one counterexample suffices.
        double worst = 0.0;
        for (int k = 0; k < kSumProbes; ++k) {
            const PhaseSet a2 = draw.phases(static_cast<std::size_t>(draw.integer(2, 6)));
            const PhaseSet b2 = draw.phases(static_cast<std::size_t>(draw.integer(2, 6)));
            worst = std::max(worst, check_multiplicativity(sum, a2, b2).deviation);
        }
        sum_min = std::min(sum_min, worst);
    }
    suite.hold("axiom_symmetry", {{"instances", kGrid}}, sym, 1e-9);
    suite.hold("axiom_time_reversal", {{"instances", kGrid}}, rev, 1e-9);
    suite.hold("axiom_multiplicativity", {{"instances", kGrid}}, mult, 1e-9);
    suite.breaks("sum_of_solutions_not_multiplicative", {{"instances", kGrid}}, sum_min, 1e-3);

    double interference = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double delta = 2.0 * std::numbers::pi * i / 100.0;
        const double ph[] = {0.0, delta};
        const double half = std::cos(delta / 2.0);
        interference = std::max(interference, std::abs(std::norm(amplitude(ph, 1.0).value) - half * half));
    }
    suite.hold("two_path_interference", {{"instances", 100}}, interference, 1e-12);

    double amp = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double mag = draw.uniform(0.1, 3.0);
        const PhaseSet ph = draw.phases(static_cast<std::size_t>(draw.integer(1, 20)), -5.0, 5.0);
        const double n = static_cast<double>(ph.size());
        const Complex p = invariant_P(InvariantSpec{Complex{0.0, mag}, 0.0, 1.0}, ph);
        const double expect = n * n * std::norm(amplitude(ph, mag).value);
        amp = std::max(amp, std::abs(p.real() - expect) / std::max(1.0, expect));
    }
    suite.hold("amplitude_matches_invariant", {{"instances", 50}}, amp, 1e-12);

    std::vector<InvariantSpec> specs{InvariantSpec{Complex{0.8, 0.0}, 0.5, 1.0},
                                     InvariantSpec{Complex{0.0, 1.3}, 2.0, 1.0},
                                     InvariantSpec{Complex{0.4, 0.0}, -1.0, -0.5}};
    const PhaseSet a = draw.phases(4);
    const PhaseSet b = draw.phases(3);
    for (const auto& entry : closure_checks(specs, a, b)) {
        if (entry.expected_multiplicative) {
            suite.hold("closure_" + entry.name, {{"expect", "multiplicative"}}, entry.deviation, 1e-9);
        } else {
            suite.breaks("closure_" + entry.name, {{"expect", "not multiplicative"}}, entry.deviation, 1e-3);
        }
    }
}

CoefficientTensor paired_tensor(Draw& draw, std::size_t order) {
    CoefficientTensor ct;
    ct.beta_prime = draw.uniform(-1.0, 2.0);
    for (std::size_t i = 0; i < order / 2; ++i) {
        const Complex a{draw.uniform(-1.0, 1.0), draw.uniform(-1.0, 1.0)};
        const Complex unit = a / std::max(1.0, std::abs(a));
        ct.alphas.push_back(unit);
        ct.alphas.push_back(-unit);
    }
    return ct;
}

std::vector<int> random_indices(Draw& draw, std::size_t order) {
    std::vector<int> idx(order);
    for (auto& k : idx) k = draw.integer(0, kCauchyMaxIndex);
    return idx;
}

int total(const std::vector<int>& v) {
    int s = 0;
    for (int k : v) s += k;
    return s;
}

void sympoly_checks(Suite& suite, Draw& draw, const VerifyOptions& opt) {
    double newton = 0.0;
    for (int i = 0; i < 100; ++i) {
        const PhaseSet a = draw.phases(static_cast<std::size_t>(draw.integer(1, 6)), -2.0, 2.0);
        const PhaseSet b = draw.phases(static_cast<std::size_t>(draw.integer(1, 6)), -2.0, 2.0);
        for (int r = 0; r <= kNewtonMaxOrder; ++r) {
            newton = std::max(newton, newton_convolution_check(r, a, b).deviation);
        }
    }
    suite.hold("newton_convolution", {{"instances", 100}, {"r_max", kNewtonMaxOrder}}, newton, 1e-9);

    // Cauchy coefficient condition on the explicit solution: N = 2 over every
    // index pair, N = 4 on random index pairs.
    double cauchy = 0.0;
    double detect = std::numeric_limits<double>::infinity();
    auto run = [&](const CoefficientTensor& ct, const std::vector<int>& k, const std::vector<int>& s) {
        const std::size_t n = static_cast<std::size_t>(draw.integer(5, 12));
        const std::size_t m = static_cast<std::size_t>(draw.integer(5, 12));
        CoefficientFn coeff = coefficients(ct);
        std::vector<int> entry(k.size());
        for (std::size_t i = 0; i < k.size(); ++i) entry[i] = k[i] + s[i];
        const bool perturbable = total(k) > 0 && total(s) > 0;
        if (opt.perturb_cauchy && perturbable) coeff = perturbed(coeff, entry, *opt.perturb_cauchy);
        cauchy = std::max(cauchy, cauchy_condition_check(coeff, k, s, n, m).deviation);
        if (perturbable) {
            const auto broken = perturbed(coefficients(ct), entry, 0.1);
            detect = std::min(detect, cauchy_condition_check(broken, k, s, n, m).deviation);
        }
    };
    {
        const CoefficientTensor ct = paired_tensor(draw, 2);
        for (int k1 = 0; k1 <= kCauchyMaxIndex; ++k1)
            for (int k2 = 0; k2 <= kCauchyMaxIndex; ++k2)
                for (int s1 = 0; s1 <= kCauchyMaxIndex; ++s1)
                    for (int s2 = 0; s2 <= kCauchyMaxIndex; ++s2) run(ct, {k1, k2}, {s1, s2});
    }
    for (int i = 0; i < 200; ++i) {
        const CoefficientTensor ct = paired_tensor(draw, 4);
        run(ct, random_indices(draw, 4), random_indices(draw, 4));
    }
    json cauchy_params{{"orders", {2, 4}}};
    if (opt.perturb_cauchy) cauchy_params["perturbation"] = *opt.perturb_cauchy;
    suite.hold("cauchy_condition", cauchy_params, cauchy, 1e-10);
    suite.breaks("cauchy_detects_perturbation", {{"perturbation", 0.1}}, detect, 1e-3);

    double expansion = 0.0;
    for (int i = 0; i < 20; ++i) {
        const CoefficientTensor ct = paired_tensor(draw, i % 2 == 0 ? 2 : 4);
        const PhaseSet ph = draw.phases(static_cast<std::size_t>(draw.integer(1, 6)));
        expansion = std::max(expansion, expansion_reconstruction_check(ct, ph, 12).deviation);
    }
    suite.hold("expansion_reconstruction", {{"instances", 20}, {"truncation", 12}}, expansion, 1e-8);

    double odd = std::numeric_limits<double>::infinity();
    double even = 0.0;
    for (int i = 0; i < 20; ++i) {
        CoefficientTensor ct;
        for (int j = 0; j < 3; ++j) ct.alphas.emplace_back(draw.uniform(0.3, 1.0), 0.0);
        const PhaseSet ph = draw.phases(static_cast<std::size_t>(draw.integer(2, 6)));
        odd = std::min(odd, check_time_reversal(tensor_function(ct), ph).deviation);
        even = std::max(even, check_time_reversal(tensor_function(paired_tensor(draw, 4)), ph).deviation);
    }
    suite.breaks("odd_order_breaks_time_reversal", {{"instances", 20}, {"N", 3}}, odd, 1e-6);
    suite.hold("paired_order_keeps_time_reversal", {{"instances", 20}, {"N", 4}}, even, 1e-12);
}

}  // namespace

VerificationReport run_verification(const VerifyOptions& options) {
    Suite suite(options);
    Draw draw(options.seed);
    kinematics_checks(suite, draw, options);
    figure_checks(suite);
    invariant_checks(suite, draw);
    sympoly_checks(suite, draw, options);
    return suite.take();
}

}  // namespace superlum
