#include "superlum/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "superlum/error.hpp"
#include "superlum/kernels.hpp"

namespace superlum {

namespace {

void require_phases(std::span<const double> phases) {
    if (phases.empty()) {
        throw Error(ErrorCode::InvalidArgument, "phase set must contain at least one phase");
    }
    for (double p : phases) {
        if (!std::isfinite(p)) throw Error(ErrorCode::InvalidArgument, "phases must be finite");
    }
}

double median(std::vector<double> v) {
    const std::size_t mid = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
    const double upper = v[mid];
    if (v.size() % 2 == 1) return upper;
    const double lower = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
    return 0.5 * (lower + upper);
}

}  // namespace

void validate(const Path& p) {
    if (p.vertices.size() < 2) {
        throw Error(ErrorCode::InvalidPath, "a path needs at least two vertices");
    }
    for (std::size_t i = 1; i < p.vertices.size(); ++i) {
        const double dt = p.vertices[i].t - p.vertices[i - 1].t;
        const double dx = p.vertices[i].x - p.vertices[i - 1].x;
        if (!(dt > 0.0)) {
            throw Error(ErrorCode::InvalidPath, "path time must increase strictly");
        }
        if (!(std::abs(dx) < p.c * dt)) {
            throw Error(ErrorCode::SuperluminalSegment,
                        "segment " + std::to_string(i) + " is not subluminal");
        }
    }
}

double path_phase(const Path& p, double scale) {
    validate(p);
    double tau = 0.0;
    for (std::size_t i = 1; i < p.vertices.size(); ++i) {
        const double dt = p.vertices[i].t - p.vertices[i - 1].t;
        const double dx = (p.vertices[i].x - p.vertices[i - 1].x) / p.c;
        tau += std::sqrt((dt - dx) * (dt + dx));
    }
    return scale * tau;
}

Complex exp_sum(Complex alpha, std::span<const double> phases) {
    Complex sum{0.0, 0.0};
    for (double p : phases) sum += std::exp(alpha * p);
    return sum;
}

Complex invariant_P(const InvariantSpec& spec, std::span<const double> phases) {
    require_phases(phases);
    const double n = static_cast<double>(phases.size());
    const double norm = std::pow(n, -spec.beta);
    const Complex plus = exp_sum(spec.alpha, phases);
    if (spec.alpha.real() == 0.0) {
        return Complex{norm * std::pow(std::norm(plus), spec.gamma), 0.0};
    }
    const Complex minus = exp_sum(-spec.alpha, phases);
    if (spec.alpha.imag() == 0.0) {
        // Both sums are positive reals.
        return Complex{norm * std::pow(plus.real(), spec.gamma) * std::pow(minus.real(), spec.gamma),
                       0.0};
    }
    return norm * std::pow(plus, spec.gamma) * std::pow(minus, spec.gamma);
}

PhaseFunction as_function(const InvariantSpec& spec) {
    return [spec](std::span<const double> phases) { return invariant_P(spec, phases); };
}

double relative_deviation(Complex a, Complex b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    if (scale == 0.0) return 0.0;
    if (!std::isfinite(scale)) return std::numeric_limits<double>::infinity();
    return std::abs(a - b) / scale;
}

AxiomReport check_symmetry(const PhaseFunction& f, std::span<const double> phases, int trials,
                           std::mt19937_64& rng, double tol) {
    if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be at least 1");
    const Complex reference = f(phases);
    std::vector<double> shuffled(phases.begin(), phases.end());
    AxiomReport report{0.0, tol, true};
    for (int i = 0; i < trials; ++i) {
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        report.deviation = std::max(report.deviation, relative_deviation(reference, f(shuffled)));
    }
    report.holds = report.deviation <= tol;
    return report;
}

AxiomReport check_time_reversal(const PhaseFunction& f, std::span<const double> phases, double tol) {
    std::vector<double> reversed(phases.size());
    std::transform(phases.begin(), phases.end(), reversed.begin(), [](double p) { return -p; });
    AxiomReport report{relative_deviation(f(phases), f(reversed)), tol, true};
    report.holds = report.deviation <= tol;
    return report;
}

AxiomReport check_multiplicativity(const PhaseFunction& f, std::span<const double> phases_a,
                                   std::span<const double> phases_b, double tol) {
    std::vector<double> joined(phases_a.size() * phases_b.size());
    kernels::pairwise_sums(phases_a, phases_b, joined);
    AxiomReport report{relative_deviation(f(joined), f(phases_a) * f(phases_b)), tol, true};
    report.holds = report.deviation <= tol;
    return report;
}

double PhaseSampler::operator()(std::mt19937_64& rng) const {
    if (kind == Kind::Uniform) return std::uniform_real_distribution<double>(a, b)(rng);
    return std::normal_distribution<double>(a, b)(rng);
}

std::string_view to_string(Growth g) noexcept {
    switch (g) {
        case Growth::Diverging: return "diverging";
        case Growth::Vanishing: return "vanishing";
        case Growth::Bounded: return "bounded";
    }
    return "unknown";
}

Growth classify_growth(double slope) {
    if (slope > kGrowthThreshold) return Growth::Diverging;
    if (slope < -kGrowthThreshold) return Growth::Vanishing;
    return Growth::Bounded;
}

ScanResult finiteness_scan(const InvariantSpec& spec, std::span<const std::size_t> n_values,
                           const PhaseSampler& sampler, int trials, std::uint64_t seed) {
    if (n_values.size() < 2) {
        throw Error(ErrorCode::InvalidArgument, "need at least two path counts to fit a slope");
    }
    if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be at least 1");
    for (std::size_t i = 0; i < n_values.size(); ++i) {
        if (n_values[i] == 0 || (i > 0 && n_values[i] <= n_values[i - 1])) {
            throw Error(ErrorCode::InvalidArgument, "path counts must be positive and increasing");
        }
    }

    ScanResult result;
    std::vector<double> magnitudes(static_cast<std::size_t>(trials));
    PhaseSet phases;
    for (std::size_t n : n_values) {
        phases.resize(n);
        for (int trial = 0; trial < trials; ++trial) {
            std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                              static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(trial)};
            std::mt19937_64 rng(seq);
            for (auto& p : phases) p = sampler(rng);
            magnitudes[static_cast<std::size_t>(trial)] = std::abs(invariant_P(spec, phases));
        }
        result.rows.push_back(ScanRow{n, median(magnitudes)});
    }

    // Least-squares slope in log-log coordinates.
    const double count = static_cast<double>(result.rows.size());
    double mx = 0.0;
    double my = 0.0;
    for (const auto& row : result.rows) {
        mx += std::log(static_cast<double>(row.n));
        my += std::log(row.median_abs_P);
    }
    mx /= count;
    my /= count;
    double sxy = 0.0;
    double sxx = 0.0;
    for (const auto& row : result.rows) {
        const double dx = std::log(static_cast<double>(row.n)) - mx;
        sxy += dx * (std::log(row.median_abs_P) - my);
        sxx += dx * dx;
    }
    result.slope = sxy / sxx;
    result.classification = classify_growth(result.slope);
    return result;
}

Amplitude amplitude(std::span<const double> phases, double alpha_mag) {
    require_phases(phases);
    if (!(alpha_mag > 0.0)) throw Error(ErrorCode::InvalidArgument, "alpha_mag must be positive");
    const Complex sum = exp_sum(Complex{0.0, alpha_mag}, phases);
    return Amplitude{sum / static_cast<double>(phases.size()), phases.size()};
}

}  // namespace superlum
