#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "superlum/kinematics.hpp"

namespace superlum {

using Complex = std::complex<double>;
using PhaseSet = std::vector<double>;

/// Any function of a set of path phases; the axiom checks take one of these.
using PhaseFunction = std::function<Complex(std::span<const double>)>;

/// Chain of events joined by subluminal straight segments.
struct Path {
    std::vector<Event1p1> vertices;
    double c = 1.0;
};

/// Throws InvalidPath (fewer than two vertices, non-increasing time) or
/// SuperluminalSegment (|dx| >= c dt on some segment).
void validate(const Path& p);

/// scale * proper time along the path.
double path_phase(const Path& p, double scale = 1.0);

struct InvariantSpec {
    Complex alpha{0.0, 1.0};
    double beta = 0.0;
    double gamma = 1.0;
};

/// sum_i exp(alpha * phi_i)
Complex exp_sum(Complex alpha, std::span<const double> phases);

/// n^-beta (sum e^{alpha phi})^gamma (sum e^{-alpha phi})^gamma.
///
/// For purely imaginary alpha the two sums are conjugate and the result is
/// evaluated as n^-beta |sum|^(2 gamma), which is real and nonnegative.
/// Powers of complex bases use the principal branch.
Complex invariant_P(const InvariantSpec& spec, std::span<const double> phases);

PhaseFunction as_function(const InvariantSpec& spec);

struct AxiomReport {
    double deviation = 0.0;  // largest relative deviation seen
    double tolerance = 0.0;
    bool holds = true;       // deviation <= tolerance
};

/// Compares f on `trials` random permutations of the phases with f on the
/// original order.
AxiomReport check_symmetry(const PhaseFunction& f, std::span<const double> phases, int trials,
                           std::mt19937_64& rng, double tol = 1e-12);

/// Compares f(phi) with f(-phi).
AxiomReport check_time_reversal(const PhaseFunction& f, std::span<const double> phases,
                                double tol = 1e-12);

/// Compares f over the n*m pairwise sums phi_i + xi_j with f(phi) f(xi).
AxiomReport check_multiplicativity(const PhaseFunction& f, std::span<const double> phases_a,
                                   std::span<const double> phases_b, double tol = 1e-9);

/// |a - b| / max(|a|, |b|), zero when both vanish.
double relative_deviation(Complex a, Complex b);

struct PhaseSampler {
    enum class Kind { Uniform, Normal };
    Kind kind = Kind::Normal;
    double a = 0.0;  // uniform: low,  normal: mean
    double b = 1.0;  // uniform: high, normal: standard deviation

    double operator()(std::mt19937_64& rng) const;
};

enum class Growth { Diverging, Vanishing, Bounded };

std::string_view to_string(Growth g) noexcept;

struct ScanRow {
    std::size_t n = 0;
    double median_abs_P = 0.0;
};

struct ScanResult {
    std::vector<ScanRow> rows;
    double slope = 0.0;  // least-squares slope of log median|P| against log n
    Growth classification = Growth::Bounded;
};

inline constexpr double kGrowthThreshold = 0.2;

/// Median |P| over `trials` independent phase sets for each n. Trial streams
/// are seeded from (seed, n, trial) so results do not depend on scan order.
ScanResult finiteness_scan(const InvariantSpec& spec, std::span<const std::size_t> n_values,
                           const PhaseSampler& sampler, int trials, std::uint64_t seed);

Growth classify_growth(double slope);

struct Amplitude {
    Complex value;
    std::size_t n_paths = 0;
};

/// (1/n) sum_k exp(i alpha_mag phi_k).
Amplitude amplitude(std::span<const double> phases, double alpha_mag);

}  // namespace superlum
