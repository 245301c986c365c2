#pragma once

// Numeric checks of the power-sum machinery behind the multiplicative
// invariant family: Newton's convolution of power sums over pairwise phase
// sums, the coefficient condition for multiplicativity, its explicit
// solution, and the closed exponential-sum product it resums to.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "superlum/invariants.hpp"

namespace superlum {

/// E^(k)(phi) = sum phi_i^k, with E^(0) = n.
double power_sum(int k, std::span<const double> phases);

/// Exact binomial coefficient; throws InvalidArgument when it would overflow.
std::uint64_t binomial(int n, int k);

/// N constants alpha_1..alpha_N and the normalization exponent beta'.
struct CoefficientTensor {
    std::vector<Complex> alphas;
    double beta_prime = 0.0;

    std::size_t order() const { return alphas.size(); }
};

/// Symmetric expansion coefficient for phase-set size n:
/// n^-beta' * (sum over permutations pi of prod_i alpha_i^k_pi(i)) / (N! prod k_i!).
Complex alpha_coefficient(const CoefficientTensor& ct, std::span<const int> indices, std::size_t n);

/// Closed form n^-beta' prod_i sum_j exp(alpha_i phi_j).
Complex closed_product(const CoefficientTensor& ct, std::span<const double> phases);

/// closed_product as a PhaseFunction, for the axiom checks.
PhaseFunction tensor_function(const CoefficientTensor& ct);

/// Coefficient table indexed by a multi-index and the phase-set size.
using CoefficientFn = std::function<Complex(std::span<const int>, std::size_t)>;

CoefficientFn coefficients(const CoefficientTensor& ct);

/// Adds eps to the entry at `entry` and all its index permutations, for
/// every phase-set size. Used to demonstrate that a broken table fails.
CoefficientFn perturbed(CoefficientFn base, std::vector<int> entry, double eps);

struct IdentityReport {
    Complex lhs;
    Complex rhs;
    double deviation = 0.0;
    double tolerance = 0.0;
    bool holds = true;
};

inline constexpr int kNewtonMaxOrder = 8;

/// E^(r) over the n*m pairwise sums against
/// sum_t C(r,t) E^(t)(phi) E^(r-t)(xi). The deviation is scaled by
/// sum |phi_i + xi_j|^r so that cancellation in odd orders is not mistaken
/// for error.
IdentityReport newton_convolution_check(int r, std::span<const double> phases_a,
                                        std::span<const double> phases_b,
                                        int r_max = kNewtonMaxOrder, double tol = 1e-9);

inline constexpr int kCauchyMaxIndex = 4;

/// Both sides of the coefficient condition
///   N! prod k_i! prod s_i! a^(n)_k a^(m)_s
///     = sum_pi prod_i (k_i + s_pi(i))! a^(nm)_{k + s_pi}.
/// Deviation is |lhs - rhs| / max(1, |lhs|, |rhs|).
IdentityReport cauchy_condition_check(const CoefficientFn& coeff, std::span<const int> k,
                                      std::span<const int> s, std::size_t n, std::size_t m,
                                      double tol = 1e-10, int max_index = kCauchyMaxIndex);
IdentityReport cauchy_condition_check(const CoefficientTensor& ct, std::span<const int> k,
                                      std::span<const int> s, std::size_t n, std::size_t m,
                                      double tol = 1e-10, int max_index = kCauchyMaxIndex);

struct ExpansionReport {
    Complex truncated;
    Complex closed;
    double deviation = 0.0;   // relative to n^-beta' prod_i sum_j |exp(alpha_i phi_j)|
    double tail_bound = 0.0;  // same scale
    double tolerance = 0.0;
    bool holds = true;
};

/// Sums the power-sum expansion with alpha_coefficient entries over
/// 0 <= k_i <= truncation and compares it with closed_product. Throws
/// TruncationInsufficient when the exponential tail bound exceeds tol.
ExpansionReport expansion_reconstruction_check(const CoefficientTensor& ct,
                                               std::span<const double> phases,
                                               int truncation = 12, double tol = 1e-8);

struct ClosureEntry {
    std::string name;
    double deviation = 0.0;
    bool expected_multiplicative = true;
    bool passed = true;
};

/// Products, ratios and powers of invariant_P members must stay
/// multiplicative (deviation <= tol); sums must not (deviation > fail_threshold).
std::vector<ClosureEntry> closure_checks(std::span<const InvariantSpec> specs,
                                         std::span<const double> phases_a,
                                         std::span<const double> phases_b, double tol = 1e-9,
                                         double fail_threshold = 1e-3);

}  // namespace superlum
