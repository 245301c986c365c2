#include "superlum/sympoly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "superlum/error.hpp"
#include "superlum/kernels.hpp"

namespace superlum {

namespace {

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

void require_nonnegative(std::span<const int> indices) {
    for (int k : indices) {
        if (k < 0) throw Error(ErrorCode::InvalidArgument, "indices must be nonnegative");
    }
}

// powers[i][k] = alpha_i^k for k <= max_power.
std::vector<std::vector<Complex>> power_table(const CoefficientTensor& ct, int max_power) {
    std::vector<std::vector<Complex>> table(ct.order());
    for (std::size_t i = 0; i < ct.order(); ++i) {
        auto& row = table[i];
        row.resize(static_cast<std::size_t>(max_power) + 1);
        row[0] = Complex{1.0, 0.0};
        for (int k = 1; k <= max_power; ++k) row[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(k - 1)] * ct.alphas[i];
    }
    return table;
}

// sum over permutations pi of prod_i alpha_i^k_pi(i), divided by N! prod k_i!.
Complex symmetrized(const std::vector<std::vector<Complex>>& powers, std::span<const int> indices) {
    const std::size_t order = indices.size();
    std::vector<std::size_t> perm(order);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    Complex sum{0.0, 0.0};
    double perms = 0.0;
    do {
        Complex term{1.0, 0.0};
        for (std::size_t i = 0; i < order; ++i) {
            term *= powers[i][static_cast<std::size_t>(indices[perm[i]])];
        }
        sum += term;
        perms += 1.0;
    } while (std::next_permutation(perm.begin(), perm.end()));
    double denom = perms;
    for (int k : indices) denom *= factorial(k);
    return sum / denom;
}

void require_tensor(const CoefficientTensor& ct) {
    if (ct.order() == 0) throw Error(ErrorCode::InvalidArgument, "tensor order N must be positive");
}

}  // namespace

double power_sum(int k, std::span<const double> phases) {
    if (k < 0) throw Error(ErrorCode::InvalidArgument, "power-sum order must be nonnegative");
    return kernels::power_sum(phases, k);
}

std::uint64_t binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw Error(ErrorCode::InvalidArgument, "binomial out of range");
    if (n > 62) throw Error(ErrorCode::InvalidArgument, "binomial overflows 64 bits");
    k = std::min(k, n - k);
    std::uint64_t b = 1;
    for (int i = 1; i <= k; ++i) {
        b = b * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return b;
}

Complex alpha_coefficient(const CoefficientTensor& ct, std::span<const int> indices, std::size_t n) {
    require_tensor(ct);
    if (indices.size() != ct.order()) {
        throw Error(ErrorCode::InvalidArgument, "need one index per tensor constant");
    }
    require_nonnegative(indices);
    const int max_power = indices.empty() ? 0 : *std::max_element(indices.begin(), indices.end());
    const auto powers = power_table(ct, max_power);
    return std::pow(static_cast<double>(n), -ct.beta_prime) * symmetrized(powers, indices);
}

Complex closed_product(const CoefficientTensor& ct, std::span<const double> phases) {
    require_tensor(ct);
    if (phases.empty()) throw Error(ErrorCode::InvalidArgument, "phase set must be nonempty");
    Complex product{std::pow(static_cast<double>(phases.size()), -ct.beta_prime), 0.0};
    for (const Complex& a : ct.alphas) product *= exp_sum(a, phases);
    return product;
}

PhaseFunction tensor_function(const CoefficientTensor& ct) {
    return [ct](std::span<const double> phases) { return closed_product(ct, phases); };
}

CoefficientFn coefficients(const CoefficientTensor& ct) {
    return [ct](std::span<const int> indices, std::size_t n) {
        return alpha_coefficient(ct, indices, n);
    };
}

CoefficientFn perturbed(CoefficientFn base, std::vector<int> entry, double eps) {
    std::sort(entry.begin(), entry.end());
    return [base = std::move(base), entry = std::move(entry), eps](std::span<const int> indices,
                                                                  std::size_t n) {
        Complex value = base(indices, n);
        std::vector<int> sorted(indices.begin(), indices.end());
        std::sort(sorted.begin(), sorted.end());
        if (sorted == entry) value += eps;
        return value;
    };
}

IdentityReport newton_convolution_check(int r, std::span<const double> phases_a,
                                        std::span<const double> phases_b, int r_max, double tol) {
    if (r < 0 || r > r_max) {
        throw Error(ErrorCode::InvalidArgument, "order r must lie in [0, r_max]");
    }
    std::vector<double> joined(phases_a.size() * phases_b.size());
    kernels::pairwise_sums(phases_a, phases_b, joined);

    const double lhs = power_sum(r, joined);
    double rhs = 0.0;
    double rhs_magnitude = 0.0;
    for (int t = 0; t <= r; ++t) {
        const double w = static_cast<double>(binomial(r, t));
        rhs += w * power_sum(t, phases_a) * power_sum(r - t, phases_b);
        rhs_magnitude += w * kernels::abs_power_sum(phases_a, t) * kernels::abs_power_sum(phases_b, r - t);
    }
    const double scale = std::max(kernels::abs_power_sum(joined, r), rhs_magnitude);
    IdentityReport report{lhs, rhs, 0.0, tol, true};
    report.deviation = scale == 0.0 ? std::abs(lhs - rhs) : std::abs(lhs - rhs) / scale;
    report.holds = report.deviation <= tol;
    return report;
}

IdentityReport cauchy_condition_check(const CoefficientFn& coeff, std::span<const int> k,
                                      std::span<const int> s, std::size_t n, std::size_t m,
                                      double tol, int max_index) {
    if (k.size() != s.size() || k.empty()) {
        throw Error(ErrorCode::InvalidArgument, "k and s must have the same nonzero length");
    }
    require_nonnegative(k);
    require_nonnegative(s);
    for (std::span<const int> idx : {k, s}) {
        if (*std::max_element(idx.begin(), idx.end()) > max_index) {
            throw Error(ErrorCode::InvalidArgument, "index exceeds the truncation bound");
        }
    }
    if (n == 0 || m == 0) throw Error(ErrorCode::InvalidArgument, "set sizes must be positive");

    const std::size_t order = k.size();
    double lhs_weight = factorial(static_cast<int>(order));
    for (std::size_t i = 0; i < order; ++i) lhs_weight *= factorial(k[i]) * factorial(s[i]);
    const Complex lhs = lhs_weight * coeff(k, n) * coeff(s, m);

    std::vector<std::size_t> perm(order);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::vector<int> combined(order);
    Complex rhs{0.0, 0.0};
    do {
        double weight = 1.0;
        for (std::size_t i = 0; i < order; ++i) {
            combined[i] = k[i] + s[perm[i]];
            weight *= factorial(combined[i]);
        }
        rhs += weight * coeff(combined, n * m);
    } while (std::next_permutation(perm.begin(), perm.end()));

    IdentityReport report{lhs, rhs, 0.0, tol, true};
    report.deviation = std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
    report.holds = report.deviation <= tol;
    return report;
}

IdentityReport cauchy_condition_check(const CoefficientTensor& ct, std::span<const int> k,
                                      std::span<const int> s, std::size_t n, std::size_t m,
                                      double tol, int max_index) {
    require_tensor(ct);
    if (k.size() != ct.order()) {
        throw Error(ErrorCode::InvalidArgument, "need one index per tensor constant");
    }
    return cauchy_condition_check(coefficients(ct), k, s, n, m, tol, max_index);
}

ExpansionReport expansion_reconstruction_check(const CoefficientTensor& ct,
                                               std::span<const double> phases, int truncation,
                                               double tol) {
    require_tensor(ct);
    if (truncation < 0) throw Error(ErrorCode::InvalidArgument, "truncation must be nonnegative");
    if (phases.empty()) throw Error(ErrorCode::InvalidArgument, "phase set must be nonempty");
    const std::size_t order = ct.order();
    const std::size_t n = phases.size();
    const double norm = std::pow(static_cast<double>(n), -ct.beta_prime);

    // Per-factor relative tail of the exponential series:
    // |sum_{k>T} z^k/k!| <= |z|^(T+1)/(T+1)! e^|z|, measured against sum_j |e^z|.
    double scale = norm;
    double growth = 1.0;
    for (const Complex& a : ct.alphas) {
        double magnitude = 0.0;
        double tail = 0.0;
        for (double p : phases) {
            const Complex z = a * p;
            const double r = std::abs(z);
            magnitude += std::exp(z.real());
            tail += std::pow(r, truncation + 1) / factorial(truncation + 1) * std::exp(r);
        }
        scale *= magnitude;
        growth *= 1.0 + tail / magnitude;
    }
    const double tail_bound = growth - 1.0;
    if (tail_bound > tol) {
        throw Error(ErrorCode::TruncationInsufficient,
                    "exponential tail bound " + std::to_string(tail_bound) + " exceeds tolerance");
    }

    std::vector<double> sums(static_cast<std::size_t>(truncation) + 1);
    for (int k = 0; k <= truncation; ++k) sums[static_cast<std::size_t>(k)] = power_sum(k, phases);
    const auto powers = power_table(ct, truncation);

    Complex truncated{0.0, 0.0};
    std::vector<int> idx(order, 0);
    while (true) {
        double basis = 1.0;
        for (int k : idx) basis *= sums[static_cast<std::size_t>(k)];
        truncated += symmetrized(powers, idx) * basis;
        std::size_t pos = 0;
        while (pos < order && idx[pos] == truncation) idx[pos++] = 0;
        if (pos == order) break;
        ++idx[pos];
    }
    truncated *= norm;

    ExpansionReport report;
    report.truncated = truncated;
    report.closed = closed_product(ct, phases);
    report.deviation = std::abs(report.truncated - report.closed) / scale;
    report.tail_bound = tail_bound;
    report.tolerance = tol;
    report.holds = report.deviation <= tol;
    return report;
}

std::vector<ClosureEntry> closure_checks(std::span<const InvariantSpec> specs,
                                         std::span<const double> phases_a,
                                         std::span<const double> phases_b, double tol,
                                         double fail_threshold) {
    if (specs.size() < 2) throw Error(ErrorCode::InvalidArgument, "need at least two specs");
    std::vector<ClosureEntry> entries;
    auto record = [&](std::string name, const PhaseFunction& f, bool expected) {
        const double dev = check_multiplicativity(f, phases_a, phases_b, tol).deviation;
        const bool passed = expected ? dev <= tol : dev > fail_threshold;
        entries.push_back(ClosureEntry{std::move(name), dev, expected, passed});
    };
    static constexpr double kExponent = 1.5;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        const InvariantSpec p = specs[i];
        record("P" + std::to_string(i + 1) + "^1.5",
               [p](std::span<const double> ph) { return std::pow(invariant_P(p, ph), kExponent); },
               true);
        for (std::size_t j = i + 1; j < specs.size(); ++j) {
            const InvariantSpec q = specs[j];
            const std::string tag = std::to_string(i + 1) + "," + std::to_string(j + 1);
            record("product(" + tag + ")",
                   [p, q](std::span<const double> ph) { return invariant_P(p, ph) * invariant_P(q, ph); },
                   true);
            record("ratio(" + tag + ")",
                   [p, q](std::span<const double> ph) { return invariant_P(p, ph) / invariant_P(q, ph); },
                   true);
            record("sum(" + tag + ")",
                   [p, q](std::span<const double> ph) { return invariant_P(p, ph) + invariant_P(q, ph); },
                   false);
        }
    }
    return entries;
}

}  // namespace superlum
