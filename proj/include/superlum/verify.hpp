#pragma once

#include <cstdint>
#include <optional>

#include "superlum/report.hpp"

namespace superlum {

struct VerifyOptions {
    std::uint64_t seed = 0;
    /// Replaces the pass tolerance of every check that must hold.
    std::optional<double> tolerance;
    /// Drop the W/|W| factor from every superluminal boost.
    bool break_antisymmetric_term = false;
    /// Add this amount to one coefficient entry per Cauchy-condition instance.
    std::optional<double> perturb_cauchy;
};

/// Runs the kinematics, figure, invariant and power-sum property suites.
/// The report is a deterministic function of the options.
VerificationReport run_verification(const VerifyOptions& options);

}  // namespace superlum
