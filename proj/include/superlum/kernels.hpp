#pragma once

// Data-parallel inner loops. Each kernel has a scalar reference
// implementation and, on x86-64, an AVX2 variant; the public entry points
// dispatch to the best variant the running CPU supports.
//
// Elementwise kernels produce bit-identical results across variants.
// Reductions differ only in summation order.

#include <cstddef>
#include <span>
#include <string_view>

#include "superlum/kinematics.hpp"

namespace superlum::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa) noexcept;

/// Best variant supported by this build and CPU.
Isa best_available() noexcept;
/// Variant currently used by the dispatching entry points.
Isa active() noexcept;
/// Overrides dispatch; returns false (and changes nothing) if unsupported.
bool select(Isa isa) noexcept;

/// (t_out, x_out) = m applied to (c t, x), converted back to physical time.
/// All spans must have the same length; output may alias input.
void boost_1p1(const Matrix2& m, double c, std::span<const double> t, std::span<const double> x,
               std::span<double> t_out, std::span<double> x_out);

/// out[i] = c^2 dt[i]^2 - dx[i]^2.
void interval_1p1(double c, std::span<const double> dt, std::span<const double> dx,
                  std::span<double> out);

/// sum(v[i]^k); k = 0 returns the element count.
double power_sum(std::span<const double> v, int k);

/// sum(|v[i]|^k); the magnitude scale of power_sum.
double abs_power_sum(std::span<const double> v, int k);

/// out[i * b.size() + j] = a[i] + b[j].
void pairwise_sums(std::span<const double> a, std::span<const double> b, std::span<double> out);

namespace scalar {
void boost_1p1(const Matrix2& m, double c, std::span<const double> t, std::span<const double> x,
               std::span<double> t_out, std::span<double> x_out);
void interval_1p1(double c, std::span<const double> dt, std::span<const double> dx,
                  std::span<double> out);
double power_sum(std::span<const double> v, int k);
double abs_power_sum(std::span<const double> v, int k);
void pairwise_sums(std::span<const double> a, std::span<const double> b, std::span<double> out);
}  // namespace scalar

#if defined(SUPERLUM_HAVE_AVX2)
namespace avx2 {
void boost_1p1(const Matrix2& m, double c, std::span<const double> t, std::span<const double> x,
               std::span<double> t_out, std::span<double> x_out);
void interval_1p1(double c, std::span<const double> dt, std::span<const double> dx,
                  std::span<double> out);
double power_sum(std::span<const double> v, int k);
double abs_power_sum(std::span<const double> v, int k);
void pairwise_sums(std::span<const double> a, std::span<const double> b, std::span<double> out);
}  // namespace avx2
#endif

}  // namespace superlum::kernels
