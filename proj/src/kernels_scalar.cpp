#include <cmath>

#include "superlum/error.hpp"
#include "superlum/kernels.hpp"

namespace superlum::kernels::scalar {

void boost_1p1(const Matrix2& m, double c, std::span<const double> t, std::span<const double> x,
               std::span<double> t_out, std::span<double> x_out) {
    const std::size_t n = t.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double ct = c * t[i];
        const double xi = x[i];
        t_out[i] = (m.tt * ct + m.tx * xi) / c;
        x_out[i] = m.xt * ct + m.xx * xi;
    }
}

void interval_1p1(double c, std::span<const double> dt, std::span<const double> dx,
                  std::span<double> out) {
    const double c2 = c * c;
    for (std::size_t i = 0; i < dt.size(); ++i) {
        out[i] = c2 * (dt[i] * dt[i]) - dx[i] * dx[i];
    }
}

double power_sum(std::span<const double> v, int k) {
    if (k == 0) return static_cast<double>(v.size());
    double sum = 0.0;
    for (double x : v) {
        double p = x;
        for (int j = 1; j < k; ++j) p *= x;
        sum += p;
    }
    return sum;
}

double abs_power_sum(std::span<const double> v, int k) {
    if (k == 0) return static_cast<double>(v.size());
    double sum = 0.0;
    for (double x : v) {
        const double a = std::abs(x);
        double p = a;
        for (int j = 1; j < k; ++j) p *= a;
        sum += p;
    }
    return sum;
}

void pairwise_sums(std::span<const double> a, std::span<const double> b, std::span<double> out) {
    const std::size_t m = b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < m; ++j) out[i * m + j] = a[i] + b[j];
    }
}

}  // namespace superlum::kernels::scalar
