#include <immintrin.h>

#include <cmath>

#include "superlum/kernels.hpp"

namespace superlum::kernels::avx2 {

namespace {

double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

__m256d abs_pd(__m256d v) { return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v); }

}  // namespace

void boost_1p1(const Matrix2& m, double c, std::span<const double> t, std::span<const double> x,
               std::span<double> t_out, std::span<double> x_out) {
    const std::size_t n = t.size();
    const __m256d vc = _mm256_set1_pd(c);
    const __m256d tt = _mm256_set1_pd(m.tt);
    const __m256d tx = _mm256_set1_pd(m.tx);
    const __m256d xt = _mm256_set1_pd(m.xt);
    const __m256d xx = _mm256_set1_pd(m.xx);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d ct = _mm256_mul_pd(vc, _mm256_loadu_pd(t.data() + i));
        const __m256d xi = _mm256_loadu_pd(x.data() + i);
        const __m256d tn = _mm256_add_pd(_mm256_mul_pd(tt, ct), _mm256_mul_pd(tx, xi));
        const __m256d xn = _mm256_add_pd(_mm256_mul_pd(xt, ct), _mm256_mul_pd(xx, xi));
        _mm256_storeu_pd(t_out.data() + i, _mm256_div_pd(tn, vc));
        _mm256_storeu_pd(x_out.data() + i, xn);
    }
    for (; i < n; ++i) {
        const double ct = c * t[i];
        const double xi = x[i];
        t_out[i] = (m.tt * ct + m.tx * xi) / c;
        x_out[i] = m.xt * ct + m.xx * xi;
    }
}

void interval_1p1(double c, std::span<const double> dt, std::span<const double> dx,
                  std::span<double> out) {
    const std::size_t n = dt.size();
    const double c2 = c * c;
    const __m256d vc2 = _mm256_set1_pd(c2);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d a = _mm256_loadu_pd(dt.data() + i);
        const __m256d b = _mm256_loadu_pd(dx.data() + i);
        const __m256d r = _mm256_sub_pd(_mm256_mul_pd(vc2, _mm256_mul_pd(a, a)), _mm256_mul_pd(b, b));
        _mm256_storeu_pd(out.data() + i, r);
    }
    for (; i < n; ++i) out[i] = c2 * (dt[i] * dt[i]) - dx[i] * dx[i];
}

namespace {

template <bool Abs>
double power_sum_impl(std::span<const double> v, int k) {
    if (k == 0) return static_cast<double>(v.size());
    const std::size_t n = v.size();
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d x = _mm256_loadu_pd(v.data() + i);
        if constexpr (Abs) x = abs_pd(x);
        __m256d p = x;
        for (int j = 1; j < k; ++j) p = _mm256_mul_pd(p, x);
        acc = _mm256_add_pd(acc, p);
    }
    double sum = hsum(acc);
    for (; i < n; ++i) {
        const double x = Abs ? std::abs(v[i]) : v[i];
        double p = x;
        for (int j = 1; j < k; ++j) p *= x;
        sum += p;
    }
    return sum;
}

}  // namespace

double power_sum(std::span<const double> v, int k) { return power_sum_impl<false>(v, k); }

double abs_power_sum(std::span<const double> v, int k) { return power_sum_impl<true>(v, k); }

void pairwise_sums(std::span<const double> a, std::span<const double> b, std::span<double> out) {
    const std::size_t m = b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        const __m256d ai = _mm256_set1_pd(a[i]);
        double* row = out.data() + i * m;
        std::size_t j = 0;
        for (; j + 4 <= m; j += 4) {
            _mm256_storeu_pd(row + j, _mm256_add_pd(ai, _mm256_loadu_pd(b.data() + j)));
        }
        for (; j < m; ++j) row[j] = a[i] + b[j];
    }
}

}  // namespace superlum::kernels::avx2
