#include <cmath>
#include <cstring>
#include <vector>

#include <doctest.h>

#include "superlum/error.hpp"
#include "superlum/kernels.hpp"
#include "support.hpp"

using namespace superlum;
using superlum::testing::Gen;

namespace {

// Sizes straddle the 4-lane width and its remainders.
constexpr std::size_t kSizes[] = {0, 1, 3, 4, 5, 7, 8, 9, 31, 64, 1001};

bool bit_equal(const std::vector<double>& a, const std::vector<double>& b) {
    return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

std::vector<double> random_vec(Gen& g, std::size_t n, double span = 5.0) {
    std::vector<double> v(n);
    for (auto& x : v) x = g.uniform(-span, span);
    return v;
}

// Reference evaluation in long double, used as the accuracy oracle.
long double naive_power_sum(const std::vector<double>& v, int k, bool absolute) {
    if (k == 0) return static_cast<long double>(v.size());
    long double s = 0;
    for (double x : v) {
        const long double b = absolute ? std::fabs(static_cast<long double>(x)) : x;
        s += std::pow(b, k);
    }
    return s;
}

struct IsaGuard {
    kernels::Isa saved = kernels::active();
    ~IsaGuard() { kernels::select(saved); }
};

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("dispatch") {
    IsaGuard guard;
    CHECK(kernels::select(kernels::Isa::Scalar));
    CHECK(kernels::active() == kernels::Isa::Scalar);
    CHECK(kernels::to_string(kernels::Isa::Scalar) == "scalar");
    CHECK(kernels::to_string(kernels::Isa::Avx2) == "avx2");
    const bool has = kernels::select(kernels::Isa::Avx2);
    CHECK(has == (kernels::best_available() == kernels::Isa::Avx2));
}

TEST_CASE("scalar kernels against direct evaluation") {
    Gen g(31);
    const Matrix2 m = boost_matrix(Boost::subluminal(0.6));
    std::vector<double> t{1.0, 2.0}, x{0.0, -1.0}, to(2), xo(2);
    kernels::scalar::boost_1p1(m, 1.0, t, x, to, xo);
    CHECK(to[0] == doctest::Approx(1.25));
    CHECK(xo[0] == doctest::Approx(-0.75));

    std::vector<double> out(2);
    kernels::scalar::interval_1p1(2.0, t, x, out);
    CHECK(out[0] == 4.0);
    CHECK(out[1] == 15.0);

    const std::vector<double> p{1, 2, 3};
    CHECK(kernels::scalar::power_sum(p, 0) == 3.0);
    CHECK(kernels::scalar::power_sum(p, 2) == 14.0);
    CHECK(kernels::scalar::abs_power_sum(std::vector<double>{-1, 1}, 1) == 2.0);

    std::vector<double> sums(6);
    kernels::scalar::pairwise_sums(std::vector<double>{1, 2}, p, sums);
    CHECK(sums == std::vector<double>{2, 3, 4, 3, 4, 5});

    for (int k = 0; k <= 8; ++k) {
        const auto v = random_vec(g, 57, 2.0);
        const long double ref = naive_power_sum(v, k, false);
        const long double scale = naive_power_sum(v, k, true);
        CHECK(std::fabs(kernels::scalar::power_sum(v, k) - ref) <= 1e-13L * scale);
        CHECK(std::fabs(kernels::scalar::abs_power_sum(v, k) - scale) <= 1e-13L * scale);
    }
}

TEST_CASE("dispatching entry points validate sizes") {
    std::vector<double> a(3), b(4), out(3);
    CHECK_THROWS_AS(kernels::interval_1p1(1.0, a, b, out), Error);
    CHECK_THROWS_AS(kernels::boost_1p1(Matrix2{}, 1.0, a, b, out, out), Error);
    CHECK_THROWS_AS(kernels::pairwise_sums(a, b, out), Error);
    CHECK_THROWS_AS(kernels::power_sum(a, -1), Error);
}

TEST_CASE("batched boost may run in place") {
    Gen g(32);
    auto t = random_vec(g, 13);
    auto x = random_vec(g, 13);
    std::vector<double> t2(13), x2(13);
    const Matrix2 m = boost_matrix(Boost::superluminal(-2.5));
    kernels::boost_1p1(m, 1.0, t, x, t2, x2);
    kernels::boost_1p1(m, 1.0, t, x, t, x);
    CHECK(bit_equal(t, t2));
    CHECK(bit_equal(x, x2));
}

#if defined(SUPERLUM_HAVE_AVX2)
TEST_CASE("avx2 elementwise kernels are bit-identical to scalar") {
    if (kernels::best_available() != kernels::Isa::Avx2) {
        MESSAGE("CPU lacks AVX2; equivalence not exercised");
        return;
    }
    Gen g(33);
    for (std::size_t n : kSizes) {
        for (int rep = 0; rep < 5; ++rep) {
            const double c = g.uniform(0.5, 3.0);
            const Boost b = g.boost(c);
            const Matrix2 m = boost_matrix(b);
            const auto t = random_vec(g, n);
            const auto x = random_vec(g, n);
            std::vector<double> ts(n), xs(n), tv(n), xv(n);
            kernels::scalar::boost_1p1(m, c, t, x, ts, xs);
            kernels::avx2::boost_1p1(m, c, t, x, tv, xv);
            CHECK(bit_equal(ts, tv));
            CHECK(bit_equal(xs, xv));

            std::vector<double> is(n), iv(n);
            kernels::scalar::interval_1p1(c, t, x, is);
            kernels::avx2::interval_1p1(c, t, x, iv);
            CHECK(bit_equal(is, iv));

            const auto a = random_vec(g, n % 13 + 1);
            std::vector<double> ps(a.size() * n), pv(a.size() * n);
            kernels::scalar::pairwise_sums(a, t, ps);
            kernels::avx2::pairwise_sums(a, t, pv);
            CHECK(bit_equal(ps, pv));
        }
    }
}

TEST_CASE("avx2 reductions agree with scalar to rounding") {
    if (kernels::best_available() != kernels::Isa::Avx2) return;
    Gen g(34);
    for (std::size_t n : kSizes) {
        const auto v = random_vec(g, n, 2.0);
        for (int k = 0; k <= 8; ++k) {
            const double scale = kernels::scalar::abs_power_sum(v, k);
            const double tol = 1e-14 * std::max(1.0, scale);
            CHECK(std::abs(kernels::avx2::power_sum(v, k) - kernels::scalar::power_sum(v, k)) <= tol);
            CHECK(std::abs(kernels::avx2::abs_power_sum(v, k) - scale) <= tol);
        }
    }
}

TEST_CASE("dispatched results do not depend on the selected variant beyond rounding") {
    if (kernels::best_available() != kernels::Isa::Avx2) return;
    IsaGuard guard;
    Gen g(35);
    const auto v = random_vec(g, 777, 1.5);
    kernels::select(kernels::Isa::Scalar);
    const double s = kernels::power_sum(v, 5);
    kernels::select(kernels::Isa::Avx2);
    const double a = kernels::power_sum(v, 5);
    CHECK(std::abs(s - a) <= 1e-14 * kernels::abs_power_sum(v, 5));
}
#endif

}  // TEST_SUITE
