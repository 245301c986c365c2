#include <atomic>

#include "superlum/error.hpp"
#include "superlum/kernels.hpp"

namespace superlum::kernels {

namespace {

bool cpu_has_avx2() noexcept {
#if defined(SUPERLUM_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

std::atomic<Isa>& current() {
    static std::atomic<Isa> isa{best_available()};
    return isa;
}

void require_same_size(std::size_t a, std::size_t b, const char* what) {
    if (a != b) throw Error(ErrorCode::InvalidArgument, what);
}

}  // namespace

std::string_view to_string(Isa isa) noexcept {
    return isa == Isa::Avx2 ? "avx2" : "scalar";
}

Isa best_available() noexcept { return cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar; }

Isa active() noexcept { return current().load(std::memory_order_relaxed); }

bool select(Isa isa) noexcept {
    if (isa == Isa::Avx2 && !cpu_has_avx2()) return false;
    current().store(isa, std::memory_order_relaxed);
    return true;
}

void boost_1p1(const Matrix2& m, double c, std::span<const double> t, std::span<const double> x,
               std::span<double> t_out, std::span<double> x_out) {
    require_same_size(t.size(), x.size(), "boost_1p1: t and x differ in length");
    require_same_size(t.size(), t_out.size(), "boost_1p1: t_out has the wrong length");
    require_same_size(t.size(), x_out.size(), "boost_1p1: x_out has the wrong length");
#if defined(SUPERLUM_HAVE_AVX2)
    if (active() == Isa::Avx2) return avx2::boost_1p1(m, c, t, x, t_out, x_out);
#endif
    scalar::boost_1p1(m, c, t, x, t_out, x_out);
}

void interval_1p1(double c, std::span<const double> dt, std::span<const double> dx,
                  std::span<double> out) {
    require_same_size(dt.size(), dx.size(), "interval_1p1: dt and dx differ in length");
    require_same_size(dt.size(), out.size(), "interval_1p1: out has the wrong length");
#if defined(SUPERLUM_HAVE_AVX2)
    if (active() == Isa::Avx2) return avx2::interval_1p1(c, dt, dx, out);
#endif
    scalar::interval_1p1(c, dt, dx, out);
}

double power_sum(std::span<const double> v, int k) {
    if (k < 0) throw Error(ErrorCode::InvalidArgument, "power_sum: k must be nonnegative");
#if defined(SUPERLUM_HAVE_AVX2)
    if (active() == Isa::Avx2) return avx2::power_sum(v, k);
#endif
    return scalar::power_sum(v, k);
}

double abs_power_sum(std::span<const double> v, int k) {
    if (k < 0) throw Error(ErrorCode::InvalidArgument, "abs_power_sum: k must be nonnegative");
#if defined(SUPERLUM_HAVE_AVX2)
    if (active() == Isa::Avx2) return avx2::abs_power_sum(v, k);
#endif
    return scalar::abs_power_sum(v, k);
}

void pairwise_sums(std::span<const double> a, std::span<const double> b, std::span<double> out) {
    require_same_size(a.size() * b.size(), out.size(), "pairwise_sums: out has the wrong length");
#if defined(SUPERLUM_HAVE_AVX2)
    if (active() == Isa::Avx2) return avx2::pairwise_sums(a, b, out);
#endif
    scalar::pairwise_sums(a, b, out);
}

}  // namespace superlum::kernels
