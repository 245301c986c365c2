#include "superlum/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include "superlum/error.hpp"
#include "superlum/tolerance.hpp"

namespace superlum {

namespace {

// Both branch formulas are singular on the light cone; reject a thin band.
constexpr double kLightConeBand = 1e-12;

double sign_of(double v) { return v < 0.0 ? -1.0 : 1.0; }

double convention_sign(SuperluminalSign s) {
    return s == SuperluminalSign::Negative ? -1.0 : 1.0;
}

// sqrt(1 - b^2) and sqrt(b^2 - 1) without cancellation near |b| = 1.
double sub_root(double beta) { return std::sqrt((1.0 - beta) * (1.0 + beta)); }
double super_root(double beta) {
    const double a = std::abs(beta);
    return std::sqrt((a - 1.0) * (a + 1.0));
}

std::string describe(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

Boost Boost::subluminal(double velocity, double c) {
    return Boost{Branch::Subluminal, velocity, 1.0 / (c * c)};
}

Boost Boost::superluminal(double velocity, double c) {
    return Boost{Branch::Superluminal, velocity, 1.0 / (c * c)};
}

Boost Boost::from_velocity(double velocity, double c) {
    return std::abs(velocity) < c ? subluminal(velocity, c) : superluminal(velocity, c);
}

Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
    return Matrix2{a.tt * b.tt + a.tx * b.xt, a.tt * b.tx + a.tx * b.xx,
                   a.xt * b.tt + a.xx * b.xt, a.xt * b.tx + a.xx * b.xx};
}

void validate(const Boost& b) {
    if (!(b.K > 0.0) || !std::isfinite(b.K)) {
        throw Error(ErrorCode::NonpositiveK, "K must be positive and finite, got " + describe(b.K));
    }
    if (std::isnan(b.speed)) {
        throw Error(ErrorCode::BranchSpeedViolation, "speed is NaN");
    }
    const double beta = std::abs(b.speed) * std::sqrt(b.K);
    if (b.branch == Branch::Subluminal) {
        if (!(beta < 1.0 - kLightConeBand)) {
            throw Error(ErrorCode::BranchSpeedViolation,
                        "subluminal branch requires |V| < c, got V=" + describe(b.speed));
        }
    } else if (!(beta > 1.0 + kLightConeBand)) {
        throw Error(ErrorCode::BranchSpeedViolation,
                    "superluminal branch requires |W| > c, got W=" + describe(b.speed));
    }
}

Matrix2 boost_matrix(const Boost& b) {
    validate(b);
    const double beta = b.speed * std::sqrt(b.K);
    if (b.branch == Branch::Subluminal) {
        const double gamma = 1.0 / sub_root(beta);
        return Matrix2{gamma, -gamma * beta, -gamma * beta, gamma};
    }
    const double s = convention_sign(b.sign);
    const double dir = b.direction_factor ? sign_of(beta) : 1.0;
    if (std::isinf(beta)) {
        // k * beta -> s * dir * sign(beta), k -> 0
        const double off = -s * dir * sign_of(beta);
        return Matrix2{0.0, off, off, 0.0};
    }
    const double root = super_root(beta);
    const double k = s * dir / root;
    const double kb = s * dir * beta / root;
    return Matrix2{k, -kb, -kb, k};
}

Event1p1 apply(const Matrix2& m, const Event1p1& e, double c) {
    const double ct = c * e.t;
    return Event1p1{(m.tt * ct + m.tx * e.x) / c, m.xt * ct + m.xx * e.x};
}

Boost boost_from_matrix(const Matrix2& m, double K, SuperluminalSign sign) {
    const double c = 1.0 / std::sqrt(K);
    const double p = m.tt;
    const double q = m.tx;
    const double scale = std::max(std::abs(p), std::abs(q));
    if (!(scale > 0.0) || !std::isfinite(scale)) {
        throw Error(ErrorCode::NotRepresentable, "degenerate matrix");
    }
    if (!near(m.xx, p, 1e-9, 1e-12 * scale) || !near(m.xt, q, 1e-9, 1e-12 * scale)) {
        throw Error(ErrorCode::NotRepresentable, "matrix is not a 1+1 boost");
    }
    const double s = convention_sign(sign);
    if (std::abs(p) > std::abs(q)) {
        if (!near(m.det(), 1.0, 1e-9)) {
            throw Error(ErrorCode::NotRepresentable, "subluminal matrix must be unimodular");
        }
        if (p < 0.0) {
            throw Error(ErrorCode::NotRepresentable, "time-reversing element");
        }
        return Boost{Branch::Subluminal, -q / p * c, K, sign};
    }
    if (std::abs(p) == std::abs(q)) {
        throw Error(ErrorCode::NotRepresentable, "luminal matrix");
    }
    if (!near(m.det(), -1.0, 1e-9)) {
        throw Error(ErrorCode::NotRepresentable, "superluminal matrix must have det -1");
    }
    if (std::abs(p) <= 1e-15 * std::abs(q)) {
        // Infinitely fast observer; the off-diagonal must match the convention.
        if (-s * q < 0.0) {
            throw Error(ErrorCode::NotRepresentable, "time-reversing infinite-speed element");
        }
        return Boost{Branch::Superluminal, std::numeric_limits<double>::infinity(), K, sign};
    }
    const double w = -q / p;
    if (s * sign_of(w) * p < 0.0) {
        throw Error(ErrorCode::NotRepresentable, "time-reversing superluminal element");
    }
    return Boost{Branch::Superluminal, w * c, K, sign};
}

Event1p1 boost_1p1(const Event1p1& e, const Boost& b) {
    return apply(boost_matrix(b), e, b.c());
}

bool satisfies_parity(const GeneralTransformFamily& fam, std::span<const double> samples,
                      double tol) {
    const double sgn = fam.parity == Parity::Symmetric ? 1.0 : -1.0;
    return std::all_of(samples.begin(), samples.end(), [&](double v) {
        return near(fam.A(-v), sgn * fam.A(v), tol, tol);
    });
}

double transform_constant(const GeneralTransformFamily& fam, double velocity) {
    if (velocity == 0.0) {
        throw Error(ErrorCode::ZeroVelocity, "the K expression divides by V^2");
    }
    const double prod = fam.A(velocity) * fam.A(-velocity);
    if (prod == 0.0 || !std::isfinite(prod)) {
        throw Error(ErrorCode::DegenerateA, "A(V)A(-V) must be finite and nonzero at V=" +
                                                describe(velocity));
    }
    return (prod - 1.0) / (velocity * velocity * prod);
}

Event1p1 general_boost_1p1(const Event1p1& e, const GeneralTransformFamily& fam, double velocity) {
    const double k = transform_constant(fam, velocity);
    const double a = fam.A(velocity);
    if (a == 0.0 || !std::isfinite(a)) {
        throw Error(ErrorCode::DegenerateA, "A(V) must be finite and nonzero");
    }
    return Event1p1{a * (e.t - k * velocity * e.x), a * (e.x - velocity * e.t)};
}

double extract_K(const GeneralTransformFamily& fam, std::span<const double> samples, double tol) {
    std::vector<double> distinct;
    for (double v : samples) {
        if (v != 0.0 && std::find(distinct.begin(), distinct.end(), v) == distinct.end()) {
            distinct.push_back(v);
        }
    }
    if (distinct.size() < 2) {
        throw Error(ErrorCode::InvalidArgument, "need at least two distinct nonzero velocities");
    }
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    double sum = 0.0;
    for (double v : distinct) {
        const double k = transform_constant(fam, v);
        lo = std::min(lo, k);
        hi = std::max(hi, k);
        sum += k;
    }
    const double mean = sum / static_cast<double>(distinct.size());
    if (hi - lo > tol * std::max(1.0, std::abs(mean))) {
        throw Error(ErrorCode::NotConstant, "K varies from " + describe(lo) + " to " +
                                                describe(hi) + " across samples");
    }
    return mean;
}

ComposedVelocity compose_velocities_1p1(double v1, double v2, double K) {
    for (double v : {v1, v2}) {
        if (!std::isfinite(v) || (K > 0.0 && std::abs(std::abs(v) * std::sqrt(K) - 1.0) <= kLightConeBand)) {
            throw Error(ErrorCode::BranchSpeedViolation,
                        "input velocity is not valid for either branch: " + describe(v));
        }
    }
    const double denom = 1.0 + K * v1 * v2;
    if (std::abs(denom) <= kAbsTol) {
        throw Error(ErrorCode::PoleError, "1 + K V1 V2 vanishes");
    }
    const double v = (v1 + v2) / denom;
    const bool luminal = K > 0.0 && near(std::abs(v) * std::sqrt(K), 1.0);
    return ComposedVelocity{v, luminal};
}

Boost compose_boosts_1p1(const Boost& b1, const Boost& b2) {
    if (!near(b1.K, b2.K, 1e-14, 0.0)) {
        throw Error(ErrorCode::MixedK, "boosts use different K: " + describe(b1.K) + " vs " +
                                           describe(b2.K));
    }
    if (b1.sign != b2.sign) {
        throw Error(ErrorCode::InvalidArgument, "boosts use different superluminal sign conventions");
    }
    return boost_from_matrix(boost_matrix(b2) * boost_matrix(b1), b1.K, b1.sign);
}

double rapidity(const Boost& b) {
    validate(b);
    const double beta = b.speed * std::sqrt(b.K);
    if (b.branch == Branch::Subluminal) {
        return std::atan(beta);
    }
    return std::numbers::pi / 2.0 - std::atan(1.0 / beta);
}

double interval_1p1(const Event1p1& a, const Event1p1& b, double c) {
    const double dt = b.t - a.t;
    const double dx = b.x - a.x;
    return c * c * dt * dt - dx * dx;
}

Event1p3 boost_1p3_subluminal(const Event1p3& e, const Vec3& velocity, double c) {
    const double speed = norm(velocity);
    if (!(speed < c * (1.0 - kLightConeBand))) {
        throw Error(ErrorCode::BranchSpeedViolation,
                    "subluminal branch requires |V| < c, got |V|=" + describe(speed));
    }
    const double gamma = 1.0 / sub_root(speed / c);
    const double vr = dot(velocity, e.r);
    // (gamma - 1) / V^2 written so that it stays finite as V -> 0.
    const double par = gamma * gamma / (c * c * (gamma + 1.0));
    Event1p3 out;
    out.r = e.r + (par * vr - gamma * e.t) * velocity;
    out.t = gamma * (e.t - vr / (c * c));
    return out;
}

SuperluminalEvent1p3 boost_1p3_superluminal(const Event1p3& e, const Vec3& velocity, double c) {
    const double speed = norm(velocity);
    if (!(speed > c * (1.0 + kLightConeBand))) {
        throw Error(ErrorCode::BranchSpeedViolation,
                    "superluminal branch requires |W| > c, got |W|=" + describe(speed));
    }
    SuperluminalEvent1p3 out;
    if (std::isinf(speed)) {
        out.x = c * e.t;
        out.tvec = (1.0 / c) * e.r;
        return out;
    }
    const Vec3 unit = (1.0 / speed) * velocity;
    const double along = dot(unit, e.r);
    const double root = super_root(speed / c);
    out.x = (speed * e.t - along) / root;
    const Vec3 perp = e.r - along * unit;
    out.tvec = (1.0 / c) * (perp + ((speed * along / c - c * e.t) / root) * unit);
    return out;
}

double interval_nm(std::span<const double> dts, std::span<const double> drs, double c) {
    double time_part = 0.0;
    for (double dt : dts) time_part += dt * dt;
    double space_part = 0.0;
    for (double dr : drs) space_part += dr * dr;
    return c * c * time_part - space_part;
}

}  // namespace superlum
