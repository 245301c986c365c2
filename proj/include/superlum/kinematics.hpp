#pragma once

#include <cmath>
#include <functional>
#include <span>

namespace superlum {

struct Event1p1 {
    double t = 0.0;
    double x = 0.0;
};

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    Vec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }
};

inline Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
inline Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
inline Vec3 operator*(double s, Vec3 v) { return v *= s; }
inline Vec3 operator*(Vec3 v, double s) { return v *= s; }
inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

struct Event1p3 {
    double t = 0.0;
    Vec3 r;
};

/// Coordinates seen by a superluminal observer: three temporal axes and a
/// single spatial one.
struct SuperluminalEvent1p3 {
    Vec3 tvec;
    double x = 0.0;
};

enum class Branch { Subluminal, Superluminal };

/// Overall sign of the superluminal branch. It has no V -> 0 limit to fix it,
/// so it is a convention; Negative is the default.
enum class SuperluminalSign { Negative, Positive };

/// A branch-tagged 1+1 transformation parameter.
///
/// `speed` is V (subluminal, |V| < c) or W (superluminal, |W| > c, may be
/// +-infinity for the infinitely fast observer). `K` is the inverse squared
/// invariant speed, so c = 1/sqrt(K).
struct Boost {
    Branch branch = Branch::Subluminal;
    double speed = 0.0;
    double K = 1.0;
    SuperluminalSign sign = SuperluminalSign::Negative;
    /// Keep the W/|W| factor of the superluminal branch. Only ever disabled
    /// to demonstrate that the inverse law breaks without it.
    bool direction_factor = true;

    static Boost subluminal(double velocity, double c = 1.0);
    static Boost superluminal(double velocity, double c = 1.0);
    static Boost identity(double c = 1.0) { return subluminal(0.0, c); }
    /// Picks the branch from |velocity| relative to c.
    static Boost from_velocity(double velocity, double c = 1.0);

    double c() const { return 1.0 / std::sqrt(K); }
};

/// Row-major 2x2 matrix acting on (ct, x).
struct Matrix2 {
    double tt = 1.0;
    double tx = 0.0;
    double xt = 0.0;
    double xx = 1.0;

    double det() const { return tt * xx - tx * xt; }
};

Matrix2 operator*(const Matrix2& a, const Matrix2& b);

/// Throws BranchSpeedViolation or NonpositiveK.
void validate(const Boost& b);

/// Matrix of the boost in natural units (ct, x).
Matrix2 boost_matrix(const Boost& b);

/// Applies a natural-unit matrix to an event given in physical units.
Event1p1 apply(const Matrix2& m, const Event1p1& e, double c = 1.0);

/// Classifies a natural-unit matrix as a branch boost from its entries alone.
/// Throws NotRepresentable for anything outside the two orthochronous
/// families (luminal, time-reversing or non-boost matrices).
Boost boost_from_matrix(const Matrix2& m, double K = 1.0,
                        SuperluminalSign sign = SuperluminalSign::Negative);

Event1p1 boost_1p1(const Event1p1& e, const Boost& b);

enum class Parity { Symmetric, Antisymmetric };

/// The velocity-parametrized linear family x' = A(V)(x - Vt) with the
/// t' row fixed by the relativity constraint.
struct GeneralTransformFamily {
    std::function<double(double)> A;
    Parity parity = Parity::Symmetric;
};

bool satisfies_parity(const GeneralTransformFamily& fam, std::span<const double> samples,
                      double tol = 1e-12);

/// (A(V)A(-V) - 1) / (V^2 A(V)A(-V)).
double transform_constant(const GeneralTransformFamily& fam, double velocity);

Event1p1 general_boost_1p1(const Event1p1& e, const GeneralTransformFamily& fam, double velocity);

/// Returns the common value of transform_constant over the samples, or throws
/// NotConstant when the spread exceeds tol * max(1, |K|).
double extract_K(const GeneralTransformFamily& fam, std::span<const double> samples,
                 double tol = 1e-9);

struct ComposedVelocity {
    double velocity = 0.0;
    bool luminal = false;  // result sits on the light cone within tolerance
};

/// Velocity of the doubly primed frame: frame 1 moves with V1, frame 2 moves
/// with V2 relative to frame 1.
ComposedVelocity compose_velocities_1p1(double v1, double v2, double K = 1.0);

/// Applying the result equals applying b1 then b2.
Boost compose_boosts_1p1(const Boost& b1, const Boost& b2);

/// Hyperbolic rotation angle: (-pi/4, pi/4) for subluminal boosts,
/// (pi/4, 3pi/4) for superluminal ones.
double rapidity(const Boost& b);

double interval_1p1(const Event1p1& a, const Event1p1& b, double c = 1.0);

Event1p3 boost_1p3_subluminal(const Event1p3& e, const Vec3& velocity, double c = 1.0);
SuperluminalEvent1p3 boost_1p3_superluminal(const Event1p3& e, const Vec3& velocity,
                                            double c = 1.0);

/// c^2 sum(dt_i^2) - sum(dr_i^2) for n temporal and m spatial dimensions.
double interval_nm(std::span<const double> dts, std::span<const double> drs, double c = 1.0);

}  // namespace superlum
