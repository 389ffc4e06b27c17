#pragma once

#include <array>
#include <cmath>

#include "mcurves/tolerances.hpp"

// Linear algebra of the flat metric g = -dx1^2 + dx2^2 + dx3^2 on R^3:
// inner product, vector product, causal classification, angles between
// non-null directions, and membership on the two unit pseudo-spheres
//   S12 = { a : g(a,a) =  1 }   (de Sitter / Lorentzian sphere)
//   H02 = { a : g(a,a) = -1 }   (hyperbolic sphere).

namespace mcurves {

struct Vec3 {
    double x1 = 0.0;
    double x2 = 0.0;
    double x3 = 0.0;

    constexpr Vec3 operator+(const Vec3& o) const { return {x1 + o.x1, x2 + o.x2, x3 + o.x3}; }
    constexpr Vec3 operator-(const Vec3& o) const { return {x1 - o.x1, x2 - o.x2, x3 - o.x3}; }
    constexpr Vec3 operator-() const { return {-x1, -x2, -x3}; }
    constexpr Vec3& operator+=(const Vec3& o) {
        x1 += o.x1;
        x2 += o.x2;
        x3 += o.x3;
        return *this;
    }
    constexpr bool operator==(const Vec3& o) const = default;

    bool is_finite() const {
        return std::isfinite(x1) && std::isfinite(x2) && std::isfinite(x3);
    }
    constexpr bool is_zero() const { return x1 == 0.0 && x2 == 0.0 && x3 == 0.0; }
};

constexpr Vec3 operator*(double a, const Vec3& v) { return {a * v.x1, a * v.x2, a * v.x3}; }
constexpr Vec3 operator*(const Vec3& v, double a) { return a * v; }
constexpr Vec3 operator/(const Vec3& v, double a) { return {v.x1 / a, v.x2 / a, v.x3 / a}; }

/// Signed inner product  g(u,v) = -u1*v1 + u2*v2 + u3*v3.
constexpr double minkowski_inner(const Vec3& u, const Vec3& v) {
    return -u.x1 * v.x1 + u.x2 * v.x2 + u.x3 * v.x3;
}

/// Vector product adapted to g:
///   u x v = (u3*v2 - u2*v3, u3*v1 - u1*v3, u1*v2 - u2*v1).
/// g(u x v, u) = g(u x v, v) = 0 and u x v = -(v x u).
constexpr Vec3 lorentz_cross(const Vec3& u, const Vec3& v) {
    return {u.x3 * v.x2 - u.x2 * v.x3,
            u.x3 * v.x1 - u.x1 * v.x3,
            u.x1 * v.x2 - u.x2 * v.x1};
}

/// Pseudo-norm sqrt(|g(v,v)|). Zero exactly for null vectors and 0.
inline double pseudo_norm(const Vec3& v) {
    return std::sqrt(std::abs(minkowski_inner(v, v)));
}

inline double euclidean_norm_sq(const Vec3& v) {
    return v.x1 * v.x1 + v.x2 * v.x2 + v.x3 * v.x3;
}

inline double euclidean_norm(const Vec3& v) { return std::sqrt(euclidean_norm_sq(v)); }

inline double euclidean_distance(const Vec3& a, const Vec3& b) {
    return euclidean_norm(a - b);
}

enum class CausalCharacter { Spacelike, Timelike, Null };

const char* to_string(CausalCharacter c);

/// Classify v by the sign of g(v,v). The comparison is made against
/// tol * max(1, |v|^2_euclid) so that the verdict is scale-aware; the zero
/// vector counts as spacelike.
CausalCharacter causal_character(const Vec3& v, double tol = tolerance::causal);

/// Causal character of the plane spanned by two independent vectors,
/// decided by the sign of the Gram determinant g(X,X)g(Y,Y) - g(X,Y)^2.
/// Throws DependentInputError when X, Y are linearly dependent.
CausalCharacter span_character(const Vec3& X, const Vec3& Y, double tol = tolerance::causal);

enum class AngleKind {
    SpacelikeSpacelikeCos,   // spacelike pair spanning a spacelike plane
    SpacelikeSpacelikeCosh,  // spacelike pair spanning a timelike plane
    SpacelikeTimelikeSinh,   // mixed pair
    TimelikeTimelikeCosh,    // timelike pair
};

const char* to_string(AngleKind k);

struct AngleResult {
    double theta = 0.0;  // >= 0; radians or hyperbolic parameter by kind
    AngleKind kind = AngleKind::SpacelikeSpacelikeCos;
};

/// Angle between two non-null vectors, dispatched on their causal characters
/// and, for a spacelike pair, on the character of their span. The returned
/// theta >= 0 satisfies the defining identity of its kind:
///   Cos   |g(X,Y)| = |X||Y| cos(theta)
///   Cosh  |g(X,Y)| = |X||Y| cosh(theta)   (both variants)
///   Sinh  |g(X,Y)| = |X||Y| sinh(theta)
/// For two timelike vectors g(X,Y) itself has modulus >= |X||Y|; the identity
/// is stated with |g| so it is solvable regardless of time orientation.
/// Linearly dependent same-character inputs yield theta = 0 (the continuous
/// limit). Throws NullInputError on null or zero input.
AngleResult lorentz_angle(const Vec3& X, const Vec3& Y);

enum class SphereMembership { OnS12, OnH02, Neither };

const char* to_string(SphereMembership m);

/// OnS12 if |g(p,p) - 1| <= tol, OnH02 if |g(p,p) + 1| <= tol, else Neither.
SphereMembership sphere_membership(const Vec3& p, double tol = tolerance::membership);

/// The two unit model spheres.
enum class ModelSphere { S12, H02 };

const char* to_string(ModelSphere s);

/// g(xi, xi) for the unit position normal xi of the sphere: +1 on S12, -1 on H02.
constexpr double sphere_sign(ModelSphere s) { return s == ModelSphere::S12 ? 1.0 : -1.0; }

/// Membership value a point of the sphere must satisfy (equals sphere_sign).
inline ModelSphere sphere_of(CausalCharacter c) {
    return c == CausalCharacter::Timelike ? ModelSphere::H02 : ModelSphere::S12;
}

/// v / pseudo_norm(v). Throws NullInputError when the pseudo-norm vanishes.
Vec3 pseudo_normalized(const Vec3& v);

}  // namespace mcurves
