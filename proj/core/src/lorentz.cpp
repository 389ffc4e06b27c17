#include "mcurves/lorentz.hpp"

#include <algorithm>
#include <cmath>

#include "mcurves/errors.hpp"

namespace mcurves {

const char* to_string(CausalCharacter c) {
    switch (c) {
        case CausalCharacter::Spacelike: return "spacelike";
        case CausalCharacter::Timelike: return "timelike";
        case CausalCharacter::Null: return "null";
    }
    return "?";
}

const char* to_string(AngleKind k) {
    switch (k) {
        case AngleKind::SpacelikeSpacelikeCos: return "spacelike-spacelike-cos";
        case AngleKind::SpacelikeSpacelikeCosh: return "spacelike-spacelike-cosh";
        case AngleKind::SpacelikeTimelikeSinh: return "spacelike-timelike-sinh";
        case AngleKind::TimelikeTimelikeCosh: return "timelike-timelike-cosh";
    }
    return "?";
}

const char* to_string(SphereMembership m) {
    switch (m) {
        case SphereMembership::OnS12: return "S12";
        case SphereMembership::OnH02: return "H02";
        case SphereMembership::Neither: return "neither";
    }
    return "?";
}

const char* to_string(ModelSphere s) {
    return s == ModelSphere::S12 ? "S12" : "H02";
}

CausalCharacter causal_character(const Vec3& v, double tol) {
    if (v.is_zero()) return CausalCharacter::Spacelike;
    const double q = minkowski_inner(v, v);
    const double scale = std::max(1.0, euclidean_norm_sq(v));
    if (q > tol * scale) return CausalCharacter::Spacelike;
    if (q < -tol * scale) return CausalCharacter::Timelike;
    return CausalCharacter::Null;
}

CausalCharacter span_character(const Vec3& X, const Vec3& Y, double tol) {
    const Vec3 cross = lorentz_cross(X, Y);
    const double dep_scale = std::max(1.0, euclidean_norm_sq(X) * euclidean_norm_sq(Y));
    if (euclidean_norm_sq(cross) <= tol * tol * dep_scale)
        throw DependentInputError("span_character: vectors are linearly dependent");

    const double gxx = minkowski_inner(X, X);
    const double gyy = minkowski_inner(Y, Y);
    const double gxy = minkowski_inner(X, Y);
    const double gram = gxx * gyy - gxy * gxy;
    const double scale = std::max(1.0, std::abs(gxx * gyy) + gxy * gxy);
    if (gram > tol * scale) return CausalCharacter::Spacelike;
    if (gram < -tol * scale) return CausalCharacter::Timelike;
    return CausalCharacter::Null;
}

namespace {

bool linearly_dependent(const Vec3& X, const Vec3& Y) {
    const Vec3 cross = lorentz_cross(X, Y);
    const double scale = std::max(1.0, euclidean_norm_sq(X) * euclidean_norm_sq(Y));
    return euclidean_norm_sq(cross) <= tolerance::causal * tolerance::causal * scale;
}

}  // namespace

AngleResult lorentz_angle(const Vec3& X, const Vec3& Y) {
    const CausalCharacter cx = causal_character(X);
    const CausalCharacter cy = causal_character(Y);
    if (X.is_zero() || Y.is_zero() || cx == CausalCharacter::Null || cy == CausalCharacter::Null)
        throw NullInputError("lorentz_angle: inputs must be non-null and non-zero");

    const double ratio = std::abs(minkowski_inner(X, Y)) / (pseudo_norm(X) * pseudo_norm(Y));
    constexpr double slack = 1e-9;

    if (cx == CausalCharacter::Timelike && cy == CausalCharacter::Timelike) {
        // |g| >= |X||Y| (reverse Cauchy-Schwarz); clamp rounding below 1.
        return {std::acosh(std::max(1.0, ratio)), AngleKind::TimelikeTimelikeCosh};
    }
    if (cx != cy) {
        return {std::asinh(ratio), AngleKind::SpacelikeTimelikeSinh};
    }

    // Two spacelike vectors: the span decides cos vs cosh.
    if (linearly_dependent(X, Y))
        return {0.0, AngleKind::SpacelikeSpacelikeCos};
    switch (span_character(X, Y)) {
        case CausalCharacter::Spacelike:
            if (ratio > 1.0 + slack)
                throw Error("lorentz_angle: |g| <= |X||Y| must hold on a spacelike span");
            return {std::acos(std::clamp(ratio, -1.0, 1.0)), AngleKind::SpacelikeSpacelikeCos};
        case CausalCharacter::Timelike:
            if (ratio < 1.0 - slack)
                throw Error("lorentz_angle: |g| > |X||Y| must hold on a timelike span");
            return {std::acosh(std::max(1.0, ratio)), AngleKind::SpacelikeSpacelikeCosh};
        case CausalCharacter::Null:
            // Degenerate plane: |g| = |X||Y| exactly, the angle closes to zero.
            return {0.0, AngleKind::SpacelikeSpacelikeCos};
    }
    return {0.0, AngleKind::SpacelikeSpacelikeCos};
}

SphereMembership sphere_membership(const Vec3& p, double tol) {
    const double q = minkowski_inner(p, p);
    if (std::abs(q - 1.0) <= tol) return SphereMembership::OnS12;
    if (std::abs(q + 1.0) <= tol) return SphereMembership::OnH02;
    return SphereMembership::Neither;
}

Vec3 pseudo_normalized(const Vec3& v) {
    const double n = pseudo_norm(v);
    if (n == 0.0 || !std::isfinite(n))
        throw NullInputError("pseudo_normalized: vector has vanishing pseudo-norm");
    return v / n;
}

}  // namespace mcurves
