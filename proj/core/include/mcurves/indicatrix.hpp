#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "mcurves/involute.hpp"

// Spherical images of the involute frame, natural lifts into the tangent
// bundles of the unit model spheres, the geodesic spray, and the three
// integral-curve verdicts. On a sphere with unit position normal xi and
// eps = g(xi, xi), the spray acceleration at (base, vector) is
//   -eps * g(vector, vector) * base,
// whose integral curves project to affinely parametrised geodesics.

namespace mcurves {

enum class IndicatrixKind { Tangent, PrincipalNormal, Binormal };

const char* to_string(IndicatrixKind k);

/// Curve traced on a model sphere by one involute frame vector. Evaluation
/// goes through the frame transfer at each parameter; velocity and
/// acceleration use 5-point central differences of step fd_step.
class IndicatrixCurve {
public:
    /// Assembled straight from an evolute (no cusp guard).
    IndicatrixCurve(std::shared_ptr<const ParametricCurve> evolute, IndicatrixKind kind,
                    double fd_step = tolerance::frame_fd_step);

    /// Assembled from an involute; inherits its cusp guard band.
    IndicatrixCurve(const InvoluteCurve& source, IndicatrixKind kind,
                    double fd_step = tolerance::frame_fd_step);

    Vec3 point(double s) const;
    Vec3 velocity(double s) const;
    Vec3 acceleration(double s) const;

    IndicatrixKind kind() const { return kind_; }
    ModelSphere sphere() const { return sphere_; }
    DarbouxCase darboux_case() const { return case_; }
    const ParametricCurve& evolute() const { return *evolute_; }
    Interval domain() const { return evolute_->domain(); }
    double fd_step() const { return fd_step_; }

    /// Margin from the domain ends needed for acceleration stencils.
    double derivative_margin() const {
        return 2.0 * fd_step_ + evolute_->derivative_margin();
    }

    bool has_guard() const { return guard_center_.has_value(); }
    bool in_guard_band(double s) const;
    double guard_center() const { return guard_center_.value(); }
    double guard_width() const { return guard_width_; }

private:
    std::shared_ptr<const ParametricCurve> evolute_;
    IndicatrixKind kind_;
    double fd_step_;
    std::optional<double> guard_center_;
    double guard_width_ = 0.0;
    DarbouxCase case_ = DarbouxCase::SpacelikeOmega;
    ModelSphere sphere_ = ModelSphere::S12;
};

IndicatrixCurve indicatrix(const InvoluteCurve& inv, IndicatrixKind kind);

/// Point of T(S12) or T(H02): a base point on the sphere with an attached
/// tangent vector, g(base, vector) = 0. The zero vector is admitted (the
/// lift of a constant curve) and reported as degenerate.
struct TangentBundlePoint {
    Vec3 base;
    Vec3 vector;
    ModelSphere sphere = ModelSphere::S12;

    bool degenerate() const { return euclidean_norm_sq(vector) < 1e-14; }
};

/// (c(s), c'(s)) on the curve's sphere.
TangentBundlePoint natural_lift(const IndicatrixCurve& c, double s);

/// Spray acceleration at v. Validates membership and tangency within tol
/// and throws InvariantViolationError on failure.
Vec3 geodesic_spray(const TangentBundlePoint& v, double tol = tolerance::membership);

/// Reparametrisation-invariant geodesic defect of a curve on a sphere given
/// pointwise data: project the acceleration onto the tangent plane, remove
/// the component along the velocity, and scale by |g(velocity, velocity)|.
/// Zero exactly on pregeodesics. Throws DegenerateSpeedError when the
/// velocity is too short and NullTangentError when it is null.
double pregeodesic_residual(const Vec3& point, const Vec3& velocity, const Vec3& acceleration,
                            ModelSphere sphere, double speed_floor = 1e-7);

double geodesic_residual(const IndicatrixCurve& c, double s, double speed_floor = 1e-7);

struct SprayTrajectory {
    std::vector<double> params;
    std::vector<TangentBundlePoint> points;
    double max_membership_defect = 0.0;
    double max_speed_drift = 0.0;  // drift of g(vector, vector)
};

/// Integrate the spray from v0 over parameter length s_end with n_steps
/// classical RK4 steps. Membership drift beyond drift_tol raises
/// DriftExceededError; drift below it is reported, never corrected.
SprayTrajectory integrate_spray(const TangentBundlePoint& v0, double s_end, int n_steps,
                                double drift_tol = tolerance::spray_drift);

struct GeodesicCurvatures {
    double gamma_n = 0.0;  // theta' / |omega|
    double k_n = 0.0;      // sqrt(theta'^2 + |omega|^2) / |omega|, always >= 1
    double sigma = 0.0;    // gamma_n / k_n
};

/// Geodesic curvatures of the evolute relative to S12 and to the ambient
/// space; theta' by 5-point central differences of the axis angle.
GeodesicCurvatures geodesic_curvatures(const ParametricCurve& evolute, double s,
                                       double h = tolerance::fd_step);

enum class VerdictReason {
    ThetaConstant,
    GeodesicCurvaturesConstant,
    DegenerateAlwaysFalse,
    NumericResidual,
};

const char* to_string(VerdictReason r);

struct GeodesicVerdict {
    IndicatrixKind kind = IndicatrixKind::Tangent;
    DarbouxCase darboux_case = DarbouxCase::SpacelikeOmega;
    ModelSphere sphere = ModelSphere::S12;
    bool is_geodesic = false;
    VerdictReason reason = VerdictReason::NumericResidual;
    double max_residual = 0.0;         // numeric route
    double condition_deviation = 0.0;  // constancy route
    bool routes_agree = true;
    bool degenerate_indicatrix = false;
    int sample_count = 0;
    int undefined_samples = 0;  // parameters where |kappa| == |tau| makes the case undefined
    double tolerance_used = 0.0;
    std::vector<double> residual_profile;
};

/// Tangent-indicatrix verdict: the lift is an integral curve of the spray
/// exactly when the evolute is a general helix (theta constant). The
/// curvature-ratio route decides; the numeric residual route cross-checks.
GeodesicVerdict verdict_tangent_lift(const std::shared_ptr<const ParametricCurve>& evolute,
                                     int n_samples = 64,
                                     double tol = tolerance::residual_finite_diff);

/// Normal-indicatrix verdict: requires both geodesic curvatures constant;
/// the target sphere is H02 for a spacelike axis and S12 for a timelike one.
GeodesicVerdict verdict_normal_lift(const std::shared_ptr<const ParametricCurve>& evolute,
                                    int n_samples = 64,
                                    double tol = tolerance::residual_finite_diff);

/// Binormal-indicatrix verdict: always negative. A geodesic binormal image
/// would force kappa = tau = 0, i.e. a straight line, which admits no
/// involute pairing. Diagnostics record whether the image is constant
/// (helical evolute) or carries a nonzero residual.
GeodesicVerdict verdict_binormal_lift(const std::shared_ptr<const ParametricCurve>& evolute,
                                      int n_samples = 64,
                                      double tol = tolerance::residual_finite_diff);

struct LiftIntegralReport {
    bool tracks = false;
    double max_deviation = 0.0;
};

/// Dynamical side of the verdicts: integrate the spray from the natural
/// lift's initial point and measure the worst euclidean gap to the
/// indicatrix over the domain. Throws DegenerateSpeedError for constant
/// indicatrices.
LiftIntegralReport lift_integral_check(const IndicatrixCurve& c, double tol = 1e-6,
                                       int n_steps = 1000);

}  // namespace mcurves
