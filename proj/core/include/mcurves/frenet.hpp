#pragma once

#include <functional>
#include <string>

#include "mcurves/curve.hpp"
#include "mcurves/lorentz.hpp"

// Frame machinery for spacelike unit-speed curves with timelike binormal:
//   t' = kappa n,   n' = -kappa t + tau b,   b' = tau n,
// with g(t,t) = g(n,n) = 1 and g(b,b) = -1. The rotation axis of the frame
// is omega = tau t - kappa b; its causal character splits the theory in two
// cases (spacelike when |kappa| < |tau|, timelike when |kappa| > |tau|).

namespace mcurves {

struct FrenetApparatus {
    Vec3 t, n, b;        // unit tangent, principal normal, binormal
    double kappa = 0.0;  // > 0
    double tau = 0.0;
    double s = 0.0;
};

/// Compute the frame at s. Requires a unit-speed spacelike curve with
/// nonvanishing curvature whose binormal t x n is timelike; throws
/// VanishingCurvatureError / WrongCausalTypeError otherwise.
///
/// kappa = |alpha''|, n = alpha''/kappa, b = (t x n)/|t x n|, and the
/// torsion is read from b' = tau n. Expanding b' = t' x n + t x n' kills
/// the t' term and the kappa' term, leaving tau = g(t x alpha''', n)/kappa.
FrenetApparatus frenet_apparatus(const ParametricCurve& curve, double s,
                                 double kappa_floor = tolerance::curvature_floor,
                                 double unit_tol = tolerance::unit_speed);

struct FrenetResiduals {
    double r_t = 0.0;  // |t' - kappa n|   (euclidean norms)
    double r_n = 0.0;  // |n' + kappa t - tau b|
    double r_b = 0.0;  // |b' - tau n|
};

struct FrameDerivatives {
    Vec3 dt, dn, db;
};

/// Residuals of the frame equations given externally computed frame
/// derivatives (pure combination, useful for injecting perturbed frames).
FrenetResiduals frenet_residuals(const FrameDerivatives& d, const FrenetApparatus& fr);

/// Residuals at s with frame derivatives from 5-point central differences
/// of the frame fields (step h).
FrenetResiduals frenet_residuals(const ParametricCurve& curve, double s,
                                 double h = tolerance::fd_step);

enum class DarbouxCase {
    SpacelikeOmega,  // |kappa| < |tau|
    TimelikeOmega,   // |kappa| > |tau|
};

const char* to_string(DarbouxCase c);

struct DarbouxData {
    Vec3 omega;              // tau t - kappa b
    DarbouxCase kind = DarbouxCase::SpacelikeOmega;
    double norm_omega = 0.0; // sqrt(|tau^2 - kappa^2|)
    double theta = 0.0;      // >= 0; hyperbolic angle of the axis in the t-b plane
    Vec3 axis;               // omega / norm_omega (unit direction)
};

/// Case analysis of the frame rotation axis:
///   spacelike omega: kappa = |omega| sinh(theta), |tau| = |omega| cosh(theta)
///   timelike omega:  kappa = |omega| cosh(theta), |tau| = |omega| sinh(theta)
/// For tau >= 0 the unit axis is cosh(theta) t - sinh(theta) b in the first
/// case and sinh(theta) t - cosh(theta) b in the second; tau < 0 mirrors it.
/// Throws NullDarbouxError when |tau^2 - kappa^2| <= tol * max(1, k^2 + t^2).
DarbouxData darboux(const FrenetApparatus& fr, double tol = tolerance::degenerate_pair);

struct HelixVerdict {
    bool is_helix = false;
    double ratio_mean = 0.0;
    double ratio_max_dev = 0.0;  // max |tau/kappa - mean| / max(1, |mean|)
};

/// Constancy test of tau/kappa over n_samples points.
HelixVerdict is_general_helix(const ParametricCurve& curve, int n_samples = 64,
                              double tol = tolerance::helix_ratio);

/// Closed-form curve with constant curvatures and spacelike rotation axis
/// (kappa < |tau|):
///   s -> (kappa sinh(ws), kappa cosh(ws), tau w s) / w^2,  w = sqrt(tau^2 - kappa^2).
/// Unit speed; the frame round-trips the inputs. Throws CaseViolationError
/// when kappa >= |tau| (equality admits no curve in this class).
ParametricCurve w_curve_hyperbolic_helix(double kappa, double tau,
                                         Interval domain = {-5.0, 5.0});

/// Closed-form curve with constant curvatures and timelike rotation axis
/// (kappa > |tau|):
///   s -> (tau w s, kappa cos(ws), -kappa sin(ws)) / w^2,  w = sqrt(kappa^2 - tau^2),
/// oriented so that the extracted torsion equals the requested tau under
/// the b = t x n convention. Throws CaseViolationError when kappa <= |tau|.
ParametricCurve w_curve_circular_helix(double kappa, double tau,
                                       Interval domain = {-5.0, 5.0});

/// tau = 0 specialisation: s -> (0, cos(kappa s), sin(kappa s)) / kappa.
ParametricCurve w_curve_circle(double kappa, Interval domain = {-5.0, 5.0});

/// False iff ||kappa| - |tau|| <= tol * max(|kappa|, |tau|): no curve with
/// constant curvatures exists in this class at equal magnitudes.
bool w_curve_exists(double kappa, double tau, double tol = tolerance::degenerate_pair);

/// Curve obtained by integrating the frame equations with prescribed
/// kappa(s) > 0 and tau(s), starting from the fixed frame
/// t = (0,1,0), n = (0,0,1), b = (-1,0,0) at domain.lo. Adaptive embedded
/// 5(4) Runge-Kutta with dense Hermite output; position and derivatives up
/// to order 3 come from the integrated frame, so the result behaves like a
/// closed-form curve.
ParametricCurve prescribed_curvature_curve(std::function<double(double)> kappa,
                                           std::function<double(double)> tau,
                                           Interval domain, std::string label);

}  // namespace mcurves
