#pragma once

#include <array>
#include <memory>

#include "mcurves/frenet.hpp"

// Involutes of a spacelike unit-speed evolute with timelike binormal:
//   involute(s) = evolute(s) + (c - s) * t(s).
// The involute tangent is parallel to the evolute normal away from the cusp
// at s = c, and the involute frame is obtained from the evolute frame by a
// hyperbolic rotation in the t-b plane through the axis angle theta.

namespace mcurves {

enum class InvoluteOffset {
    Signed,    // (c - s): smooth through s = c, tangent flips sign past it
    Absolute,  // |c - s|: folded branch for s > c (compatibility mode)
};

const char* to_string(InvoluteOffset m);

class InvoluteCurve {
public:
    /// `offset` is the involute constant c. Evaluation within the guard band
    /// |s - c| < guard_width() raises SingularParameterError (the derivative
    /// vanishes at the cusp, so frames blow up there).
    InvoluteCurve(std::shared_ptr<const ParametricCurve> evolute, double offset,
                  InvoluteOffset mode = InvoluteOffset::Signed);

    Vec3 position(double s) const;

    /// Analytic first derivative (c - s) kappa(s) n(s); in Absolute mode the
    /// branch s > c instead gives 2 t + (s - c) kappa n, which is no longer
    /// normal to the evolute tangent.
    Vec3 velocity(double s) const;

    const ParametricCurve& evolute() const { return *evolute_; }
    const std::shared_ptr<const ParametricCurve>& evolute_ptr() const { return evolute_; }
    double offset() const { return offset_; }
    InvoluteOffset offset_mode() const { return mode_; }
    Interval domain() const { return evolute_->domain(); }

    double guard_width() const { return guard_; }
    bool in_guard_band(double s) const;

private:
    void require_outside_guard(double s) const;

    std::shared_ptr<const ParametricCurve> evolute_;
    double offset_ = 0.0;
    InvoluteOffset mode_ = InvoluteOffset::Signed;
    double guard_ = 0.0;
};

InvoluteCurve involute(std::shared_ptr<const ParametricCurve> evolute, double offset,
                       InvoluteOffset mode = InvoluteOffset::Signed);

/// Frenet frame of the involute expressed through the evolute frame.
struct InvoluteFrame {
    Vec3 t, n, b;  // involute tangent, principal normal, binormal
    DarbouxCase kind = DarbouxCase::SpacelikeOmega;
    std::array<CausalCharacter, 3> signature{};
    /// Orientation of the emitted normal relative to the classical transfer
    /// row (sinh(theta) t - cosh(theta) b for a spacelike axis,
    /// -cosh(theta) t + sinh(theta) b for a timelike one): +1 or -1.
    int normal_sign = +1;
};

/// Transfer the evolute frame at one parameter to the involute frame.
///
///   t* = n
///   n* = (-kappa t + tau b) / |omega|   (the involute curvature direction)
///   b* = omega / |omega|                (the unit frame-rotation axis)
///
/// The normal is oriented along the derivative of the involute tangent, so
/// the curvature of the involute stays positive; the binormal completes the
/// frame with the causal signature of the case: (spacelike, timelike,
/// spacelike) for a spacelike axis, (spacelike, spacelike, timelike) for a
/// timelike one. Throws FrameInconsistentError if the completed frame fails
/// those invariants at tolerance.
InvoluteFrame involute_frame_transfer(const FrenetApparatus& fr, const DarbouxData& dd,
                                      double tol = tolerance::frame);

/// Independent oracle: the involute frame from finite differences of the
/// involute position alone, never via the transfer formulas. Agreement with
/// involute_frame_transfer is up to per-vector sign.
InvoluteFrame involute_frenet_numeric(const InvoluteCurve& inv, double s,
                                      double h = tolerance::frame_fd_step);

/// Fixed causal signature (t*, n*, b*) of each case.
std::array<CausalCharacter, 3> involute_causal_signature(DarbouxCase kind);

}  // namespace mcurves
