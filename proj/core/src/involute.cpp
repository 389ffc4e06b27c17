#include "mcurves/involute.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "mcurves/errors.hpp"

namespace mcurves {

const char* to_string(InvoluteOffset m) {
    return m == InvoluteOffset::Signed ? "signed" : "absolute";
}

InvoluteCurve::InvoluteCurve(std::shared_ptr<const ParametricCurve> evolute, double offset,
                             InvoluteOffset mode)
    : evolute_(std::move(evolute)), offset_(offset), mode_(mode) {
    guard_ = 1e-6 * evolute_->domain().length();
}

bool InvoluteCurve::in_guard_band(double s) const { return std::abs(s - offset_) < guard_; }

void InvoluteCurve::require_outside_guard(double s) const {
    if (in_guard_band(s))
        throw SingularParameterError("involute: s = " + std::to_string(s) +
                                     " inside the guard band around the cusp at c = " +
                                     std::to_string(offset_));
}

Vec3 InvoluteCurve::position(double s) const {
    require_outside_guard(s);
    const double f = mode_ == InvoluteOffset::Signed ? offset_ - s : std::abs(offset_ - s);
    return evolute_->position(s) + f * evolute_->derivative(s, 1);
}

Vec3 InvoluteCurve::velocity(double s) const {
    require_outside_guard(s);
    const FrenetApparatus fr = frenet_apparatus(*evolute_, s);
    Vec3 v = (offset_ - s) * fr.kappa * fr.n;
    if (mode_ == InvoluteOffset::Absolute && s > offset_)
        v = 2.0 * fr.t + (s - offset_) * fr.kappa * fr.n;
    return v;
}

InvoluteCurve involute(std::shared_ptr<const ParametricCurve> evolute, double offset,
                       InvoluteOffset mode) {
    return InvoluteCurve(std::move(evolute), offset, mode);
}

std::array<CausalCharacter, 3> involute_causal_signature(DarbouxCase kind) {
    if (kind == DarbouxCase::SpacelikeOmega)
        return {CausalCharacter::Spacelike, CausalCharacter::Timelike,
                CausalCharacter::Spacelike};
    return {CausalCharacter::Spacelike, CausalCharacter::Spacelike, CausalCharacter::Timelike};
}

namespace {

void check_frame(const InvoluteFrame& f, double tol) {
    const double expected_n = f.kind == DarbouxCase::SpacelikeOmega ? -1.0 : 1.0;
    const double expected_b = -expected_n;
    const bool ok = std::abs(minkowski_inner(f.t, f.t) - 1.0) <= tol &&
                    std::abs(minkowski_inner(f.n, f.n) - expected_n) <= tol &&
                    std::abs(minkowski_inner(f.b, f.b) - expected_b) <= tol &&
                    std::abs(minkowski_inner(f.t, f.n)) <= tol &&
                    std::abs(minkowski_inner(f.t, f.b)) <= tol &&
                    std::abs(minkowski_inner(f.n, f.b)) <= tol;
    if (!ok)
        throw FrameInconsistentError(
            "involute frame fails causal signature / orthogonality checks");
}

}  // namespace

InvoluteFrame involute_frame_transfer(const FrenetApparatus& fr, const DarbouxData& dd,
                                      double tol) {
    InvoluteFrame out;
    out.kind = dd.kind;
    out.signature = involute_causal_signature(dd.kind);
    out.t = fr.n;
    out.n = (-fr.kappa * fr.t + fr.tau * fr.b) / dd.norm_omega;
    out.b = dd.axis;

    const double sh = std::sinh(dd.theta), ch = std::cosh(dd.theta);
    const Vec3 row = dd.kind == DarbouxCase::SpacelikeOmega
                         ? sh * fr.t - ch * fr.b
                         : -ch * fr.t + sh * fr.b;
    const double proj = minkowski_inner(out.n, row) / minkowski_inner(row, row);
    out.normal_sign = proj >= 0.0 ? +1 : -1;

    check_frame(out, tol);
    return out;
}

InvoluteFrame involute_frenet_numeric(const InvoluteCurve& inv, double s, double h) {
    const Interval dom = inv.domain();
    const double margin = 4.0 * h + inv.evolute().derivative_margin();
    if (std::min(s - dom.lo, dom.hi - s) < margin)
        throw StepTooLargeError("involute_frenet_numeric: stencil exceeds domain margin");
    for (int k = -4; k <= 4; ++k)
        if (inv.in_guard_band(s + k * h))
            throw SingularParameterError(
                "involute_frenet_numeric: stencil touches the cusp guard band");

    // Unit tangent from position differences, its derivative from tangent
    // differences; everything downstream of position() only.
    auto unit_tangent = [&](double x) {
        const Vec3 d1 = (inv.position(x - 2.0 * h) - 8.0 * inv.position(x - h) +
                         8.0 * inv.position(x + h) - inv.position(x + 2.0 * h)) /
                        (12.0 * h);
        const double nrm = pseudo_norm(d1);
        if (nrm < 1e3 * h * h)
            throw VanishingCurvatureError("involute_frenet_numeric: tangent too short");
        return d1 / nrm;
    };

    InvoluteFrame out;
    out.t = unit_tangent(s);
    const Vec3 dt = (unit_tangent(s - 2.0 * h) - 8.0 * unit_tangent(s - h) +
                     8.0 * unit_tangent(s + h) - unit_tangent(s + 2.0 * h)) /
                    (12.0 * h);
    const double dtn = pseudo_norm(dt);
    if (dtn < 1e3 * h * h)
        throw VanishingCurvatureError("involute_frenet_numeric: vanishing frame curvature");
    out.n = dt / dtn;
    out.b = pseudo_normalized(lorentz_cross(out.t, out.n));

    const CausalCharacter cn = causal_character(out.n, 1e-6);
    out.kind = cn == CausalCharacter::Timelike ? DarbouxCase::SpacelikeOmega
                                               : DarbouxCase::TimelikeOmega;
    out.signature = {causal_character(out.t, 1e-6), cn, causal_character(out.b, 1e-6)};
    out.normal_sign = +1;
    return out;
}

}  // namespace mcurves
