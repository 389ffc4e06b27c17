#include "mcurves/indicatrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "mcurves/errors.hpp"

namespace mcurves {

const char* to_string(IndicatrixKind k) {
    switch (k) {
        case IndicatrixKind::Tangent: return "tangent";
        case IndicatrixKind::PrincipalNormal: return "normal";
        case IndicatrixKind::Binormal: return "binormal";
    }
    return "?";
}

const char* to_string(VerdictReason r) {
    switch (r) {
        case VerdictReason::ThetaConstant: return "theta-constant";
        case VerdictReason::GeodesicCurvaturesConstant: return "geodesic-curvatures-constant";
        case VerdictReason::DegenerateAlwaysFalse: return "degenerate-always-false";
        case VerdictReason::NumericResidual: return "numeric-residual";
    }
    return "?";
}

namespace {

ModelSphere sphere_for(IndicatrixKind kind, DarbouxCase c) {
    const auto sig = involute_causal_signature(c);
    const CausalCharacter ch = kind == IndicatrixKind::Tangent          ? sig[0]
                               : kind == IndicatrixKind::PrincipalNormal ? sig[1]
                                                                         : sig[2];
    return sphere_of(ch);
}

DarbouxCase probe_case(const ParametricCurve& evolute,
                       const std::optional<double>& guard_center, double guard_width) {
    const Interval dom = evolute.domain();
    const double m = evolute.derivative_margin();
    // Walk a few candidate parameters; the first one with a defined case wins.
    for (int i = 1; i < 16; ++i) {
        const double s = dom.lo + m + (dom.length() - 2.0 * m) * i / 16.0;
        if (guard_center && std::abs(s - *guard_center) < guard_width) continue;
        try {
            return darboux(frenet_apparatus(evolute, s)).kind;
        } catch (const Error&) {
            continue;
        }
    }
    throw NullDarbouxError("indicatrix: no parameter with a defined axis case");
}

}  // namespace

IndicatrixCurve::IndicatrixCurve(std::shared_ptr<const ParametricCurve> evolute,
                                 IndicatrixKind kind, double fd_step)
    : evolute_(std::move(evolute)), kind_(kind), fd_step_(fd_step) {
    case_ = probe_case(*evolute_, std::nullopt, 0.0);
    sphere_ = sphere_for(kind_, case_);
}

IndicatrixCurve::IndicatrixCurve(const InvoluteCurve& source, IndicatrixKind kind,
                                 double fd_step)
    : evolute_(source.evolute_ptr()), kind_(kind), fd_step_(fd_step),
      guard_center_(source.offset()), guard_width_(source.guard_width()) {
    case_ = probe_case(*evolute_, guard_center_, guard_width_);
    sphere_ = sphere_for(kind_, case_);
}

bool IndicatrixCurve::in_guard_band(double s) const {
    return guard_center_ && std::abs(s - *guard_center_) < guard_width_;
}

Vec3 IndicatrixCurve::point(double s) const {
    if (in_guard_band(s))
        throw SingularParameterError("indicatrix: s inside the cusp guard band");
    const FrenetApparatus fr = frenet_apparatus(*evolute_, s);
    const InvoluteFrame frame = involute_frame_transfer(fr, darboux(fr));
    switch (kind_) {
        case IndicatrixKind::Tangent: return frame.t;
        case IndicatrixKind::PrincipalNormal: return frame.n;
        case IndicatrixKind::Binormal: return frame.b;
    }
    return frame.t;
}

Vec3 IndicatrixCurve::velocity(double s) const {
    const double h = fd_step_;
    return (point(s - 2.0 * h) - 8.0 * point(s - h) + 8.0 * point(s + h) - point(s + 2.0 * h)) /
           (12.0 * h);
}

Vec3 IndicatrixCurve::acceleration(double s) const {
    const double h = fd_step_;
    return (-1.0 * point(s - 2.0 * h) + 16.0 * point(s - h) - 30.0 * point(s) +
            16.0 * point(s + h) - point(s + 2.0 * h)) /
           (12.0 * h * h);
}

IndicatrixCurve indicatrix(const InvoluteCurve& inv, IndicatrixKind kind) {
    return IndicatrixCurve(inv, kind);
}

TangentBundlePoint natural_lift(const IndicatrixCurve& c, double s) {
    return {c.point(s), c.velocity(s), c.sphere()};
}

Vec3 geodesic_spray(const TangentBundlePoint& v, double tol) {
    const double eps = sphere_sign(v.sphere);
    const double membership_defect = std::abs(minkowski_inner(v.base, v.base) - eps);
    const double tangency_defect = std::abs(minkowski_inner(v.base, v.vector));
    const double scale = std::max(1.0, euclidean_norm_sq(v.vector));
    if (membership_defect > tol || tangency_defect > tol * scale)
        throw InvariantViolationError("geodesic_spray: point violates membership/tangency");
    return -eps * minkowski_inner(v.vector, v.vector) * v.base;
}

double pregeodesic_residual(const Vec3& point, const Vec3& velocity, const Vec3& acceleration,
                            ModelSphere sphere, double speed_floor) {
    if (euclidean_norm_sq(velocity) <= speed_floor * speed_floor)
        throw DegenerateSpeedError("pregeodesic_residual: velocity below the speed floor");
    const double gvv = minkowski_inner(velocity, velocity);
    if (std::abs(gvv) <= speed_floor * std::max(1.0, euclidean_norm_sq(velocity)))
        throw NullTangentError("pregeodesic_residual: null velocity");

    const double eps = sphere_sign(sphere);
    // Tangential part of the acceleration: subtract the component along the
    // unit position normal, then the component along the velocity.
    const Vec3 tangential = acceleration - (minkowski_inner(acceleration, point) / eps) * point;
    const Vec3 defect = tangential - (minkowski_inner(tangential, velocity) / gvv) * velocity;
    return euclidean_norm(defect) / std::abs(gvv);
}

double geodesic_residual(const IndicatrixCurve& c, double s, double speed_floor) {
    return pregeodesic_residual(c.point(s), c.velocity(s), c.acceleration(s), c.sphere(),
                                speed_floor);
}

SprayTrajectory integrate_spray(const TangentBundlePoint& v0, double s_end, int n_steps,
                                double drift_tol) {
    if (n_steps < 1) throw Error("integrate_spray: n_steps must be >= 1");
    geodesic_spray(v0);  // validates the initial point

    const double eps = sphere_sign(v0.sphere);
    const double g0 = minkowski_inner(v0.vector, v0.vector);
    auto accel = [eps](const Vec3& base, const Vec3& vec) {
        return -eps * minkowski_inner(vec, vec) * base;
    };

    SprayTrajectory out;
    out.params.reserve(static_cast<std::size_t>(n_steps) + 1);
    out.points.reserve(static_cast<std::size_t>(n_steps) + 1);
    out.params.push_back(0.0);
    out.points.push_back(v0);

    const double h = s_end / n_steps;
    Vec3 x = v0.base, v = v0.vector;
    for (int i = 0; i < n_steps; ++i) {
        const Vec3 k1x = v,               k1v = accel(x, v);
        const Vec3 k2x = v + 0.5 * h * k1v, k2v = accel(x + 0.5 * h * k1x, v + 0.5 * h * k1v);
        const Vec3 k3x = v + 0.5 * h * k2v, k3v = accel(x + 0.5 * h * k2x, v + 0.5 * h * k2v);
        const Vec3 k4x = v + h * k3v,     k4v = accel(x + h * k3x, v + h * k3v);
        x += (h / 6.0) * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
        v += (h / 6.0) * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);

        const double defect = std::abs(minkowski_inner(x, x) - eps);
        out.max_membership_defect = std::max(out.max_membership_defect, defect);
        out.max_speed_drift =
            std::max(out.max_speed_drift, std::abs(minkowski_inner(v, v) - g0));
        if (defect > drift_tol)
            throw DriftExceededError("integrate_spray: sphere-membership defect " +
                                     std::to_string(defect) + " exceeded tolerance");
        out.params.push_back(h * (i + 1));
        out.points.push_back({x, v, v0.sphere});
    }
    return out;
}

GeodesicCurvatures geodesic_curvatures(const ParametricCurve& evolute, double s, double h) {
    const double margin = 2.0 * h + evolute.derivative_margin();
    if (std::min(s - evolute.domain().lo, evolute.domain().hi - s) < margin)
        throw StepTooLargeError("geodesic_curvatures: stencil exceeds domain margin");

    auto theta_at = [&](double x) { return darboux(frenet_apparatus(evolute, x)).theta; };
    const double dtheta = (theta_at(s - 2.0 * h) - 8.0 * theta_at(s - h) +
                           8.0 * theta_at(s + h) - theta_at(s + 2.0 * h)) /
                          (12.0 * h);
    const double w = darboux(frenet_apparatus(evolute, s)).norm_omega;

    GeodesicCurvatures out;
    out.gamma_n = dtheta / w;
    out.k_n = std::sqrt(dtheta * dtheta + w * w) / w;
    out.sigma = out.gamma_n / out.k_n;
    return out;
}

namespace {

// Longest run of usable parameters: domain minus stencil margins, split by
// the guard band when one is present.
Interval usable_range(const IndicatrixCurve& ind) {
    const Interval dom = ind.domain();
    const double m = ind.derivative_margin() + 2.0 * ind.fd_step();
    Interval r{dom.lo + m, dom.hi - m};
    if (ind.has_guard()) {
        const double glo = ind.guard_center() - ind.guard_width() - m;
        const double ghi = ind.guard_center() + ind.guard_width() + m;
        const Interval left{r.lo, std::min(r.hi, glo)};
        const Interval right{std::max(r.lo, ghi), r.hi};
        r = left.length() >= right.length() ? left : right;
    }
    if (r.length() <= 0.0)
        throw OutOfDomainError("indicatrix: domain too small for stencils");
    return r;
}

struct ResidualSweep {
    double max_residual = 0.0;
    int degenerate = 0;
    int undefined = 0;  // samples where the axis case itself is undefined
    int evaluated = 0;
    std::vector<double> profile;
};

// Constant images (unit-sphere points) wobble by cancellation noise that can
// exceed any absolute speed floor at large frame magnitudes, so constancy is
// decided on the image spread, not on the differenced velocity.
bool image_is_constant(const IndicatrixCurve& ind, const Interval& r, int n_samples) {
    Vec3 first;
    bool have_first = false;
    double spread = 0.0;
    for (int i = 0; i < n_samples; ++i) {
        const double s = r.lo + r.length() * i / (n_samples - 1);
        try {
            const Vec3 p = ind.point(s);
            if (!have_first) {
                first = p;
                have_first = true;
            }
            spread = std::max(spread, euclidean_distance(p, first));
        } catch (const NullDarbouxError&) {
            // |kappa| == |tau| at this parameter; skip it here, the
            // residual sweep records it as undefined.
        }
    }
    return have_first && spread <= 1e-4;
}

ResidualSweep sweep_residuals(const IndicatrixCurve& ind, int n_samples) {
    const Interval r = usable_range(ind);
    ResidualSweep out;
    if (image_is_constant(ind, r, n_samples)) {
        out.degenerate = n_samples;
        out.profile.assign(static_cast<std::size_t>(n_samples),
                           std::numeric_limits<double>::quiet_NaN());
        return out;
    }
    out.profile.reserve(static_cast<std::size_t>(n_samples));
    for (int i = 0; i < n_samples; ++i) {
        const double s = r.lo + r.length() * i / (n_samples - 1);
        try {
            const double res = geodesic_residual(ind, s);
            out.max_residual = std::max(out.max_residual, res);
            out.profile.push_back(res);
            ++out.evaluated;
        } catch (const DegenerateSpeedError&) {
            out.profile.push_back(std::numeric_limits<double>::quiet_NaN());
            ++out.degenerate;
        } catch (const NullDarbouxError&) {
            out.profile.push_back(std::numeric_limits<double>::quiet_NaN());
            ++out.undefined;
        }
    }
    return out;
}

}  // namespace

GeodesicVerdict verdict_tangent_lift(const std::shared_ptr<const ParametricCurve>& evolute,
                                     int n_samples, double tol) {
    if (n_samples < 2) throw Error("verdict: n_samples must be >= 2");
    IndicatrixCurve ind(evolute, IndicatrixKind::Tangent);

    GeodesicVerdict v;
    v.kind = IndicatrixKind::Tangent;
    v.darboux_case = ind.darboux_case();
    v.sphere = ind.sphere();
    v.reason = VerdictReason::ThetaConstant;
    v.sample_count = n_samples;
    v.tolerance_used = tol;

    const HelixVerdict hv = is_general_helix(*evolute, n_samples);
    v.is_geodesic = hv.is_helix;
    v.condition_deviation = hv.ratio_max_dev;

    ResidualSweep sweep = sweep_residuals(ind, n_samples);
    v.max_residual = sweep.max_residual;
    v.residual_profile = std::move(sweep.profile);
    v.undefined_samples = sweep.undefined;
    v.degenerate_indicatrix = sweep.degenerate == n_samples;
    v.routes_agree =
        sweep.evaluated == 0 ? false : (v.is_geodesic == (v.max_residual <= tol));
    return v;
}

GeodesicVerdict verdict_normal_lift(const std::shared_ptr<const ParametricCurve>& evolute,
                                    int n_samples, double tol) {
    if (n_samples < 2) throw Error("verdict: n_samples must be >= 2");
    IndicatrixCurve ind(evolute, IndicatrixKind::PrincipalNormal);

    GeodesicVerdict v;
    v.kind = IndicatrixKind::PrincipalNormal;
    v.darboux_case = ind.darboux_case();
    v.sphere = ind.sphere();
    v.reason = VerdictReason::GeodesicCurvaturesConstant;
    v.sample_count = n_samples;
    v.tolerance_used = tol;

    // Constancy of both geodesic curvatures over the sample sweep; samples
    // where the axis case is undefined are skipped and counted.
    const Interval r = usable_range(ind);
    std::vector<GeodesicCurvatures> gc;
    gc.reserve(static_cast<std::size_t>(n_samples));
    double mean_g = 0.0, mean_k = 0.0;
    for (int i = 0; i < n_samples; ++i) {
        const double s = r.lo + r.length() * i / (n_samples - 1);
        try {
            gc.push_back(geodesic_curvatures(*evolute, s));
            mean_g += gc.back().gamma_n;
            mean_k += gc.back().k_n;
        } catch (const NullDarbouxError&) {
        }
    }
    if (gc.empty())
        throw NullDarbouxError("verdict_normal_lift: axis case undefined at every sample");
    mean_g /= static_cast<double>(gc.size());
    mean_k /= static_cast<double>(gc.size());
    double dev = 0.0;
    for (const auto& c : gc) {
        dev = std::max(dev, std::abs(c.gamma_n - mean_g) / std::max(1.0, std::abs(mean_g)));
        dev = std::max(dev, std::abs(c.k_n - mean_k) / std::max(1.0, std::abs(mean_k)));
    }
    v.condition_deviation = dev;
    v.is_geodesic = dev <= tol;

    ResidualSweep sweep = sweep_residuals(ind, n_samples);
    v.max_residual = sweep.max_residual;
    v.residual_profile = std::move(sweep.profile);
    v.undefined_samples = sweep.undefined;
    v.degenerate_indicatrix = sweep.degenerate == n_samples;
    v.routes_agree =
        sweep.evaluated == 0 ? false : (v.is_geodesic == (v.max_residual <= tol));
    return v;
}

GeodesicVerdict verdict_binormal_lift(const std::shared_ptr<const ParametricCurve>& evolute,
                                      int n_samples, double tol) {
    if (n_samples < 2) throw Error("verdict: n_samples must be >= 2");
    IndicatrixCurve ind(evolute, IndicatrixKind::Binormal);

    GeodesicVerdict v;
    v.kind = IndicatrixKind::Binormal;
    v.darboux_case = ind.darboux_case();
    v.sphere = ind.sphere();
    v.reason = VerdictReason::DegenerateAlwaysFalse;
    v.sample_count = n_samples;
    v.tolerance_used = tol;
    v.is_geodesic = false;

    // Diagnostics only: the image is either a single point (helical evolute,
    // every sample degenerate) or a curve with nonzero residual.
    ResidualSweep sweep = sweep_residuals(ind, n_samples);
    v.max_residual = sweep.max_residual;
    v.residual_profile = std::move(sweep.profile);
    v.undefined_samples = sweep.undefined;
    v.degenerate_indicatrix = sweep.degenerate == n_samples;
    v.routes_agree = sweep.evaluated == 0 || v.max_residual > tol;
    return v;
}

LiftIntegralReport lift_integral_check(const IndicatrixCurve& c, double tol, int n_steps) {
    const Interval r = usable_range(c);
    if (image_is_constant(c, r, 33))
        throw DegenerateSpeedError("lift_integral_check: constant indicatrix has no flow");
    const TangentBundlePoint v0 = natural_lift(c, r.lo);
    if (v0.degenerate())
        throw DegenerateSpeedError("lift_integral_check: degenerate lift at the start point");

    const SprayTrajectory traj = integrate_spray(v0, r.length(), n_steps);
    double dev = 0.0;
    for (std::size_t i = 0; i < traj.points.size(); ++i) {
        const double s = r.lo + traj.params[i];
        dev = std::max(dev, euclidean_distance(traj.points[i].base, c.point(s)));
    }
    return {dev <= tol, dev};
}

}  // namespace mcurves
