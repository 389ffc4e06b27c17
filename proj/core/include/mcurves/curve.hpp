#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "mcurves/lorentz.hpp"
#include "mcurves/tolerances.hpp"

namespace mcurves {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double length() const { return hi - lo; }
    bool contains(double s) const { return s >= lo && s <= hi; }
};

/// A parametric curve s -> R^3 on a closed interval, with derivative access
/// up to order 3. Derivatives come either from user-supplied closed forms or
/// from 5-point central differences with step `fd_step` (order 4 for the
/// first derivative, order 2 for the third). Immutable after construction.
class ParametricCurve {
public:
    using PositionFn = std::function<Vec3(double)>;
    using DerivativeFn = std::function<Vec3(double)>;

    static ParametricCurve closed_form(Interval domain, PositionFn position,
                                       DerivativeFn d1, DerivativeFn d2, DerivativeFn d3,
                                       std::string label);

    /// The requested step drives the order-1/2 stencils. The order-3 stencil
    /// divides by h^3, so its round-off floor at h = 1e-4 sits near 1e-3
    /// absolute; it therefore never runs below the round-off-optimal step
    /// (~1.25e-3), where its total error stays a few 1e-6.
    static ParametricCurve finite_difference(Interval domain, PositionFn position,
                                             double fd_step, std::string label);

    Vec3 position(double s) const;

    /// alpha^(order)(s), order in 1..3. Throws OutOfDomainError when s is
    /// outside the domain and StepTooLargeError when a finite-difference
    /// stencil of half-width 2*fd_step does not fit around s.
    Vec3 derivative(double s, int order) const;

    const Interval& domain() const { return domain_; }
    bool has_closed_form_derivatives() const { return static_cast<bool>(d1_); }
    double fd_step() const { return fd_step_; }
    double fd_step_order3() const { return fd_step3_; }

    /// Margin callers must keep from the domain ends for derivative access.
    double derivative_margin() const {
        return has_closed_form_derivatives() ? 0.0 : 2.0 * fd_step3_;
    }

    const std::string& label() const { return label_; }

private:
    ParametricCurve() = default;

    Interval domain_;
    PositionFn position_;
    DerivativeFn d1_, d2_, d3_;
    double fd_step_ = tolerance::fd_step;
    double fd_step3_ = tolerance::fd_step;
    std::string label_;
};

/// alpha'(s), ..., alpha^(order)(s) as a list.
std::vector<Vec3> derivatives(const ParametricCurve& curve, double s, int order);

struct UnitSpeedReport {
    bool unit_speed = false;
    double max_deviation = 0.0;  // max |g(a',a') - 1| over samples
};

/// Samples g(alpha', alpha') at n_samples points (derivative margin
/// respected) and checks the spacelike unit-speed condition.
UnitSpeedReport unit_speed_check(const ParametricCurve& curve, int n_samples = 64,
                                 double tol = tolerance::unit_speed);

/// Reparametrize a spacelike curve by pseudo-arclength. The result has
/// domain [0, L] and closed-form derivatives by the chain rule, so
/// unit_speed_check on it passes at 1e-6. Throws NotSpacelikeError when a
/// sampled velocity is not spacelike. `n_samples` controls the cumulative
/// arclength table resolution.
ParametricCurve arclength_reparametrize(const ParametricCurve& curve, int n_samples = 256);

}  // namespace mcurves
