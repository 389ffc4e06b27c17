#include "mcurves/frenet.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <utility>
#include <vector>

#include "mcurves/errors.hpp"

namespace mcurves {

const char* to_string(DarbouxCase c) {
    return c == DarbouxCase::SpacelikeOmega ? "spacelike-omega" : "timelike-omega";
}

FrenetApparatus frenet_apparatus(const ParametricCurve& curve, double s,
                                 double kappa_floor, double unit_tol) {
    const Vec3 t = curve.derivative(s, 1);
    const double gtt = minkowski_inner(t, t);
    if (std::abs(gtt - 1.0) > unit_tol)
        throw WrongCausalTypeError("frenet_apparatus: tangent is not unit spacelike at s = " +
                                   std::to_string(s));

    const Vec3 acc = curve.derivative(s, 2);
    const double kappa = pseudo_norm(acc);
    if (kappa <= kappa_floor)
        throw VanishingCurvatureError("frenet_apparatus: |alpha''| <= " +
                                      std::to_string(kappa_floor) + " at s = " +
                                      std::to_string(s));
    if (minkowski_inner(acc, acc) < 0.0)
        throw WrongCausalTypeError("frenet_apparatus: principal normal not spacelike at s = " +
                                   std::to_string(s));
    const Vec3 n = acc / kappa;

    const Vec3 braw = lorentz_cross(t, n);
    if (minkowski_inner(braw, braw) >= 0.0)
        throw WrongCausalTypeError("frenet_apparatus: binormal not timelike at s = " +
                                   std::to_string(s));
    const Vec3 b = braw / pseudo_norm(braw);

    const Vec3 jerk = curve.derivative(s, 3);
    const double tau = minkowski_inner(lorentz_cross(t, jerk), n) / kappa;

    return {t, n, b, kappa, tau, s};
}

FrenetResiduals frenet_residuals(const FrameDerivatives& d, const FrenetApparatus& fr) {
    return {euclidean_norm(d.dt - fr.kappa * fr.n),
            euclidean_norm(d.dn + fr.kappa * fr.t - fr.tau * fr.b),
            euclidean_norm(d.db - fr.tau * fr.n)};
}

FrenetResiduals frenet_residuals(const ParametricCurve& curve, double s, double h) {
    const double margin = 2.0 * h + curve.derivative_margin();
    if (std::min(s - curve.domain().lo, curve.domain().hi - s) < margin)
        throw StepTooLargeError("frenet_residuals: stencil exceeds domain margin");

    const FrenetApparatus fr = frenet_apparatus(curve, s);
    std::array<FrenetApparatus, 4> nb = {
        frenet_apparatus(curve, s - 2.0 * h), frenet_apparatus(curve, s - h),
        frenet_apparatus(curve, s + h), frenet_apparatus(curve, s + 2.0 * h)};

    auto d5 = [h](const Vec3& m2, const Vec3& m1, const Vec3& p1, const Vec3& p2) {
        return (m2 - 8.0 * m1 + 8.0 * p1 - p2) / (12.0 * h);
    };
    FrameDerivatives d{d5(nb[0].t, nb[1].t, nb[2].t, nb[3].t),
                       d5(nb[0].n, nb[1].n, nb[2].n, nb[3].n),
                       d5(nb[0].b, nb[1].b, nb[2].b, nb[3].b)};
    return frenet_residuals(d, fr);
}

DarbouxData darboux(const FrenetApparatus& fr, double tol) {
    const double k = fr.kappa, t = fr.tau;
    const double d = t * t - k * k;
    if (std::abs(d) <= tol * std::max(1.0, k * k + t * t))
        throw NullDarbouxError("darboux: |tau^2 - kappa^2| below tolerance at s = " +
                               std::to_string(fr.s) + " (case analysis undefined)");

    DarbouxData out;
    out.omega = t * fr.t - k * fr.b;
    out.norm_omega = std::sqrt(std::abs(d));
    out.axis = out.omega / out.norm_omega;
    if (d > 0.0) {
        out.kind = DarbouxCase::SpacelikeOmega;
        out.theta = std::asinh(k / out.norm_omega);
    } else {
        out.kind = DarbouxCase::TimelikeOmega;
        out.theta = std::asinh(std::abs(t) / out.norm_omega);
    }
    return out;
}

HelixVerdict is_general_helix(const ParametricCurve& curve, int n_samples, double tol) {
    if (n_samples < 2) throw Error("is_general_helix: n_samples must be >= 2");
    const double m = curve.derivative_margin();
    const double lo = curve.domain().lo + m;
    const double hi = curve.domain().hi - m;

    std::vector<double> ratio(static_cast<std::size_t>(n_samples));
    double mean = 0.0;
    for (int i = 0; i < n_samples; ++i) {
        const double s = lo + (hi - lo) * i / (n_samples - 1);
        const FrenetApparatus fr = frenet_apparatus(curve, s);
        ratio[static_cast<std::size_t>(i)] = fr.tau / fr.kappa;
        mean += ratio[static_cast<std::size_t>(i)];
    }
    mean /= n_samples;

    double max_dev = 0.0;
    for (double r : ratio) max_dev = std::max(max_dev, std::abs(r - mean));
    const double scaled = max_dev / std::max(1.0, std::abs(mean));
    return {scaled <= tol, mean, scaled};
}

namespace {

void require_pair(double kappa, double tau, bool want_spacelike_axis) {
    if (kappa <= 0.0) throw CaseViolationError("w-curve: kappa must be > 0");
    if (!w_curve_exists(kappa, tau))
        throw CaseViolationError(
            "w-curve inadmissible: |kappa| == |tau| (equal curvature and torsion "
            "magnitudes admit no spacelike curve with timelike binormal)");
    const bool spacelike_axis = kappa < std::abs(tau);
    if (spacelike_axis != want_spacelike_axis)
        throw CaseViolationError(want_spacelike_axis
                                     ? "w-curve: hyperbolic form requires kappa < |tau|"
                                     : "w-curve: circular form requires kappa > |tau|");
}

}  // namespace

ParametricCurve w_curve_hyperbolic_helix(double kappa, double tau, Interval domain) {
    require_pair(kappa, tau, /*want_spacelike_axis=*/true);
    if (tau == 0.0) throw CaseViolationError("w-curve: hyperbolic form requires tau != 0");
    const double w = std::sqrt(tau * tau - kappa * kappa);
    const double k = kappa, t = tau;
    auto pos = [=](double s) {
        return Vec3{k * std::sinh(w * s), k * std::cosh(w * s), t * w * s} / (w * w);
    };
    auto d1 = [=](double s) {
        return Vec3{k * std::cosh(w * s), k * std::sinh(w * s), t} / w;
    };
    auto d2 = [=](double s) { return Vec3{k * std::sinh(w * s), k * std::cosh(w * s), 0.0}; };
    auto d3 = [=](double s) {
        return Vec3{k * w * std::cosh(w * s), k * w * std::sinh(w * s), 0.0};
    };
    return ParametricCurve::closed_form(domain, pos, d1, d2, d3, "w-hyperbolic");
}

ParametricCurve w_curve_circular_helix(double kappa, double tau, Interval domain) {
    require_pair(kappa, tau, /*want_spacelike_axis=*/false);
    if (tau == 0.0) throw CaseViolationError("w-curve: circular form requires tau != 0");
    const double w = std::sqrt(kappa * kappa - tau * tau);
    const double k = kappa, t = tau;
    auto pos = [=](double s) {
        return Vec3{t * w * s, k * std::cos(w * s), -k * std::sin(w * s)} / (w * w);
    };
    auto d1 = [=](double s) {
        return Vec3{t, -k * std::sin(w * s), -k * std::cos(w * s)} / w;
    };
    auto d2 = [=](double s) { return Vec3{0.0, -k * std::cos(w * s), k * std::sin(w * s)}; };
    auto d3 = [=](double s) {
        return Vec3{0.0, k * w * std::sin(w * s), k * w * std::cos(w * s)};
    };
    return ParametricCurve::closed_form(domain, pos, d1, d2, d3, "w-circular");
}

ParametricCurve w_curve_circle(double kappa, Interval domain) {
    if (kappa <= 0.0) throw CaseViolationError("w-curve: kappa must be > 0");
    const double k = kappa;
    auto pos = [=](double s) { return Vec3{0.0, std::cos(k * s), std::sin(k * s)} / k; };
    auto d1 = [=](double s) { return Vec3{0.0, -std::sin(k * s), std::cos(k * s)}; };
    auto d2 = [=](double s) { return Vec3{0.0, -k * std::cos(k * s), -k * std::sin(k * s)}; };
    auto d3 = [=](double s) {
        return Vec3{0.0, k * k * std::sin(k * s), -k * k * std::cos(k * s)};
    };
    return ParametricCurve::closed_form(domain, pos, d1, d2, d3, "w-circle");
}

bool w_curve_exists(double kappa, double tau, double tol) {
    if (kappa <= 0.0) throw CaseViolationError("w_curve_exists: kappa must be > 0");
    const double k = std::abs(kappa), t = std::abs(tau);
    return std::abs(k - t) > tol * std::max(k, t);
}

// ---------------------------------------------------------------------------
// Prescribed-curvature integration.

namespace {

// State layout: position, t, n, b (12 doubles).
using State = std::array<double, 12>;

State frame_ode_rhs(const State& y, double kappa, double tau) {
    State f{};
    // position' = t
    f[0] = y[3]; f[1] = y[4]; f[2] = y[5];
    // t' = kappa n
    f[3] = kappa * y[6]; f[4] = kappa * y[7]; f[5] = kappa * y[8];
    // n' = -kappa t + tau b
    f[6] = -kappa * y[3] + tau * y[9];
    f[7] = -kappa * y[4] + tau * y[10];
    f[8] = -kappa * y[5] + tau * y[11];
    // b' = tau n
    f[9] = tau * y[6]; f[10] = tau * y[7]; f[11] = tau * y[8];
    return f;
}

struct DenseNode {
    double s;
    State y;
    State f;
};

// Dormand-Prince 5(4) with dense cubic-Hermite output over accepted steps.
class FrameIntegrator {
public:
    FrameIntegrator(std::function<double(double)> kappa, std::function<double(double)> tau,
                    Interval domain)
        : kappa_(std::move(kappa)), tau_(std::move(tau)), domain_(domain) {
        State y0{};
        y0[4] = 1.0;   // t = (0,1,0)
        y0[8] = 1.0;   // n = (0,0,1)
        y0[9] = -1.0;  // b = (-1,0,0)
        integrate(y0);
    }

    State state_at(double s) const {
        const auto it = std::upper_bound(
            nodes_.begin(), nodes_.end(), s,
            [](double v, const DenseNode& n) { return v < n.s; });
        std::size_t i = static_cast<std::size_t>(
            std::clamp<std::ptrdiff_t>(it - nodes_.begin() - 1, 0,
                                       static_cast<std::ptrdiff_t>(nodes_.size()) - 2));
        const DenseNode& a = nodes_[i];
        const DenseNode& b = nodes_[i + 1];
        const double h = b.s - a.s;
        if (h <= 0.0) return a.y;
        const double x = (s - a.s) / h;
        const double h00 = (1.0 + 2.0 * x) * (1.0 - x) * (1.0 - x);
        const double h10 = x * (1.0 - x) * (1.0 - x);
        const double h01 = x * x * (3.0 - 2.0 * x);
        const double h11 = x * x * (x - 1.0);
        State out{};
        for (std::size_t k = 0; k < out.size(); ++k)
            out[k] = h00 * a.y[k] + h10 * h * a.f[k] + h01 * b.y[k] + h11 * h * b.f[k];
        return out;
    }

    double kappa(double s) const { return kappa_(s); }
    double tau(double s) const { return tau_(s); }

    // Central difference of the prescribed curvature (used for alpha''').
    double kappa_prime(double s) const {
        const double h = 1e-5 * std::max(1.0, std::abs(s));
        const double lo = std::max(domain_.lo, s - h);
        const double hi = std::min(domain_.hi, s + h);
        return (kappa_(hi) - kappa_(lo)) / (hi - lo);
    }

private:
    void integrate(const State& y0) {
        constexpr double max_step = 5e-3;

        double s = domain_.lo;
        State y = y0;
        State f = rhs(s, y);
        nodes_.push_back({s, y, f});

        const double resolution = 1e-13 * std::max(1.0, std::abs(domain_.hi));
        double h = std::min(max_step, domain_.length() / 100.0);
        while (s < domain_.hi) {
            if (domain_.hi - s <= resolution) {
                // Remaining sliver is below parameter resolution; pin the
                // final node to the endpoint.
                nodes_.push_back({domain_.hi, y, f});
                break;
            }
            const double h_try = std::min(h, domain_.hi - s);
            State y5, y4;
            State fnext;
            const double err = step(s, y, f, h_try, y5, y4, fnext);
            if (err <= 1.0) {
                s += h_try;
                y = y5;
                f = fnext;
                nodes_.push_back({s, y, f});
            }
            const double factor = err > 0.0 ? 0.9 * std::pow(err, -0.2) : 5.0;
            h = std::min(max_step, h_try * std::clamp(factor, 0.2, 5.0));
            if (err > 1.0 && h < resolution)
                throw Error("prescribed_curvature_curve: step size underflow");
        }
    }

    State rhs(double s, const State& y) const { return frame_ode_rhs(y, kappa_(s), tau_(s)); }

    // One embedded step; returns the scaled error estimate (<= 1 accepts).
    double step(double s, const State& y, const State& f1, double h,
                State& y5, State& y4, State& fnext) const {
        static constexpr double a21 = 1.0 / 5;
        static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
        static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
        static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                                a53 = 64448.0 / 6561, a54 = -212.0 / 729;
        static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                                a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                                a65 = -5103.0 / 18656;
        static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                                b5 = -2187.0 / 6784, b6 = 11.0 / 84;
        static constexpr double e1 = 5179.0 / 57600, e3 = 7571.0 / 16695, e4 = 393.0 / 640,
                                e5 = -92097.0 / 339200, e6 = 187.0 / 2100, e7 = 1.0 / 40;

        auto axpy = [&](const State& base, std::initializer_list<std::pair<double, const State*>> terms) {
            State out = base;
            for (const auto& [c, v] : terms)
                for (std::size_t k = 0; k < out.size(); ++k) out[k] += h * c * (*v)[k];
            return out;
        };

        const State k1 = f1;
        const State k2 = rhs(s + h / 5.0, axpy(y, {{a21, &k1}}));
        const State k3 = rhs(s + 3.0 * h / 10.0, axpy(y, {{a31, &k1}, {a32, &k2}}));
        const State k4 = rhs(s + 4.0 * h / 5.0, axpy(y, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
        const State k5 = rhs(s + 8.0 * h / 9.0,
                             axpy(y, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
        const State k6 = rhs(s + h,
                             axpy(y, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
        y5 = axpy(y, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
        const State k7 = rhs(s + h, y5);
        y4 = axpy(y, {{e1, &k1}, {e3, &k3}, {e4, &k4}, {e5, &k5}, {e6, &k6}, {e7, &k7}});
        fnext = k7;

        double err = 0.0;
        for (std::size_t k = 0; k < y.size(); ++k) {
            const double scale = 1e-12 + 1e-12 * std::max(std::abs(y[k]), std::abs(y5[k]));
            err = std::max(err, std::abs(y5[k] - y4[k]) / scale);
        }
        return err;
    }

    std::function<double(double)> kappa_, tau_;
    Interval domain_;
    std::vector<DenseNode> nodes_;
};

Vec3 take(const State& y, int block) {
    return {y[3 * block], y[3 * block + 1], y[3 * block + 2]};
}

}  // namespace

ParametricCurve prescribed_curvature_curve(std::function<double(double)> kappa,
                                           std::function<double(double)> tau,
                                           Interval domain, std::string label) {
    auto integ = std::make_shared<const FrameIntegrator>(std::move(kappa), std::move(tau), domain);

    auto pos = [integ](double s) { return take(integ->state_at(s), 0); };
    auto d1 = [integ](double s) { return take(integ->state_at(s), 1); };
    auto d2 = [integ](double s) {
        const State y = integ->state_at(s);
        return integ->kappa(s) * take(y, 2);
    };
    auto d3 = [integ](double s) {
        const State y = integ->state_at(s);
        const double k = integ->kappa(s);
        const double kp = integ->kappa_prime(s);
        const double t = integ->tau(s);
        // alpha''' = kappa' n + kappa (-kappa t + tau b)
        return kp * take(y, 2) + k * (-k * take(y, 1) + t * take(y, 3));
    };
    return ParametricCurve::closed_form(domain, pos, d1, d2, d3, std::move(label));
}

}  // namespace mcurves
