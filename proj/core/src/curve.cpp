#include "mcurves/curve.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "mcurves/errors.hpp"

namespace mcurves {

ParametricCurve ParametricCurve::closed_form(Interval domain, PositionFn position,
                                             DerivativeFn d1, DerivativeFn d2, DerivativeFn d3,
                                             std::string label) {
    ParametricCurve c;
    c.domain_ = domain;
    c.position_ = std::move(position);
    c.d1_ = std::move(d1);
    c.d2_ = std::move(d2);
    c.d3_ = std::move(d3);
    c.label_ = std::move(label);
    return c;
}

ParametricCurve ParametricCurve::finite_difference(Interval domain, PositionFn position,
                                                   double fd_step, std::string label) {
    ParametricCurve c;
    c.domain_ = domain;
    c.position_ = std::move(position);
    c.fd_step_ = fd_step;
    c.fd_step3_ = std::max(fd_step, 1.25e-3);
    c.label_ = std::move(label);
    return c;
}

Vec3 ParametricCurve::position(double s) const {
    if (!domain_.contains(s))
        throw OutOfDomainError("curve '" + label_ + "': s outside domain");
    return position_(s);
}

Vec3 ParametricCurve::derivative(double s, int order) const {
    if (order < 1 || order > 3)
        throw Error("curve derivative order must be 1, 2 or 3");
    if (!domain_.contains(s))
        throw OutOfDomainError("curve '" + label_ + "': s outside domain");

    if (has_closed_form_derivatives()) {
        switch (order) {
            case 1: return d1_(s);
            case 2: return d2_(s);
            default: return d3_(s);
        }
    }

    const double h = order == 3 ? fd_step3_ : fd_step_;
    if (std::min(s - domain_.lo, domain_.hi - s) < 2.0 * h)
        throw StepTooLargeError("curve '" + label_ +
                                "': finite-difference stencil exceeds domain margin");

    const Vec3 fm2 = position_(s - 2.0 * h);
    const Vec3 fm1 = position_(s - h);
    const Vec3 fp1 = position_(s + h);
    const Vec3 fp2 = position_(s + 2.0 * h);
    switch (order) {
        case 1:
            return (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h);
        case 2: {
            const Vec3 f0 = position_(s);
            return (-1.0 * fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * h * h);
        }
        default:
            return (-1.0 * fm2 + 2.0 * fm1 - 2.0 * fp1 + fp2) / (2.0 * h * h * h);
    }
}

std::vector<Vec3> derivatives(const ParametricCurve& curve, double s, int order) {
    std::vector<Vec3> out;
    out.reserve(static_cast<std::size_t>(order));
    for (int k = 1; k <= order; ++k) out.push_back(curve.derivative(s, k));
    return out;
}

UnitSpeedReport unit_speed_check(const ParametricCurve& curve, int n_samples, double tol) {
    if (n_samples < 2) throw Error("unit_speed_check: n_samples must be >= 2");
    const double m = curve.derivative_margin();
    const double lo = curve.domain().lo + m;
    const double hi = curve.domain().hi - m;
    if (hi <= lo) throw OutOfDomainError("unit_speed_check: domain too small for stencil");

    double max_dev = 0.0;
    for (int i = 0; i < n_samples; ++i) {
        const double s = lo + (hi - lo) * i / (n_samples - 1);
        const Vec3 v = curve.derivative(s, 1);
        max_dev = std::max(max_dev, std::abs(minkowski_inner(v, v) - 1.0));
    }
    return {max_dev <= tol, max_dev};
}

namespace {

// 5-point Gauss-Legendre on [a, b].
double gauss5(const std::function<double(double)>& f, double a, double b) {
    static constexpr double xs[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                                     0.5384693101056831, 0.9061798459386640};
    static constexpr double ws[5] = {0.2369268850561891, 0.4786286704993665,
                                     0.5688888888888889, 0.4786286704993665,
                                     0.2369268850561891};
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < 5; ++i) sum += ws[i] * f(mid + half * xs[i]);
    return half * sum;
}

struct ArclengthTable {
    std::vector<double> s;    // parameter nodes
    std::vector<double> cum;  // cumulative pseudo-arclength at nodes
    std::function<double(double)> speed;

    double total() const { return cum.back(); }

    // Invert cum(s) = u by segment lookup plus Newton iteration.
    double parameter_at(double u) const {
        u = std::clamp(u, 0.0, total());
        const auto it = std::upper_bound(cum.begin(), cum.end(), u);
        std::size_t seg = static_cast<std::size_t>(
            std::clamp<std::ptrdiff_t>(it - cum.begin() - 1, 0,
                                       static_cast<std::ptrdiff_t>(cum.size()) - 2));
        double a = s[seg], b = s[seg + 1];
        const double target = u - cum[seg];
        auto resid = [&](double x) { return gauss5(speed, a, x) - target; };

        double x = a + (b - a) * (cum[seg + 1] > cum[seg]
                                      ? target / (cum[seg + 1] - cum[seg])
                                      : 0.5);
        double blo = a, bhi = b;
        for (int iter = 0; iter < 50; ++iter) {
            const double r = resid(x);
            if (std::abs(r) <= 1e-14 * std::max(1.0, total())) return x;
            if (r > 0.0) bhi = x; else blo = x;
            const double d = speed(x);
            double next = x - r / d;
            if (!(next > blo && next < bhi)) next = 0.5 * (blo + bhi);
            if (std::abs(next - x) <= 1e-16 * std::max(1.0, std::abs(x))) return next;
            x = next;
        }
        return x;
    }
};

}  // namespace

ParametricCurve arclength_reparametrize(const ParametricCurve& curve, int n_samples) {
    if (n_samples < 2) throw Error("arclength_reparametrize: n_samples must be >= 2");

    const double m = curve.derivative_margin();
    const Interval dom{curve.domain().lo + m, curve.domain().hi - m};
    if (dom.length() <= 0.0)
        throw OutOfDomainError("arclength_reparametrize: domain too small for stencil");

    // Capture the source curve by value; ParametricCurve is a value type.
    auto src = std::make_shared<const ParametricCurve>(curve);

    auto table = std::make_shared<ArclengthTable>();
    table->speed = [src](double s) {
        const Vec3 v = src->derivative(s, 1);
        const double q = minkowski_inner(v, v);
        if (q <= 0.0)
            throw NotSpacelikeError("arclength_reparametrize: velocity not spacelike at s = " +
                                    std::to_string(s));
        return std::sqrt(q);
    };

    table->s.resize(static_cast<std::size_t>(n_samples) + 1);
    table->cum.resize(table->s.size());
    table->cum[0] = 0.0;
    for (std::size_t i = 0; i < table->s.size(); ++i)
        table->s[i] = dom.lo + dom.length() * static_cast<double>(i) / n_samples;
    for (std::size_t i = 1; i < table->s.size(); ++i)
        table->cum[i] = table->cum[i - 1] + gauss5(table->speed, table->s[i - 1], table->s[i]);

    const double total = table->total();

    auto pos = [src, table](double u) { return src->position(table->parameter_at(u)); };
    auto d1 = [src, table](double u) {
        const double s = table->parameter_at(u);
        return src->derivative(s, 1) / table->speed(s);
    };
    auto d2 = [src, table](double u) {
        const double s = table->parameter_at(u);
        const Vec3 a1 = src->derivative(s, 1);
        const Vec3 a2 = src->derivative(s, 2);
        const double w = table->speed(s);
        const double w1 = minkowski_inner(a2, a1) / w;  // d|a'|/ds
        const double su = 1.0 / w;
        const double suu = -w1 / (w * w * w);
        return a2 * (su * su) + a1 * suu;
    };
    auto d3 = [src, table](double u) {
        const double s = table->parameter_at(u);
        const Vec3 a1 = src->derivative(s, 1);
        const Vec3 a2 = src->derivative(s, 2);
        const Vec3 a3 = src->derivative(s, 3);
        const double w = table->speed(s);
        const double g21 = minkowski_inner(a2, a1);
        const double w1 = g21 / w;
        const double w2 = (minkowski_inner(a3, a1) + minkowski_inner(a2, a2)) / w - g21 * w1 / (w * w);
        const double su = 1.0 / w;
        const double suu = -w1 / (w * w * w);
        const double suuu = (3.0 * w1 * w1 - w * w2) / std::pow(w, 5);
        return a3 * (su * su * su) + a2 * (3.0 * su * suu) + a1 * suuu;
    };

    return ParametricCurve::closed_form(Interval{0.0, total}, pos, d1, d2, d3,
                                        curve.label() + "/arclength");
}

}  // namespace mcurves
