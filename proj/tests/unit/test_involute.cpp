#include <doctest.h>

#include <cmath>

#include "mcurves/curve_spec.hpp"
#include "mcurves/errors.hpp"
#include "mcurves/involute.hpp"

using namespace mcurves;

namespace {

const double r2 = std::sqrt(2.0);

std::shared_ptr<const ParametricCurve> example_curve() {
    return make_curve(builtin_spec("example_3_1_7"));
}

// Frames from independent routes may differ by a per-vector sign.
Vec3 aligned(const Vec3& v, const Vec3& reference) {
    const double dot = v.x1 * reference.x1 + v.x2 * reference.x2 + v.x3 * reference.x3;
    return dot < 0.0 ? -v : v;
}

Vec3 position_derivative(const InvoluteCurve& inv, double s, double h = 1e-5) {
    return (inv.position(s - 2 * h) - 8.0 * inv.position(s - h) + 8.0 * inv.position(s + h) -
            inv.position(s + 2 * h)) /
           (12.0 * h);
}

}  // namespace

TEST_CASE("involute of the unit helix") {
    const InvoluteCurve inv = involute(example_curve(), 2.0);
    const Vec3 p0 = inv.position(0.0);
    CHECK(p0.x1 == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(p0.x2 == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(p0.x3 == doctest::Approx(2.0 * r2).epsilon(1e-14));

    // Third coordinate is frozen at c * sqrt(2) along the whole involute.
    for (double s : {-4.0, -1.0, 1.0, 3.0, 4.5})
        CHECK(inv.position(s).x3 == doctest::Approx(2.0 * r2).epsilon(1e-12));
}

TEST_CASE("evaluation at the cusp raises") {
    const InvoluteCurve inv = involute(example_curve(), 2.0);
    CHECK_THROWS_AS(inv.position(2.0), SingularParameterError);
    CHECK_THROWS_AS(inv.velocity(2.0), SingularParameterError);
    CHECK(inv.in_guard_band(2.0));
    CHECK_FALSE(inv.in_guard_band(2.1));
}

TEST_CASE("involute tangent is normal to the evolute tangent and binormal") {
    const auto evolute = example_curve();
    const InvoluteCurve inv = involute(evolute, 2.0);
    for (double s : {-3.0, -1.0, 1.0, 3.1}) {
        const Vec3 v = position_derivative(inv, s);
        const FrenetApparatus fr = frenet_apparatus(*evolute, s);
        const double scale = euclidean_norm(v) + 1.0;
        CHECK(std::abs(minkowski_inner(v, fr.t)) / scale <= 1e-8);
        CHECK(std::abs(minkowski_inner(v, fr.b)) / scale <= 1e-8);
        // And it is parallel to the evolute normal.
        const Vec3 residual = v - minkowski_inner(v, fr.n) * fr.n;
        CHECK(euclidean_norm(residual) / scale <= 1e-8);
    }
}

TEST_CASE("analytic velocity matches differenced positions in both offset modes") {
    const auto evolute = example_curve();
    const InvoluteCurve signed_inv = involute(evolute, 2.0, InvoluteOffset::Signed);
    const InvoluteCurve abs_inv = involute(evolute, 2.0, InvoluteOffset::Absolute);
    for (double s : {-2.0, 1.0, 3.0, 4.0}) {
        CHECK(euclidean_distance(signed_inv.velocity(s), position_derivative(signed_inv, s)) <=
              1e-7);
        CHECK(euclidean_distance(abs_inv.velocity(s), position_derivative(abs_inv, s)) <= 1e-7);
    }
}

TEST_CASE("offset conventions coincide below the cusp and fold above it") {
    const auto evolute = example_curve();
    const InvoluteCurve signed_inv = involute(evolute, 2.0, InvoluteOffset::Signed);
    const InvoluteCurve abs_inv = involute(evolute, 2.0, InvoluteOffset::Absolute);
    for (double s : {-4.0, 0.0, 1.9})
        CHECK(euclidean_distance(signed_inv.position(s), abs_inv.position(s)) == 0.0);
    for (double s : {2.5, 4.0})
        CHECK(euclidean_distance(signed_inv.position(s), abs_inv.position(s)) > 0.1);
}

TEST_CASE("frame transfer on the unit helix") {
    const auto evolute = example_curve();
    for (double s : {-2.0, 0.0, 1.5}) {
        const FrenetApparatus fr = frenet_apparatus(*evolute, s);
        const InvoluteFrame f = involute_frame_transfer(fr, darboux(fr));
        CHECK(f.kind == DarbouxCase::SpacelikeOmega);
        CHECK(euclidean_distance(f.t, {std::sinh(s), std::cosh(s), 0.0}) <= 1e-10);
        CHECK(euclidean_distance(f.n, {std::cosh(s), std::sinh(s), 0.0}) <= 1e-10);
        CHECK(euclidean_distance(f.b, {0.0, 0.0, 1.0}) <= 1e-10);
        CHECK(f.normal_sign == -1);  // orientation flips the classical row here
        // The transferred tangent IS the evolute normal.
        CHECK(euclidean_distance(f.t, fr.n) == 0.0);
    }
}

TEST_CASE("transferred frames satisfy their causal signature") {
    const auto check_case = [](const ParametricCurve& evolute, DarbouxCase expected) {
        for (double s : {-2.0, -0.3, 0.9, 2.2}) {
            const FrenetApparatus fr = frenet_apparatus(evolute, s);
            const InvoluteFrame f = involute_frame_transfer(fr, darboux(fr));
            CHECK(f.kind == expected);
            const auto sig = involute_causal_signature(f.kind);
            CHECK(causal_character(f.t, 1e-6) == sig[0]);
            CHECK(causal_character(f.n, 1e-6) == sig[1]);
            CHECK(causal_character(f.b, 1e-6) == sig[2]);
            CHECK(std::abs(minkowski_inner(f.t, f.n)) <= 1e-8);
            CHECK(std::abs(minkowski_inner(f.t, f.b)) <= 1e-8);
            CHECK(std::abs(minkowski_inner(f.n, f.b)) <= 1e-8);
        }
    };
    check_case(w_curve_hyperbolic_helix(1.0, 2.0), DarbouxCase::SpacelikeOmega);
    check_case(w_curve_circular_helix(2.0, 1.0), DarbouxCase::TimelikeOmega);
    check_case(w_curve_circle(1.5), DarbouxCase::TimelikeOmega);
}

TEST_CASE("signatures per case") {
    const auto sig1 = involute_causal_signature(DarbouxCase::SpacelikeOmega);
    CHECK(sig1[0] == CausalCharacter::Spacelike);
    CHECK(sig1[1] == CausalCharacter::Timelike);
    CHECK(sig1[2] == CausalCharacter::Spacelike);
    const auto sig2 = involute_causal_signature(DarbouxCase::TimelikeOmega);
    CHECK(sig2[0] == CausalCharacter::Spacelike);
    CHECK(sig2[1] == CausalCharacter::Spacelike);
    CHECK(sig2[2] == CausalCharacter::Timelike);
}

TEST_CASE("inconsistent frame data is rejected") {
    const auto evolute = example_curve();
    const FrenetApparatus fr = frenet_apparatus(*evolute, 0.0);
    DarbouxData dd = darboux(fr);
    dd.axis = {0.0, 1.0, 1.0};  // not the unit axis of this frame
    CHECK_THROWS_AS(involute_frame_transfer(fr, dd), FrameInconsistentError);
}

TEST_CASE("numeric frame oracle") {
    const auto evolute = example_curve();
    const InvoluteCurve inv = involute(evolute, 2.0);

    SUBCASE("matches the closed-form tangent") {
        const InvoluteFrame f = involute_frenet_numeric(inv, 1.0);
        const Vec3 expect{std::sinh(1.0), std::cosh(1.0), 0.0};
        CHECK(euclidean_distance(aligned(f.t, expect), expect) <= 1e-6);
    }
    SUBCASE("raises inside the guard band") {
        CHECK_THROWS_AS(involute_frenet_numeric(inv, 2.0), SingularParameterError);
    }
    SUBCASE("agrees with the transfer up to per-vector sign, both cases") {
        const auto compare = [](const ParametricCurve& curve, double c_val) {
            auto ptr = std::make_shared<const ParametricCurve>(curve);
            const InvoluteCurve inv_local = involute(ptr, c_val);
            for (int i = 0; i < 20; ++i) {
                const double s = -2.0 + 3.5 * i / 19.0;  // stays clear of the cusp at c
                const FrenetApparatus fr = frenet_apparatus(*ptr, s);
                const InvoluteFrame ft = involute_frame_transfer(fr, darboux(fr));
                const InvoluteFrame fn = involute_frenet_numeric(inv_local, s);
                CHECK(euclidean_distance(aligned(fn.t, ft.t), ft.t) <= 1e-5);
                CHECK(euclidean_distance(aligned(fn.n, ft.n), ft.n) <= 1e-5);
                CHECK(euclidean_distance(aligned(fn.b, ft.b), ft.b) <= 1e-5);
                CHECK(fn.kind == ft.kind);
            }
        };
        compare(*make_curve(builtin_spec("example_3_1_7")), 2.0);
        compare(w_curve_circular_helix(2.0, 1.0), 2.0);
    }
}

TEST_CASE("transfer coefficients are parameter-free for constant curvatures") {
    const ParametricCurve c = w_curve_hyperbolic_helix(1.0, 2.0);
    auto coefficients = [&](double s) {
        const FrenetApparatus fr = frenet_apparatus(c, s);
        const InvoluteFrame f = involute_frame_transfer(fr, darboux(fr));
        // g-projections of n* onto (t, n, b); the b slot carries the -1 metric factor.
        return Vec3{minkowski_inner(f.n, fr.t), minkowski_inner(f.n, fr.n),
                    -minkowski_inner(f.n, fr.b)};
    };
    const Vec3 c0 = coefficients(-1.0);
    for (double s : {0.0, 1.0, 2.5})
        CHECK(euclidean_distance(coefficients(s), c0) <= 1e-9);
}
