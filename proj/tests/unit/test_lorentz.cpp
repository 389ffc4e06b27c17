#include <doctest.h>

#include <cmath>
#include <random>

#include "mcurves/errors.hpp"
#include "mcurves/lorentz.hpp"

using namespace mcurves;

namespace {

std::mt19937& rng() {
    static std::mt19937 gen(20240817u);
    return gen;
}

Vec3 random_vec(double scale = 5.0) {
    std::uniform_real_distribution<double> d(-scale, scale);
    return {d(rng()), d(rng()), d(rng())};
}

Vec3 random_of_character(CausalCharacter want) {
    for (;;) {
        const Vec3 v = random_vec();
        if (causal_character(v, 1e-6) == want) return v;
    }
}

}  // namespace

TEST_CASE("inner product on basis and on the unit helix tangent") {
    CHECK(minkowski_inner({1, 0, 0}, {1, 0, 0}) == -1.0);
    CHECK(minkowski_inner({0, 1, 0}, {0, 1, 0}) == 1.0);
    const double r2 = std::sqrt(2.0);
    CHECK(minkowski_inner({1, 0, r2}, {1, 0, r2}) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("vector product formula") {
    CHECK(lorentz_cross({1, 0, 0}, {0, 1, 0}) == Vec3{0, 0, 1});
    const double r2 = std::sqrt(2.0);
    const Vec3 b = lorentz_cross({1, 0, r2}, {0, 1, 0});
    CHECK(b.x1 == doctest::Approx(r2).epsilon(1e-15));
    CHECK(b.x2 == 0.0);
    CHECK(b.x3 == 1.0);
    const Vec3 u = random_vec();
    CHECK(lorentz_cross(u, u) == Vec3{0, 0, 0});
}

TEST_CASE("inner product is symmetric and bilinear") {
    std::uniform_real_distribution<double> coeff(-3.0, 3.0);
    for (int i = 0; i < 200; ++i) {
        const Vec3 u = random_vec(), v = random_vec(), w = random_vec();
        const double a = coeff(rng()), b = coeff(rng());
        CHECK(minkowski_inner(u, v) == doctest::Approx(minkowski_inner(v, u)).epsilon(1e-12));
        const double lhs = minkowski_inner(a * u + b * v, w);
        const double rhs = a * minkowski_inner(u, w) + b * minkowski_inner(v, w);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("vector product is antisymmetric and g-orthogonal to its factors") {
    for (int i = 0; i < 200; ++i) {
        const Vec3 u = random_vec(), v = random_vec();
        const Vec3 c = lorentz_cross(u, v);
        CHECK(c == -lorentz_cross(v, u));
        const double scale = euclidean_norm(u) * euclidean_norm(v) * euclidean_norm(c) + 1.0;
        CHECK(std::abs(minkowski_inner(c, u)) / scale < 1e-12);
        CHECK(std::abs(minkowski_inner(c, v)) / scale < 1e-12);
    }
}

TEST_CASE("pseudo-norm") {
    CHECK(pseudo_norm({1, 0, 0}) == 1.0);
    CHECK(pseudo_norm({1, 1, 0}) == 0.0);
    const double r2 = std::sqrt(2.0);
    CHECK(pseudo_norm({r2, 0, 1}) == doctest::Approx(1.0).epsilon(1e-15));

    for (int i = 0; i < 100; ++i) {
        const Vec3 v = random_vec();
        CHECK(pseudo_norm(v) * pseudo_norm(v) ==
              doctest::Approx(std::abs(minkowski_inner(v, v))).epsilon(1e-12));
    }
}

TEST_CASE("causal classification") {
    CHECK(causal_character({0, 1, 0}) == CausalCharacter::Spacelike);
    CHECK(causal_character({1, 0, 0}) == CausalCharacter::Timelike);
    CHECK(causal_character({1, 1, 0}) == CausalCharacter::Null);
    CHECK(causal_character({0, 0, 0}) == CausalCharacter::Spacelike);  // zero is spacelike

    // Invariance under scaling by any nonzero real.
    std::uniform_real_distribution<double> scales(0.01, 100.0);
    for (int i = 0; i < 100; ++i) {
        const Vec3 v = random_vec();
        const double a = scales(rng()) * (i % 2 == 0 ? 1.0 : -1.0);
        CHECK(causal_character(v) == causal_character(a * v));
    }
}

TEST_CASE("span character by Gram determinant") {
    CHECK(span_character({0, 1, 0}, {0, 0, 1}) == CausalCharacter::Spacelike);
    CHECK(span_character({0, 1, 0}, {1, 0, 0}) == CausalCharacter::Timelike);
    CHECK(span_character({1, 1, 0}, {0, 0, 1}) == CausalCharacter::Null);
    CHECK_THROWS_AS(span_character({0, 1, 0}, {0, 2, 0}), DependentInputError);
}

TEST_CASE("angles: worked cases") {
    SUBCASE("orthogonal spacelike pair, spacelike plane") {
        const AngleResult a = lorentz_angle({0, 1, 0}, {0, 0, 1});
        CHECK(a.kind == AngleKind::SpacelikeSpacelikeCos);
        CHECK(a.theta == doctest::Approx(std::acos(0.0)).epsilon(1e-15));
    }
    SUBCASE("orthogonal mixed pair") {
        const AngleResult a = lorentz_angle({0, 1, 0}, {1, 0, 0});
        CHECK(a.kind == AngleKind::SpacelikeTimelikeSinh);
        CHECK(a.theta == 0.0);
    }
    SUBCASE("equal timelike pair") {
        const AngleResult a = lorentz_angle({1, 0, 0}, {1, 0, 0});
        CHECK(a.kind == AngleKind::TimelikeTimelikeCosh);
        CHECK(a.theta == 0.0);
    }
    SUBCASE("spacelike pair spanning a timelike plane") {
        // g(X,X) = g(Y,Y) = 1, g(X,Y) = -2: hyperbolic angle acosh(2).
        const Vec3 X{1.0, std::sqrt(2.0), 0.0};
        const Vec3 Y{2.0, 0.0, std::sqrt(5.0)};
        const AngleResult a = lorentz_angle(X, Y);
        CHECK(a.kind == AngleKind::SpacelikeSpacelikeCosh);
        CHECK(a.theta == doctest::Approx(std::acosh(2.0)).epsilon(1e-12));
    }
    SUBCASE("spacelike against timelike") {
        // |g| = 1 with unit norms: theta = asinh(1).
        const AngleResult a = lorentz_angle({0, 1, 0}, {std::sqrt(2.0), 1, 0});
        CHECK(a.kind == AngleKind::SpacelikeTimelikeSinh);
        CHECK(a.theta == doctest::Approx(std::asinh(1.0)).epsilon(1e-12));
    }
    SUBCASE("timelike pair, opposite spatial parts") {
        // g = -3 with unit norms: theta = acosh(3) via the |g| convention.
        const AngleResult a = lorentz_angle({std::sqrt(2.0), 1, 0}, {std::sqrt(2.0), -1, 0});
        CHECK(a.kind == AngleKind::TimelikeTimelikeCosh);
        CHECK(a.theta == doctest::Approx(std::acosh(3.0)).epsilon(1e-12));
    }
    SUBCASE("null input rejected") {
        CHECK_THROWS_AS(lorentz_angle({1, 1, 0}, {0, 1, 0}), NullInputError);
        CHECK_THROWS_AS(lorentz_angle({0, 1, 0}, {0, 0, 0}), NullInputError);
    }
    SUBCASE("dependent same-character inputs give zero angle") {
        CHECK(lorentz_angle({0, 2, 1}, {0, 4, 2}).theta == 0.0);
        CHECK(lorentz_angle({3, 1, 0}, {6, 2, 0}).theta == 0.0);
    }
}

TEST_CASE("angles: defining identity holds on random inputs") {
    for (int i = 0; i < 300; ++i) {
        const Vec3 X = random_of_character(i % 3 == 0 ? CausalCharacter::Timelike
                                                      : CausalCharacter::Spacelike);
        const Vec3 Y = random_of_character(i % 2 == 0 ? CausalCharacter::Timelike
                                                      : CausalCharacter::Spacelike);
        const AngleResult a = lorentz_angle(X, Y);
        const double lhs = std::abs(minkowski_inner(X, Y));
        const double norms = pseudo_norm(X) * pseudo_norm(Y);
        double rhs = 0.0;
        switch (a.kind) {
            case AngleKind::SpacelikeSpacelikeCos: rhs = norms * std::cos(a.theta); break;
            case AngleKind::SpacelikeSpacelikeCosh:
            case AngleKind::TimelikeTimelikeCosh: rhs = norms * std::cosh(a.theta); break;
            case AngleKind::SpacelikeTimelikeSinh: rhs = norms * std::sinh(a.theta); break;
        }
        CHECK(a.theta >= 0.0);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    }
}

TEST_CASE("unit sphere membership") {
    CHECK(sphere_membership({0, 0, 1}) == SphereMembership::OnS12);
    CHECK(sphere_membership({1, 0, 0}) == SphereMembership::OnH02);
    CHECK(sphere_membership({std::sinh(1.0), std::cosh(1.0), 0}) == SphereMembership::OnS12);
    CHECK(sphere_membership({2, 0, 0}) == SphereMembership::Neither);
    CHECK(sphere_membership({0, 0, 0}) == SphereMembership::Neither);
}
