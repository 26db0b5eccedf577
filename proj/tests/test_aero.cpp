#include <doctest.h>

#include <cmath>

#include "liftwing/aero.hpp"
#include "liftwing/error.hpp"
#include "liftwing/reference_models.hpp"

using namespace liftwing;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected liftwing::Error");
    return ErrorKind::InvalidModel;
}

} // namespace

TEST_CASE("lift coefficient of the wing section") {
    const auto m = reference::aero();
    CHECK(lift_coefficient(m, 3.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(lift_coefficient(m, 10.0) == doctest::Approx(0.56).epsilon(1e-14));
    CHECK(kind_of([&] { lift_coefficient(m, 19.0); }) == ErrorKind::OutOfAeroDomain);
    CHECK(kind_of([&] { lift_coefficient(m, -8.5); }) == ErrorKind::OutOfAeroDomain);
    CHECK_NOTHROW(lift_coefficient(m, 18.0));
    CHECK_NOTHROW(lift_coefficient(m, -8.0));
}

TEST_CASE("drag coefficient of the wing section") {
    const auto m = reference::aero();
    CHECK(drag_coefficient(m, 0.0) == doctest::Approx(0.14).epsilon(1e-15));
    CHECK(drag_coefficient(m, 10.0) == doctest::Approx(0.2987).epsilon(1e-14));
    CHECK(drag_coefficient(m, -8.0) == doctest::Approx(0.01304).epsilon(1e-12));
    CHECK(kind_of([&] { drag_coefficient(m, 18.01); }) == ErrorKind::OutOfAeroDomain);
}

TEST_CASE("linear model invariants are enforced at construction") {
    CHECK(kind_of([] { LinearAeroModel(0.08, -0.24, 0.01, 0.1, 5.0, 5.0); }) == ErrorKind::InvalidModel);
    CHECK(kind_of([] { LinearAeroModel(0.08, -0.24, 0.01, 0.1, 6.0, 5.0); }) == ErrorKind::InvalidModel);
    // drag would be negative at alpha_min = -20
    CHECK(kind_of([] { LinearAeroModel(0.08, -0.24, 0.01587, 0.14, -20.0, 18.0); }) == ErrorKind::InvalidModel);
}

TEST_CASE("lift coefficient is affine over the domain") {
    const auto m = reference::aero();
    for (double a = -8.0; a + 2.0 <= 18.0; a += 0.37) {
        const double h = 1.0;
        const double second = lift_coefficient(m, a) - 2.0 * lift_coefficient(m, a + h) + lift_coefficient(m, a + 2 * h);
        CHECK(std::fabs(second) <= 1e-12);
    }
}

TEST_CASE("aerodynamic force") {
    const auto m = reference::aero();
    Environment env;
    Airframe af;
    af.reference_area = 0.3;

    SUBCASE("zero airspeed") {
        const auto f = aero_force(env, af, m, 0.0, 10.0);
        CHECK(f.lift == 0.0);
        CHECK(f.drag == 0.0);
    }
    SUBCASE("hand-evaluated point") {
        const auto f = aero_force(env, af, m, 15.0, 10.0);
        CHECK(f.lift == doctest::Approx(0.5 * 1.225 * 225.0 * 0.3 * 0.56).epsilon(1e-14));
        CHECK(f.drag == doctest::Approx(0.5 * 1.225 * 225.0 * 0.3 * 0.2987).epsilon(1e-14));
        CHECK(f.lift == doctest::Approx(23.15).epsilon(5e-4));
        CHECK(f.drag == doctest::Approx(12.35).epsilon(5e-4));
    }
    SUBCASE("scaling in V, S and rho") {
        for (double alpha : {-8.0, -2.0, 3.0, 10.0, 18.0}) {
            const auto base = aero_force(env, af, m, 7.0, alpha);
            const auto v2 = aero_force(env, af, m, 14.0, alpha);
            CHECK(v2.lift == doctest::Approx(4.0 * base.lift).epsilon(1e-12));
            CHECK(v2.drag == doctest::Approx(4.0 * base.drag).epsilon(1e-12));
            Airframe big = af;
            big.reference_area = 0.9;
            const auto s3 = aero_force(env, big, m, 7.0, alpha);
            CHECK(s3.drag == doctest::Approx(3.0 * base.drag).epsilon(1e-12));
            Environment thin = env;
            thin.air_density = 0.6125;
            const auto r = aero_force(thin, af, m, 7.0, alpha);
            CHECK(r.drag == doctest::Approx(0.5 * base.drag).epsilon(1e-12));
            CHECK(base.drag > 0.0);
        }
    }
}

TEST_CASE("airframe and environment validation") {
    Airframe af;
    CHECK_NOTHROW(af.validate());
    CHECK(af.alpha_cap() == 10.0);
    CHECK(af.weight(Environment{}) == doctest::Approx(19.62));

    Airframe bad = af;
    bad.mass = 0.0;
    CHECK(kind_of([&] { bad.validate(); }) == ErrorKind::InvalidModel);
    bad = af;
    bad.reference_area = -0.1;
    CHECK(kind_of([&] { bad.validate(); }) == ErrorKind::InvalidModel);
    bad = af;
    bad.rotor_count = 0;
    CHECK(kind_of([&] { bad.validate(); }) == ErrorKind::InvalidModel);
    bad = af;
    bad.safety_margin = 18.0;
    CHECK(kind_of([&] { bad.validate(); }) == ErrorKind::InvalidModel);

    Environment env;
    env.air_density = 0.0;
    CHECK(kind_of([&] { env.validate(); }) == ErrorKind::InvalidModel);
}
