#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "liftwing/error.hpp"
#include "liftwing/propulsion.hpp"
#include "liftwing/reference_models.hpp"
#include "oracles.hpp"

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

std::vector<oracle::Term> as_oracle(const std::vector<PolyTerm>& terms) {
    std::vector<oracle::Term> out;
    for (const auto& t : terms) out.push_back({t.vp_exp, t.rpm_exp, t.coefficient});
    return out;
}

PolySurrogate wide(std::vector<PolyTerm> terms, OutputUnit unit = OutputUnit::Newton) {
    return PolySurrogate(std::move(terms), {0.0, 20.0}, {0.0, 10000.0}, unit);
}

} // namespace

TEST_CASE("axial inflow") {
    CHECK(axial_inflow(15.0, 0.0) == 0.0);
    CHECK(axial_inflow(10.0, 90.0) == doctest::Approx(10.0).epsilon(1e-15));
    CHECK(axial_inflow(15.3, 25.0) == doctest::Approx(15.3 * std::sin(25.0 * std::numbers::pi / 180.0)));
    CHECK(axial_inflow(15.3, 25.0) == doctest::Approx(6.466).epsilon(1e-4));
}

TEST_CASE("thrust surrogate evaluation") {
    const auto terms = reference::thrust_terms();
    SUBCASE("constant term with the domain widened to N = 0") {
        CHECK(thrust(wide(terms), 0.0, 0.0) == doctest::Approx(9.397e-2).epsilon(1e-15));
    }
    SUBCASE("hand-evaluated static point") {
        const double expected = 9.397e-2 - 4.175e-5 * 7000 + 1.498e-7 * 7000.0 * 7000.0;
        CHECK(thrust(reference::thrust_surrogate(), 7000.0, 0.0) == doctest::Approx(expected).epsilon(1e-14));
        CHECK(expected == doctest::Approx(7.1419).epsilon(1e-5));
    }
    SUBCASE("single constant term") {
        const auto s = wide({{0, 0, 2.5}});
        for (double n : {0.0, 1234.0, 9999.0})
            for (double vp : {0.0, 3.3, 20.0}) CHECK(thrust(s, n, vp) == 2.5);
    }
    SUBCASE("outside the fit region") {
        const auto s = reference::thrust_surrogate();
        CHECK(kind_of([&] { thrust(s, 1999.0, 1.0); }) == ErrorKind::OutOfSurrogateDomain);
        CHECK(kind_of([&] { thrust(s, 5000.0, 20.5); }) == ErrorKind::OutOfSurrogateDomain);
        CHECK(kind_of([&] { thrust(s, 5000.0, -0.1); }) == ErrorKind::OutOfSurrogateDomain);
    }
}

TEST_CASE("torque surrogate evaluation") {
    SUBCASE("constant term of the source listing") {
        auto printed = reference::torque_terms_as_printed();
        // The source listing repeats the N^2 exponent pair, so it cannot be loaded as-is.
        CHECK(kind_of([&] { wide(printed, OutputUnit::NewtonMetre); }) == ErrorKind::InvalidModel);
        printed.erase(printed.begin() + 3); // drop the first of the two N^2 entries
        CHECK(torque(wide(printed, OutputUnit::NewtonMetre), 0.0, 0.0) == doctest::Approx(7.57e-2).epsilon(1e-15));
    }
    SUBCASE("single monomial c * Vp") {
        const auto s = wide({{1, 0, 0.75}}, OutputUnit::NewtonMetre);
        CHECK(torque(s, 4000.0, 8.0) == doctest::Approx(6.0).epsilon(1e-15));
    }
    SUBCASE("shipped surrogate against an independent evaluator") {
        const auto s = reference::torque_surrogate();
        const auto ref = as_oracle(s.terms());
        for (double n : {2500.0, 4700.0, 8123.0})
            for (double vp : {0.0, 4.2, 11.9})
                CHECK(torque(s, n, vp) == doctest::Approx(oracle::poly(ref, vp, n)).epsilon(1e-12));
    }
}

TEST_CASE("surrogate evaluation does not depend on term order") {
    std::mt19937_64 rng(7);
    auto terms = reference::thrust_terms();
    const auto sorted = wide(terms);
    for (int k = 0; k < 20; ++k) {
        std::shuffle(terms.begin(), terms.end(), rng);
        const auto shuffled = wide(terms);
        CHECK(shuffled == sorted);
        for (double n : {2100.0, 6400.0, 9900.0}) {
            CHECK(thrust(shuffled, n, 5.0) == thrust(sorted, n, 5.0));
            CHECK(thrust(shuffled, n, 5.0) == doctest::Approx(oracle::poly(as_oracle(terms), 5.0, n)).epsilon(1e-12));
        }
    }
}

TEST_CASE("surrogate invariants") {
    CHECK(kind_of([] { PolySurrogate({}, {0, 1}, {0, 1}, OutputUnit::Newton); }) == ErrorKind::InvalidModel);
    CHECK(kind_of([] { PolySurrogate({{0, 0, 1.0}}, {1, 1}, {0, 1}, OutputUnit::Newton); }) == ErrorKind::InvalidModel);
    CHECK(kind_of([] { PolySurrogate({{0, 0, 1.0}}, {0, 1}, {2, 1}, OutputUnit::Newton); }) == ErrorKind::InvalidModel);
    CHECK(kind_of([] { PolySurrogate({{-1, 0, 1.0}}, {0, 1}, {0, 1}, OutputUnit::Newton); }) == ErrorKind::InvalidModel);
    CHECK(output_unit_from_string("N") == OutputUnit::Newton);
    CHECK(output_unit_from_string(to_string(OutputUnit::NewtonMetre)) == OutputUnit::NewtonMetre);
}

TEST_CASE("coefficient form") {
    Environment env;
    CHECK(thrust_from_coefficients(0.0, env, 5000.0, 0.254) == 0.0);
    CHECK(thrust_from_coefficients(0.1, env, 100.0, 0.2) == doctest::Approx(0.1225).epsilon(1e-13));
    CHECK(thrust_from_coefficients(0.1, env, 200.0, 0.2) ==
          doctest::Approx(4.0 * thrust_from_coefficients(0.1, env, 100.0, 0.2)).epsilon(1e-14));
    CHECK(torque_from_coefficients(0.0, env, 5000.0, 0.254) == 0.0);
    CHECK(torque_from_coefficients(0.1, env, 100.0, 0.2) == doctest::Approx(0.1 * 1.225 * 1e4 * 3.2e-4 / 32).epsilon(1e-13));
    CHECK(torque_from_coefficients(0.1, env, 200.0, 0.2) ==
          doctest::Approx(4.0 * torque_from_coefficients(0.1, env, 100.0, 0.2)).epsilon(1e-14));

    // linear in C_T and rho
    Environment dense = env;
    dense.air_density = 2.45;
    CHECK(thrust_from_coefficients(0.3, env, 3000.0, 0.254) ==
          doctest::Approx(3.0 * thrust_from_coefficients(0.1, env, 3000.0, 0.254)).epsilon(1e-14));
    CHECK(thrust_from_coefficients(0.1, dense, 3000.0, 0.254) ==
          doctest::Approx(2.0 * thrust_from_coefficients(0.1, env, 3000.0, 0.254)).epsilon(1e-14));

    const auto c = coefficients_from_loads(thrust_from_coefficients(0.11, env, 4000.0, 0.254),
                                           torque_from_coefficients(0.013, env, 4000.0, 0.254), env, 4000.0, 0.254);
    CHECK(c.thrust_coefficient == doctest::Approx(0.11).epsilon(1e-13));
    CHECK(c.torque_coefficient == doctest::Approx(0.013).epsilon(1e-13));
}

TEST_CASE("ESC current model") {
    const auto esc = reference::esc();
    CHECK(esc_current(esc, 0.1) == doctest::Approx(1.4345).epsilon(1e-13));
    CHECK(esc_current(esc, 0.3) == doctest::Approx(9.7085).epsilon(1e-13));
    CHECK(kind_of([&] { esc_current(esc, 0.0); }) == ErrorKind::OutOfEscDomain);
    CHECK(kind_of([&] { esc_current(esc, 0.61); }) == ErrorKind::OutOfEscDomain);

    const EscCurrentModel widened(73.05, 12.15, -0.511, {0.0, 0.6});
    CHECK(esc_current(widened, 0.0) == doctest::Approx(-0.511).epsilon(1e-15));

    double prev = esc_current(esc, 0.05);
    for (double m = 0.051; m <= 0.6; m += 0.001) {
        const double i = esc_current(esc, m);
        CHECK(i > prev);
        prev = i;
    }
    // decreasing at the lower end of the window
    CHECK(kind_of([] { EscCurrentModel(73.05, 12.15, -0.511, {-0.2, 0.6}); }) == ErrorKind::InvalidModel);
    CHECK(kind_of([] { EscCurrentModel(73.05, 12.15, -0.511, {0.3, 0.3}); }) == ErrorKind::InvalidModel);
}

TEST_CASE("rotor speed for a required thrust") {
    const auto s = reference::thrust_surrogate();
    const auto ref = as_oracle(s.terms());

    SUBCASE("round trip at 7000 RPM") {
        for (double vp : {0.0, 3.0, 9.5}) {
            const double t0 = thrust(s, 7000.0, vp);
            CHECK(required_rpm(s, t0, vp) == doctest::Approx(7000.0).epsilon(1e-12));
            CHECK(std::fabs(required_rpm(s, t0, vp) - 7000.0) <= 1e-6);
        }
    }
    SUBCASE("hover thrust against a root scan") {
        const auto expected = oracle::bisect_rising([&](double n) { return oracle::poly(ref, 0.0, n); }, 4.905,
                                                    2000.0, 10000.0, 80000);
        REQUIRE(expected);
        const double n = required_rpm(s, 4.905, 0.0);
        CHECK(std::fabs(n - *expected) <= 1e-6);
        CHECK(std::fabs(thrust(s, n, 0.0) - 4.905) <= 1e-9);
    }
    SUBCASE("thrust beyond the top of the RPM window") {
        const double tmax = thrust(s, 10000.0, 2.0);
        CHECK(kind_of([&] { required_rpm(s, tmax + 0.01, 2.0); }) == ErrorKind::RpmInfeasible);
    }
    SUBCASE("inflow outside the fit region") {
        CHECK(kind_of([&] { required_rpm(s, 3.0, 25.0); }) == ErrorKind::OutOfSurrogateDomain);
    }
    SUBCASE("random round trips, quadratic branch against bisection") {
        std::mt19937_64 rng(42);
        std::uniform_real_distribution<double> vp_d(0.0, 15.0), n_d(3500.0, 9800.0);
        int checked = 0;
        while (checked < 100) {
            const double vp = vp_d(rng), n0 = n_d(rng);
            const double t = thrust(s, n0, vp);
            if (t <= 0.0 || s.rpm_derivative(n0, vp) <= 0.0) continue;
            const double n = required_rpm(s, t, vp);
            CHECK(std::fabs(thrust(s, n, vp) - t) <= 1e-9);
            const auto b = oracle::bisect_rising([&](double x) { return oracle::poly(ref, vp, x); }, t, 2000.0, 10000.0);
            REQUIRE(b);
            CHECK(std::fabs(n - *b) <= 1e-6);
            ++checked;
        }
    }
    SUBCASE("cubic-in-N surrogate goes through the bracketed search") {
        const auto q = reference::torque_surrogate();
        REQUIRE(q.rpm_degree() == 3);
        const double target = torque(q, 6100.0, 4.0);
        const double n = required_rpm(q, target, 4.0);
        CHECK(n == doctest::Approx(6100.0).epsilon(1e-10));
    }
}
