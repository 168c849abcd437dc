#include <doctest.h>

#include <cmath>

#include "divland/error.hpp"
#include "divland/observer.hpp"

using namespace divland;

TEST_CASE("observe_theta") {
    CHECK(observe_theta({10, 0, 0}).theta_z == 0.0);
    CHECK(observe_theta({10, -2, 0}).theta_z == doctest::Approx(-0.2));
    CHECK(observe_theta({0.5, -0.05, 0}).theta_z == doctest::Approx(-0.1));
    CHECK_THROWS_AS(observe_theta({0, -1, 0}), NumericalError);
    CHECK_THROWS_AS(observe_theta({-1, -1, 0}), NumericalError);
}

TEST_CASE("theta_dot") {
    CHECK(theta_dot({-0.2, 0}, {-0.2, 0.03}) == 0.0);
    CHECK(theta_dot({-0.2, 0}, {-0.1, 0.03}) == doctest::Approx(10.0 / 3.0));
    CHECK_THROWS_AS(theta_dot({0, 1}, {0, 1}), NumericalError);
    CHECK_THROWS_AS(theta_dot({0, 1}, {0, 0.5}), NumericalError);
}

TEST_CASE("perfect constant-divergence trajectory") {
    const double c2 = 0.2, z0 = 10, T = 0.03;
    Observation prev{};
    for (int k = 0; k < 300; ++k) {
        const double t = k * T;
        const double z = z0 * std::exp(-c2 * t);
        const Observation o = observe_theta({z, -c2 * z, t});
        CHECK(o.theta_z == doctest::Approx(-c2).epsilon(1e-15));
        if (k > 0) CHECK(std::abs(theta_dot(prev, o)) < T);
        prev = o;
    }
}

TEST_CASE("theta sign follows v_z") {
    for (double v : {-3.0, -0.1, 0.2, 4.0})
        for (double z : {0.1, 1.0, 30.0}) CHECK(std::signbit(observe_theta({z, v, 0}).theta_z) == std::signbit(v));
}

TEST_CASE("delay_steps") {
    CHECK(delay_steps(0.15, 0.03) == 5);
    CHECK(delay_steps(0.0, 0.03) == 0);
    CHECK(delay_steps(0.16, 0.03) == 5);
    CHECK_THROWS_AS(delay_steps(0.1, 0.0), ConfigError);
}

TEST_CASE("DelayLine") {
    DelayLine d0(0, 9.81);
    CHECK(d0.push_pop(3.0) == 3.0);

    DelayLine dc(5, 2.0);
    for (int i = 0; i < 20; ++i) CHECK(dc.push_pop(2.0) == 2.0);

    DelayLine di(delay_steps(0.15, 0.03), 0.0);
    for (int k = 0; k < 12; ++k) {
        const double out = di.push_pop(k == 0 ? 1.0 : 0.0);
        CHECK(out == (k == 5 ? 1.0 : 0.0));
    }

    DelayLine pre(3, 9.81);
    CHECK(pre.push_pop(1) == 9.81);
    CHECK(pre.push_pop(2) == 9.81);
    CHECK(pre.push_pop(3) == 9.81);
    CHECK(pre.push_pop(4) == 1);
}

TEST_CASE("DelayLine is linear and time-invariant") {
    DelayLine a(4, 0), b(4, 0), s(4, 0);
    for (int k = 0; k < 40; ++k) {
        const double x = std::sin(0.3 * k), y = std::cos(1.7 * k) * k;
        CHECK(s.push_pop(x + y) == doctest::Approx(a.push_pop(x) + b.push_pop(y)));
    }
}
