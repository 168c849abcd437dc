#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "divland/dynamics.hpp"
#include "divland/error.hpp"
#include "divland/observer.hpp"
#include "oracles.hpp"

using namespace divland;

TEST_CASE("wind_at") {
    CHECK(wind_at({0, 4, 1}, 0.0) == 0.0);
    CHECK(wind_at({0, 4, 1}, std::numbers::pi / 2) == doctest::Approx(4.0));
    CHECK(wind_at({-2, 0, 1}, 7.3) == -2.0);
}

TEST_CASE("drag_force") {
    CHECK(drag_force(0, 0, 0.5) == 0.0);
    CHECK(drag_force(0, -2, 0.5) == doctest::Approx(2.0));
    CHECK(drag_force(-1, 0, 0.0376) == doctest::Approx(-0.0376));
}

TEST_CASE("actuator effectiveness") {
    CHECK(apply_actuator_effectiveness(10, 0, 0.5, 0.5) == 10.0);
    CHECK(apply_actuator_effectiveness(10, 1, 0.5, 0.5) == doctest::Approx(4.5));
    CHECK(apply_actuator_effectiveness(1, 4, 0.5, 0.5) == 0.0);
}

TEST_CASE("accel") {
    VehicleParams veh;
    CHECK(accel({10, 0, 0}, veh.mass * veh.gravity, {}, veh) == doctest::Approx(0.0));
    CHECK(accel({10, -2, 0}, 9.81, {}, veh) == doctest::Approx(2.0));
    veh.drag_coeff_half = 0.0;
    CHECK(accel({10, 0, 0}, 11.81, {}, veh) == doctest::Approx(2.0));
}

TEST_CASE("step: vacuum equilibrium and closed-form ZOH") {
    VehicleParams vac;
    vac.drag_coeff_half = 0.0;
    const VehicleState s0{10, 0, 0};
    const VehicleState s1 = step(s0, 9.81, {}, vac, 0.03);
    CHECK(s1.z == 10.0);
    CHECK(s1.v_z == 0.0);
    CHECK(s1.t == doctest::Approx(0.03));

    const VehicleState s2 = step(s0, 10.81, {}, vac, 0.03);
    CHECK(s2.v_z == doctest::Approx(0.03).epsilon(1e-12));
    CHECK(s2.z == doctest::Approx(10.00045).epsilon(1e-12));
}

TEST_CASE("step: drag against a fine Euler oracle") {
    VehicleParams veh;  // k = 0.5
    const VehicleState s0{5, -2, 0};
    const double T = 0.03;
    const VehicleState s1 = step(s0, veh.mass * veh.gravity, {}, veh, T);
    const auto ref = oracle::fine_euler(5, -2, 9.81, 0, 1, 9.81, 0.5, T, 30000);
    CHECK(s1.v_z == doctest::Approx(ref.v).epsilon(1e-5));
    CHECK(s1.z == doctest::Approx(ref.z).epsilon(1e-8));
    CHECK(s1.v_z - s0.v_z == doctest::Approx(2.0 * T).epsilon(0.05));
}

TEST_CASE("step: euler mode is one explicit Euler step") {
    VehicleParams veh;
    const VehicleState s0{5, -2, 0};
    const VehicleState e = step(s0, 9.81, {}, veh, 0.03, {Integrator::euler, 0.0});
    CHECK(e.z == doctest::Approx(5 - 2 * 0.03));
    CHECK(e.v_z == doctest::Approx(-2 + 0.03 * 2.0));
}

TEST_CASE("step: errors and floor") {
    VehicleParams veh;
    CHECK_THROWS_AS(step({1, 0, 0}, 9.81, {}, veh, 0.0), ConfigError);
    CHECK_THROWS_AS(step({1, 0, 0}, 9.81, {}, veh, -0.1), ConfigError);
    CHECK_THROWS_AS(step({1, 0, 0}, std::nan(""), {}, veh, 0.03), ConfigError);
    CHECK_THROWS_AS(step({1, 0, 0}, INFINITY, {}, veh, 0.03), ConfigError);
    CHECK_THROWS_AS(step({0, 0, 0}, 9.81, {}, veh, 0.03), NumericalError);
    const VehicleState s = step({0.06, -3, 0}, 0, {}, veh, 0.03, {Integrator::rk4, 0.05});
    CHECK(s.z == 0.05);
    CHECK(touched_down(s, 0.05));
}

TEST_CASE("params validation") {
    VehicleParams v;
    v.mass = 0;
    CHECK_THROWS_AS(v.validate(), ConfigError);
    v = {};
    v.drag_coeff_half = -1;
    CHECK_THROWS_AS(v.validate(), ConfigError);
    EnvParams e;
    e.gust_amplitude = -1;
    CHECK_THROWS_AS(e.validate(), ConfigError);
}

TEST_CASE("property: sensitivity of theta_dot to thrust is 1/(m z)") {
    for (double m : {0.5, 1.0, 2.0}) {
        for (double z : {1.0, 2.0, 5.0, 10.0}) {
            VehicleParams veh;
            veh.mass = m;
            const EnvParams env{-1.0, 0.0, 0.0};
            const double T = 1e-4;
            const double u = m * veh.gravity;
            const double d = 1e-4 * u;
            const VehicleState s0{z, -0.3, 0};
            const double th0 = observe_theta(s0).theta_z;
            const double a = (observe_theta(step(s0, u, env, veh, T)).theta_z - th0) / T;
            const double b = (observe_theta(step(s0, u + d, env, veh, T)).theta_z - th0) / T;
            CHECK((b - a) / d == doctest::Approx(1.0 / (m * z)).epsilon(0.01));
        }
    }
}

TEST_CASE("property: vacuum exactness, drag sign, energy, determinism") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> Z(0.5, 50), V(-5, 5), U(0, 30), W(-4, 4), TT(0.001, 0.1);
    VehicleParams vac;
    vac.drag_coeff_half = 0.0;
    for (int i = 0; i < 500; ++i) {
        const double z = Z(rng), v = V(rng), u = U(rng), T = TT(rng);
        const VehicleState s = step({z, v, 0}, u, {}, vac, T);
        const double a = u / vac.mass - vac.gravity;
        CHECK(s.v_z == doctest::Approx(v + a * T).epsilon(1e-9));
        CHECK(s.z == doctest::Approx(z + v * T + 0.5 * a * T * T).epsilon(1e-9));

        const double w = W(rng);
        if (w != v) CHECK(std::signbit(drag_force(w, v, 0.5)) == std::signbit(w - v));

        const VehicleState f = step({z, v, 0}, 0.0, {}, vac, T);
        const double e0 = 0.5 * v * v + vac.gravity * z;
        const double e1 = 0.5 * f.v_z * f.v_z + vac.gravity * f.z;
        CHECK(std::abs(e1 - e0) <= 1e-6 * std::abs(e0));
    }
    VehicleParams veh;
    veh.actuator_b = 0.1;
    const EnvParams env{0.5, 2, 1};
    VehicleState a{8, -1, 0}, b{8, -1, 0};
    for (int i = 0; i < 1000; ++i) {
        a = step(a, 10 + std::sin(i * 0.1), env, veh, 0.03);
        b = step(b, 10 + std::sin(i * 0.1), env, veh, 0.03);
    }
    CHECK(a.z == b.z);
    CHECK(a.v_z == b.v_z);
    CHECK(a.t == b.t);
}

TEST_CASE("property: effective thrust") {
    VehicleParams veh;
    veh.actuator_b = 0.5;
    veh.actuator_c = 0.5;
    for (double v : {-3.0, -1.0, 0.0, 1.0}) {
        const ThrustCommand c = effective_thrust({5, v, 0}, 12.0, {}, veh);
        CHECK(c.effective_thrust >= 0.0);
        if (-v > 0) CHECK(c.effective_thrust <= c.commanded_thrust);
    }
}
