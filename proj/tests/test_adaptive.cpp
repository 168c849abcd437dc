#include <doctest.h>

#include <cmath>

#include "divland/adaptive.hpp"
#include "divland/error.hpp"
#include "divland/scenario.hpp"
#include "divland/sweeps.hpp"

using namespace divland;

TEST_CASE("update_gain") {
    AdaptiveConfig c;
    AdaptiveState s{10, 10, 0};
    const AdaptiveState same = update_gain(c, s, c.cov_setpoint);
    CHECK(same.k_effective == 10);
    CHECK(same.k_prime == 10);
    CHECK(same.last_e_cov == 0);

    const AdaptiveState up = update_gain(c, s, 0.0);
    CHECK(up.last_e_cov == doctest::Approx(0.05));
    CHECK(up.k_effective == doctest::Approx(10.075));
    CHECK(up.k_prime == doctest::Approx(10.0025));

    AdaptiveState d = s;
    for (int i = 0; i < 200000; ++i) {
        const AdaptiveState n = update_gain(c, d, 2 * c.cov_setpoint);
        CHECK(n.k_prime <= d.k_prime);
        if (d.k_prime > c.k_floor) CHECK(n.k_prime < d.k_prime);
        d = n;
    }
    CHECK(d.k_prime == doctest::Approx(c.k_floor));
}

TEST_CASE("gain floor and non-negative K") {
    AdaptiveConfig c;
    c.outer_p = 1.0;
    AdaptiveState s{0.2, 0.2, 0};
    const AdaptiveState n = update_gain(c, s, 500.0);
    CHECK(n.k_effective == 0.0);
    CHECK(n.k_prime == c.k_floor);
}

TEST_CASE("scale structure: relative change depends only on (P, I, e)") {
    AdaptiveConfig c;
    for (double e_cov : {-0.3, -0.01, 0.0, 0.02, 0.05}) {
        const double cov = c.cov_setpoint - e_cov;
        const AdaptiveState a = update_gain(c, {1.0, 1.0, 0}, cov);
        for (double k : {3.0, 50.0, 777.0}) {
            const AdaptiveState b = update_gain(c, {k, k, 0}, cov);
            CHECK(b.k_prime / k == doctest::Approx(a.k_prime / 1.0).epsilon(1e-14));
            CHECK(b.k_effective / k == doctest::Approx(a.k_effective / 1.0).epsilon(1e-14));
        }
    }
}

TEST_CASE("config validation") {
    AdaptiveConfig c;
    c.outer_p = 1.5;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = {};
    c.k_init = 0.05;
    CHECK_THROWS_AS(c.validate(), ConfigError);
}

TEST_CASE("hover ranging: degenerate band returns at the first full window") {
    ScenarioConfig s = hover_base();
    s.z0 = 10;
    s.adaptive->convergence_band = INFINITY;
    const HoverResult h = run_hover_ranging(s);
    REQUIRE(h.converged);
    CHECK(h.termination == Termination::converged);
    CHECK(h.converged->k == doctest::Approx(50.0).epsilon(0.01));
}

TEST_CASE("hover ranging: vacuum, K grows monotonically before oscillation") {
    ScenarioConfig s = hover_base();
    s.vehicle.drag_coeff_half = 0;
    s.z0 = 10;
    s.noise_sigma = 1e-6;
    s.stop = StopRule::convergence;
    const ScenarioResult r = run_scenario(s);
    REQUIRE(r.termination == Termination::converged);
    // until the covariance first moves away from zero, every update raises K
    std::size_t i = 0;
    double prev = 0;
    for (; i < r.trace.size(); ++i) {
        const auto& rec = r.trace[i];
        if (rec.cov && std::abs(*rec.cov) > 1e-3) break;
        CHECK(rec.k_prime >= prev);
        prev = rec.k_prime;
    }
    CHECK(i > 100);
    CHECK(r.trace[i].k_prime > 50.0);
}

TEST_CASE("hover ranging: z = 5 converges within 120 s") {
    ScenarioConfig s = hover_base();
    s.z0 = 5;
    s.t_max = 120;
    s.noise_sigma = 1e-6;
    const HoverResult h = run_hover_ranging(s);
    REQUIRE(h.converged);
    CHECK(h.converged->z == doctest::Approx(5).epsilon(0.1));
}

TEST_CASE("edge landing: frozen outer loop is a fixed-gain landing") {
    ScenarioConfig s = edge_base();
    s.z0 = 5;
    s.noise_sigma = 1e-6;
    s.adaptive->outer_p = 0;
    s.adaptive->outer_i = 0;
    s.edge.trigger_cov = -1.0;  // switch as soon as the window fills
    const EdgeLandingResult e = run_edge_landing(s);
    CHECK(e.switched);
    for (const auto& rec : e.trace) CHECK(rec.k_z == 50.0);
}

TEST_CASE("edge landing: starting below the instability height lowers K first") {
    ScenarioConfig s = edge_base();
    s.z0 = 2;
    s.noise_sigma = 1e-6;
    s.edge.trigger_cov = 0.05;
    const EdgeLandingResult e = run_edge_landing(s);
    double first_change = 0;
    for (std::size_t i = 1; i < e.trace.size(); ++i) {
        const double d = e.trace[i].k_prime - e.trace[i - 1].k_prime;
        if (std::abs(d) > 1e-6 && e.trace[i].cov && std::abs(*e.trace[i].cov) > 0.05) {
            first_change = d;
            break;
        }
    }
    CHECK(first_change < 0.0);
}

TEST_CASE("edge landing: z0 = 5 reaches touchdown") {
    ScenarioConfig s = edge_base();
    s.z0 = 5;
    s.noise_sigma = 1e-6;
    s.edge.trigger_cov = 0.05;
    const EdgeLandingResult e = run_edge_landing(s);
    CHECK(e.switched);
    CHECK(e.termination == Termination::touchdown);
    CHECK(e.trace.back().phase == Phase::done);
    CHECK_FALSE(e.samples.empty());
}
