#include <doctest.h>

#include <cmath>
#include <random>

#include "ammet/errors.hpp"
#include "ammet/transistor.hpp"
#include "test_support.hpp"

using namespace ammet;

namespace {

// Reference values from tests/oracles/transistor_oracle.py (mpmath, 50 digits).
constexpr double kGainWOverL01 = 99.458545123378099209;
constexpr double kGainWOverL05 = 7.5023016680909284297;
constexpr double kGainWOverL20 = 0.35956979956497361171;
constexpr double kRefVbe = 0.53427705192064852008;
constexpr double kRefIb = 9.4657229480793514799e-6;
constexpr double kRefIc = 0.00094144703295694574771;
constexpr double kRefVce = 9.0585529670430542523;

TransistorParams params_with(double w_over_l, double gamma = 0.995) {
    TransistorParams p;
    p.diffusion_length_LB = 1e-5;
    p.base_width_W = w_over_l * p.diffusion_length_LB;
    p.injection_efficiency_gamma = gamma;
    return p;
}

// Plain bisection on the base-loop equation, independent of the Newton path.
double bisect_vbe(const BiasCircuit& c, const TransistorParams& p) {
    auto f = [&](double v) {
        return (c.supply_VCC - v) / c.base_resistor_RB - p.saturation_current_IS * std::expm1(v / p.thermal_voltage_VT);
    };
    double lo = 0.0, hi = c.supply_VCC;
    while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("current_gain") {
    CHECK(current_gain(1e-3, 1e-4) == doctest::Approx(10.0).epsilon(1e-15));
    CHECK(current_gain(3.7e-6, 3.7e-6) == 1.0);
    CHECK(current_gain(2e-3, 1e-5) == doctest::Approx(200.0).epsilon(1e-15));
    CHECK_THROWS_AS(current_gain(1e-3, 0.0), DomainError);
    CHECK_THROWS_AS(current_gain(1e-3, -1e-6), DomainError);
    CHECK_THROWS_AS(current_gain(-1e-3, 1e-6), DomainError);
}

TEST_CASE("base_current") {
    CHECK(base_current(0, 1e-9) == 1e-9);
    CHECK(base_current(1e-6, 0) == 1e-6);
    CHECK(base_current(1e-6, 1e-9) == doctest::Approx(1.001e-6).epsilon(1e-15));
    CHECK_THROWS_AS(base_current(-1e-6, 0), DomainError);
    CHECK_THROWS_AS(base_current(0, -1e-9), DomainError);
}

TEST_CASE("gain_from_base_width against the high-precision oracle") {
    CHECK(gain_from_base_width(params_with(0.1)) == doctest::Approx(kGainWOverL01).epsilon(1e-12));
    CHECK(gain_from_base_width(params_with(0.5)) == doctest::Approx(kGainWOverL05).epsilon(1e-12));
    CHECK(gain_from_base_width(params_with(2.0)) == doctest::Approx(kGainWOverL20).epsilon(1e-12));
    CHECK(gain_from_base_width(params_with(2.0)) < gain_from_base_width(params_with(0.5)));

    // gamma * sech(W/L) = 1/2 gives beta = 1.
    const double w = 0.3;
    const auto p = params_with(w, 0.5 * std::cosh(w));
    CHECK(gain_from_base_width(p) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("unbounded gain and bad parameters are rejected") {
    auto p = params_with(1e-9, 1.0);  // sech(1e-9) rounds to 1
    CHECK_THROWS_AS(gain_from_base_width(p), DomainError);

    auto bad = params_with(0.1);
    bad.injection_efficiency_gamma = 0.0;
    CHECK_THROWS_AS(gain_from_base_width(bad), DomainError);
    bad = params_with(0.1);
    bad.base_width_W = -1;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = params_with(0.1);
    bad.leakage_ICBO = -1e-12;
    CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("property: gain strictly decreases with base width") {
    double previous = INFINITY;
    for (int k = 1; k <= 300; ++k) {
        const double w_over_l = 0.01 * k;  // 0.01 .. 3.0
        const double beta = gain_from_base_width(params_with(w_over_l));
        REQUIRE(beta < previous);
        previous = beta;
    }
}

TEST_CASE("effective_gain_with_leakage") {
    CHECK(effective_gain_with_leakage(1e-3, 100, 0) == 100.0);
    CHECK(effective_gain_with_leakage(1e-3, 100, 1e-5) == doctest::Approx(50.0).epsilon(1e-14));
    CHECK_THROWS_AS(effective_gain_with_leakage(0, 100, 0), DomainError);
    CHECK_THROWS_AS(effective_gain_with_leakage(1e-3, 0, 0), DomainError);
    CHECK_THROWS_AS(effective_gain_with_leakage(1e-3, 100, -1e-9), DomainError);

    // Approaches the ideal gain from below as i_c grows at fixed leakage.
    double previous = 0.0;
    for (double ic = 1e-6; ic < 1e3; ic *= 10) {
        const double g = effective_gain_with_leakage(ic, 100, 1e-6);
        CHECK(g < 100.0);
        CHECK(g > previous);
        previous = g;
    }
    CHECK(100.0 - previous < 1e-3);
}

TEST_CASE("property: leakage never raises the gain, and the decomposition identity holds") {
    auto rng = testing::seeded_rng(3);
    std::uniform_real_distribution<double> log_ic(-9, -1), log_beta(0, 3), log_ratio(-6, 2);
    for (int k = 0; k < 10000; ++k) {
        const double ic = std::pow(10.0, log_ic(rng));
        const double beta = std::pow(10.0, log_beta(rng));
        const double icbo = (ic / beta) * std::pow(10.0, log_ratio(rng));
        const double g = effective_gain_with_leakage(ic, beta, icbo);
        REQUIRE(g < beta);
        REQUIRE(g == current_gain(ic, base_current(ic / beta, icbo)));
        REQUIRE(effective_gain_with_leakage(ic, beta, 0.0) == beta);
    }
}

TEST_CASE("solve_bias_point: dead circuit") {
    const auto op = solve_bias_point({0.0, 1e6, 1e3}, params_with(0.1));
    CHECK(op.v_BE == 0.0);
    CHECK(op.i_B == 0.0);
    CHECK(op.i_C == 0.0);
    CHECK(op.v_CE == 0.0);
    CHECK_FALSE(op.saturated);
}

TEST_CASE("solve_bias_point: reference circuit in forward-active mode") {
    const BiasCircuit circuit{10.0, 1e6, 1e3};
    const auto p = params_with(0.1);
    const auto op = solve_bias_point(circuit, p);

    CHECK(std::abs(op.v_BE - kRefVbe) < 1e-9);
    CHECK(std::abs(op.v_BE - bisect_vbe(circuit, p)) < 1e-9);
    CHECK(op.i_B == doctest::Approx(kRefIb).epsilon(1e-12));
    CHECK(op.i_C == doctest::Approx(kRefIc).epsilon(1e-12));
    CHECK(op.v_CE == doctest::Approx(kRefVce).epsilon(1e-12));
    CHECK_FALSE(op.saturated);
    CHECK(op.iterations < 10);
    CHECK(std::abs((circuit.supply_VCC - op.v_BE) / circuit.base_resistor_RB - op.i_B) < 1e-12);
}

TEST_CASE("solve_bias_point: large collector resistor saturates") {
    const BiasCircuit circuit{10.0, 1e6, 1e6};
    const auto p = params_with(0.1);
    const auto op = solve_bias_point(circuit, p);
    CHECK(op.saturated);
    CHECK(op.v_CE == p.vce_saturation);
    CHECK(op.i_C == doctest::Approx(9.8e-6).epsilon(1e-14));
    CHECK(gain_from_base_width(p) * op.i_B * circuit.collector_resistor_RC > circuit.supply_VCC - p.vce_saturation);
    CHECK(std::abs(op.v_BE - kRefVbe) < 1e-9);
}

TEST_CASE("solve_bias_point: iteration cap raises NumericError") {
    CHECK_THROWS_AS(solve_bias_point({10.0, 1e6, 1e3}, params_with(0.1), {1e-14, 1}), NumericError);
}

TEST_CASE("solve_bias_point: invalid circuits") {
    CHECK_THROWS_AS(solve_bias_point({-1.0, 1e6, 1e3}, params_with(0.1)), DomainError);
    CHECK_THROWS_AS(solve_bias_point({10.0, 0.0, 1e3}, params_with(0.1)), DomainError);
    CHECK_THROWS_AS(solve_bias_point({10.0, 1e6, -5.0}, params_with(0.1)), DomainError);
}

TEST_CASE("property: Newton agrees with bisection on random circuits") {
    auto rng = testing::seeded_rng(4);
    std::uniform_real_distribution<double> vcc(0.3, 30.0), log_rb(3, 7), log_rc(1, 6), log_is(-16, -12),
        vt(0.024, 0.03), w_over_l(0.02, 2.0), gamma(0.9, 1.0);
    for (int k = 0; k < 500; ++k) {
        const BiasCircuit c{vcc(rng), std::pow(10.0, log_rb(rng)), std::pow(10.0, log_rc(rng))};
        auto p = params_with(w_over_l(rng), gamma(rng));
        p.saturation_current_IS = std::pow(10.0, log_is(rng));
        p.thermal_voltage_VT = vt(rng);

        const auto op = solve_bias_point(c, p);
        REQUIRE(std::abs(op.v_BE - bisect_vbe(c, p)) < 1e-9);
        REQUIRE(std::abs((c.supply_VCC - op.v_BE) / c.base_resistor_RB - op.i_B) < 1e-12);
        REQUIRE(std::abs(op.i_B - p.saturation_current_IS * std::expm1(op.v_BE / p.thermal_voltage_VT)) < 1e-12);
        REQUIRE(op.i_B >= 0.0);
        REQUIRE(op.i_C >= 0.0);
        if (!op.saturated) {
            REQUIRE(op.i_C == gain_from_base_width(p) * op.i_B);
        } else {
            REQUIRE(op.v_CE == p.vce_saturation);
        }
    }
}
