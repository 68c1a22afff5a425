// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include "hsharp/quadrature.hpp"
#include "hsharp/rng.hpp"

using namespace hsharp;

namespace {
const double inf = std::numeric_limits<double>::infinity();
}

TEST_CASE("smooth finite integrals", "[quadrature]") {
    auto r = integrate([](double x) { return std::sin(x); }, 0.0, 3.14159265358979323846);
    CHECK(r.value == Catch::Approx(2.0).epsilon(1e-13));

    auto poly = integrate([](double x) { return 3.0 * x * x; }, 1.0, 4.0);
    CHECK(poly.value == Catch::Approx(63.0).epsilon(1e-13));
}

TEST_CASE("endpoint power singularity", "[quadrature]") {
    auto r = integrate([](double t) { return 1.0 / std::sqrt(t); }, 0.0, 1.0);
    CHECK(r.value == Catch::Approx(2.0).epsilon(1e-12));

    auto s = integrate([](double t) { return std::pow(t, -0.9); }, 0.0, 1.0);
    CHECK(s.value == Catch::Approx(10.0).epsilon(1e-11));

    // power times analytic factor
    auto m = integrate([](double t) { return std::pow(t, -0.5) * std::exp(-t); }, 0.0, 1.0);
    CHECK(m.value == Catch::Approx(1.4936482656248540508).epsilon(1e-11));
}

TEST_CASE("power tails at infinity", "[quadrature]") {
    auto r = integrate([](double t) { return std::pow(t, -2.5); }, 1.0, inf);
    CHECK(r.value == Catch::Approx(1.0 / 1.5).epsilon(1e-12));

    // Gamma(1/2) as a full-line improper integral
    auto g = integrate([](double t) { return std::pow(t, -0.5) * std::exp(-t); }, 0.0, inf);
    CHECK(g.value == Catch::Approx(std::sqrt(3.14159265358979323846)).epsilon(1e-11));
}

TEST_CASE("declared interior breakpoints", "[quadrature]") {
    // piecewise integrand with a jump at 1: chi_{t<=1} * t + chi_{t>1} * t^{-3}
    auto f = [](double t) { return t <= 1.0 ? t : std::pow(t, -3.0); };
    auto r = integrate(f, 0.0, inf, {}, {1.0});
    CHECK(r.value == Catch::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("divergence detection", "[quadrature]") {
    CHECK_THROWS_AS(integrate([](double t) { return 1.0 / t; }, 0.0, 1.0), divergence_error);
    CHECK_THROWS_AS(integrate([](double t) { return std::pow(t, -1.4); }, 0.0, 1.0),
                    divergence_error);
    CHECK_THROWS_AS(integrate([](double t) { return 1.0 / t; }, 1.0, inf), divergence_error);
    CHECK_THROWS_AS(integrate([](double t) { return std::pow(t, -0.8); }, 1.0, inf),
                    divergence_error);
}

TEST_CASE("radial integration", "[quadrature]") {
    HeisenbergContext ctx(1);
    const double omega_big = ctx.unit_ball_volume();

    // indicator of the unit ball integrates to Omega_Q
    auto ind = integrate_radial(ctx, [](double r) { return r <= 1.0 ? 1.0 : 0.0; }, 0.0, 1.0);
    CHECK(ind.value == Catch::Approx(omega_big).epsilon(1e-12));

    // r^{-Q/2} on (0,1]: omega_Q * (2/Q) = 2 Omega_Q
    auto sing = integrate_radial(ctx, [&](double r) { return std::pow(r, -2.0); }, 0.0, 1.0);
    CHECK(sing.value == Catch::Approx(2.0 * omega_big).epsilon(1e-11));

    auto zero = integrate_radial(ctx, [](double) { return 0.0; }, 0.0, 1.0);
    CHECK(zero.value == 0.0);

    CHECK_THROWS_AS(integrate_radial(ctx, [&](double r) { return std::pow(r, -4.0); }, 0.0, 1.0),
                    divergence_error);
}

TEST_CASE("haar scaling of indicator profiles", "[quadrature]") {
    // |delta_rho(E)| = rho^Q |E| for E = B(0, s): computed both ways.
    Xoshiro256ss rng(23);
    for (int n : {1, 2}) {
        HeisenbergContext ctx(n);
        for (int i = 0; i < 10; ++i) {
            const double s = std::exp(rng.uniform(-1.0, 1.0));
            const double rho = std::exp(rng.uniform(-1.0, 1.0));
            auto base = integrate_radial(ctx, [&](double r) { return r <= s ? 1.0 : 0.0; },
                                         0.0, s);
            auto scaled = integrate_radial(
                ctx, [&](double r) { return r <= rho * s ? 1.0 : 0.0; }, 0.0, rho * s);
            CHECK(scaled.value ==
                  Catch::Approx(std::pow(rho, ctx.Q()) * base.value).epsilon(1e-11));
        }
    }
}

TEST_CASE("radial breakpoints forwarded", "[quadrature]") {
    HeisenbergContext ctx(1);
    // profile with a kink at r = 2 inside the range
    auto prof = [](double r) { return r <= 2.0 ? 1.0 : std::pow(r / 2.0, -8.0); };
    auto r = integrate_radial(ctx, prof, 0.0, inf, {}, {2.0});
    // omega * [ int_0^2 r^3 dr + int_2^inf (r/2)^{-8} r^3 dr ]
    const double omega = ctx.unit_sphere_measure();
    const double expected = omega * (4.0 + 256.0 * (1.0 / (4.0 * 16.0)));
    CHECK(r.value == Catch::Approx(expected).epsilon(1e-11));
}
