#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "piv/errors.hpp"
#include "piv/painleve.hpp"
#include "piv/seeds.hpp"
#include "piv/verify.hpp"

using namespace piv;

namespace {

// Jet of 4x/(1+2x^2) at x0 from its closed-form derivatives.
Jet rational_g_jet(double x0) {
    const double d = 1 + 2 * x0 * x0;
    const double g = 4 * x0 / d;
    const double g1 = (4 - 8 * x0 * x0) / (d * d);
    const double g2 = (32 * x0 * x0 * x0 - 48 * x0) / (d * d * d);
    return Jet(x0, {g, g1, g2 / 2});
}

}  // namespace

TEST_CASE("P_IV residual of the rational k=1 solution") {
    const Jet g = rational_g_jet(1.0);
    CHECK(g.derivative_value(2).real() == doctest::Approx(-16.0 / 27.0).epsilon(1e-15));
    const auto r = piv_residual(g, {3.0, -8.0});
    REQUIRE(r.has_value());
    CHECK(r->rhs.real() == doctest::Approx(-16.0 / 27.0).epsilon(1e-14));
    CHECK(std::abs(r->residual) <= 1e-12);
    CHECK(r->scale == doctest::Approx(192.0 / 27.0).epsilon(1e-14));
    CHECK(r->pass);

    CHECK_FALSE(piv_residual(rational_g_jet(0.0), {3.0, -8.0}).has_value());

    const auto wrong = piv_residual(g, {3.0, -7.0});
    REQUIRE(wrong.has_value());
    CHECK_FALSE(wrong->pass);
}

TEST_CASE("P_IV residual of the complex Bessel solution") {
    const SeedSpec spec{0.0, Complex(0.0, 1.0), 1, Family::One};
    const PivParams p = piv_params(spec.family, spec.epsilon1, spec.k);
    CHECK(p.a == 0.5);
    CHECK(p.b == -0.5);
    const auto r = piv_residual(g_jet(spec, 0.7, 2), p);
    REQUIRE(r.has_value());
    CHECK(r->pass);
    // second derivative from an independent finite-difference oracle
    const auto d = fd_cross_check([&](double x) { return g_solution(spec, x); }, 0.7, 1e-3);
    REQUIRE(d.has_value());
    const Jet g = g_jet(spec, 0.7, 2);
    const Jet fd_g(0.7, {g.value(), d->d1, d->d2 / 2.0});
    const auto fd_r = piv_residual(fd_g, p);
    REQUIRE(fd_r.has_value());
    CHECK(std::abs(fd_r->residual) <= 1e-6 * fd_r->scale);
}

TEST_CASE("Schrodinger residual examples") {
    for (double x : {-2.3, 0.0, 1.4}) {
        const auto r = schrodinger_residual(ground_state_jet(x, 2), 0.5);
        CHECK(std::abs(r.schrodinger.residual) <= 1e-13);
        CHECK(r.schrodinger.pass);
    }
    // u = e^{x^2/2}(1+2x^2) in Riccati form
    for (double x : {-1.0, 0.3, 2.0}) {
        const SeedValue s = seed_eval(-2.5, 0.0, x);
        const auto r = schrodinger_residual(seed_derivative_recurrence(s.u, s.u_prime, -2.5, x, 2), -2.5);
        REQUIRE(r.riccati.has_value());
        CHECK(std::abs(r.riccati->residual) <= 1e-11 * std::max(1.0, r.riccati->scale));
        const double alpha = x + 4 * x / (1 + 2 * x * x);
        CHECK(oracle::rel(r.riccati->lhs - r.riccati->rhs, 0.0) <= 1e-11 * (alpha * alpha + x * x + 5));
    }
}

TEST_CASE("seed jets satisfy the Schrodinger residual at random points") {
    for (int i = 0; i < 100; ++i) {
        const double eps = oracle::uniform(-5, 5), x = oracle::uniform(-4, 4);
        const Complex lam(oracle::uniform(-2, 2), oracle::uniform(-2, 2));
        const auto r = schrodinger_residual(seed_jet(eps, lam, x, 2), eps);
        CHECK(r.schrodinger.relative() <= 1e-11);
    }
}

TEST_CASE("Schrodinger and Riccati residuals are related by -2/u") {
    for (int i = 0; i < 100; ++i) {
        const double eps = oracle::uniform(-5, 5), x = oracle::uniform(-3, 3);
        const Complex u0(oracle::uniform(0.5, 2), oracle::uniform(-1, 1));
        // deliberately perturbed second coefficient so the residual is not zero
        Jet u = seed_derivative_recurrence(u0, Complex(0.3, 0.1), eps, x, 2);
        u = Jet(x, {u[0], u[1], u[2] + oracle::uniform(-0.1, 0.1)});
        const auto r = schrodinger_residual(u, eps);
        REQUIRE(r.riccati.has_value());
        const Complex predicted = r.schrodinger.residual * (-2.0 / u.value());
        CHECK(std::abs(r.riccati->residual - predicted) <= 1e-10 * std::max(1.0, std::abs(predicted)));
    }
}

TEST_CASE("Riccati form is absent where u vanishes") {
    const Jet u(0.0, {0.0, 1.0, 0.0});
    const auto r = schrodinger_residual(u, 1.5);
    CHECK_FALSE(r.riccati.has_value());
}

TEST_CASE("finite-difference cross-check examples") {
    const auto cube = fd_cross_check([](double x) { return Complex(x * x * x); }, 2.0, 1e-2);
    REQUIRE(cube.has_value());
    CHECK(std::abs(cube->d1 - 12.0) <= 1e-7);
    CHECK(std::abs(cube->d2 - 12.0) <= 1e-5);

    const SeedSpec rational{-2.5, 0.0, 1, Family::One};
    const auto d = fd_cross_check([&](double x) { return g_solution(rational, x); }, 1.0, 1e-3);
    REQUIRE(d.has_value());
    CHECK(std::abs(d->d1 - (-4.0 / 9.0)) <= 1e-10);

    CHECK_THROWS_AS(fd_cross_check([](double) { return Complex(1.0); }, 0.0, 0.0), std::invalid_argument);
    const auto pole = fd_cross_check([](double x) -> Complex { throw SingularityError("pole", x); }, 0.0, 1e-3);
    CHECK_FALSE(pole.has_value());
}

TEST_CASE("jet derivatives agree with finite differences for random regular specs") {
    int checked = 0;
    while (checked < 100) {
        const int family = 1 + static_cast<int>(oracle::uniform(0, 3));
        const int k = 1 + static_cast<int>(oracle::uniform(0, 3));
        const SeedSpec spec{oracle::uniform(-3, 3), Complex(oracle::uniform(-1, 1), oracle::uniform(0.5, 1.5)), k, family_from_int(std::min(family, 3))};
        if (!regularity_check(spec, -2.5, 2.5).regular()) continue;
        const double x = oracle::uniform(-2, 2);
        const Jet g = g_jet(spec, x, 2);
        const auto d = fd_cross_check([&](double t) { return g_solution(spec, t); }, x, 1e-3);
        REQUIRE(d.has_value());
        CHECK(std::abs(g.derivative_value(1) - d->d1) <= 1e-6 * std::max(1.0, std::abs(g.derivative_value(1))));
        CHECK(std::abs(g.derivative_value(2) - d->d2) <= 1e-6 * std::max(1.0, std::abs(g.derivative_value(2))));
        ++checked;
    }
}

TEST_CASE("eigen residual") {
    // harmonic oscillator first excited state
    for (double x : {-1.0, 0.5}) {
        const double e = std::exp(-x * x / 2);
        const Jet psi(x, {x * e, (1 - x * x) * e, (x * x * x - 3 * x) * e / 2});
        const Jet v = Jet::constant(x, x * x / 2, 0);
        CHECK(std::abs(eigen_residual(psi, v, 1.5, 1e-12).residual) <= 1e-15);
        CHECK_FALSE(eigen_residual(psi, v, 2.5, 1e-12).pass);
    }
}

TEST_CASE("residual soundness of sampled solutions") {
    for (const SeedSpec& spec : {SeedSpec{-2.5, 0.0, 3, Family::One}, SeedSpec{1.5, Complex(0.5, 1.0), 2, Family::Two},
                                 SeedSpec{2.5, Complex(0.3, 1.0), 2, Family::Three}}) {
        const PivSolution sol = sample_solution(spec, -5, 5, 101);
        CHECK(sol.residuals_pass());
        for (const auto& s : sol.samples) {
            if (!s.regular || !s.residual) continue;
            CHECK(std::abs(*s.residual) <= kPivTolerance * std::max(1.0, s.residual_scale));
        }
    }
}
