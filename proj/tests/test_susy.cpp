#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "piv/errors.hpp"
#include "piv/seeds.hpp"
#include "piv/susy.hpp"
#include "piv/verify.hpp"

using namespace piv;

namespace {

// First-order Darboux step A^+ f = f' - (u'/u) f, one order lower.
Jet darboux(const Jet& u, const Jet& f) {
    const int n = f.order() - 1;
    return f.derivative() - log_derivative(u) * f.truncated(n);
}

}  // namespace

TEST_CASE("wronskian examples") {
    const double x = 0.6;
    const Jet u = seed_jet(-1.0, Complex(0.2, 0.5), x, 4);
    const Jet w1 = wronskian_jet(std::vector<Jet>{u}, 4);
    for (int n = 0; n <= 4; ++n) CHECK(std::abs(w1[n] - u[n]) <= 1e-15 * std::max(1.0, std::abs(u[n])));

    const Jet w2 = wronskian_jet(std::vector<Jet>{u, u}, 2);
    for (Complex c : w2.coeffs()) CHECK(std::abs(c) <= 1e-14);

    for (double c : {-2.0, 0.0, 1.3}) {
        const Jet g = ground_state_jet(c, 3);
        const Jet xg = Jet::variable(c, 3) * g;
        const Jet w = wronskian_jet(std::vector<Jet>{g, xg}, 2);
        CHECK(std::abs(w.value() - std::exp(-c * c)) <= 1e-15);
        CHECK(std::abs(w[1] - (-2 * c * std::exp(-c * c))) <= 1e-14);
    }

    const Jet empty = wronskian_jet(std::span<const Jet>{}, 2);
    CHECK(empty.value() == Complex(1.0));
}

TEST_CASE("wronskian of rational chain matches hand algebra") {
    // u_1 = e^{x^2/2}(1+2x^2), u_2 = a^- u_1 = sqrt2 e^{x^2/2}(2x^3 + 3x)
    const double x = 0.9;
    const SusySystem sys({-2.5, 0.0, 2, Family::One});
    const auto chain = seed_chain_jets(sys.spec, x, 3);
    const double e = std::exp(x * x / 2);
    CHECK(chain[1].value().real() == doctest::Approx(std::sqrt(2.0) * e * (2 * x * x * x + 3 * x)).epsilon(1e-14));
    const Jet w = wronskian_jet(chain, 1);
    // W = sqrt2 e^{x^2} (4x^4 + 3)
    CHECK(w.value().real() == doctest::Approx(std::sqrt(2.0) * e * e * (4 * x * x * x * x + 3)).epsilon(1e-13));
}

TEST_CASE("extremal log derivative examples") {
    const SusySystem rational({-2.5, 0.0, 1, Family::One});
    const auto [v, d] = extremal_state_logderiv(rational, Family::One, 1.0);
    CHECK(v.real() == doctest::Approx(-7.0 / 3.0).epsilon(1e-14));
    // d/dx of -(x + 4x/(1+2x^2)) at 1: -(1 + 4(1-2)/9) = -5/9
    CHECK(d.real() == doctest::Approx(-5.0 / 9.0).epsilon(1e-13));

    const SusySystem generic({0.7, Complex(0.3, 0.9), 1, Family::One});
    for (double x : {-1.2, 0.5, 2.0}) {
        const SeedValue s = seed_eval(0.7, Complex(0.3, 0.9), x);
        CHECK(oracle::rel(extremal_state_logderiv(generic, Family::One, x).first, -s.u_prime / s.u) <= 1e-14);
    }

    const SusySystem complex2({1.5, Complex(0.5, 1.0), 1, Family::Two});
    for (int i = 0; i <= 200; ++i) {
        const double x = -5.0 + 10.0 * i / 200;
        const auto [a, b] = extremal_state_logderiv(complex2, Family::Two, x);
        CHECK(std::isfinite(std::abs(a)));
        CHECK(std::isfinite(std::abs(b)));
    }
}

TEST_CASE("zeros of the extremal state surface as singularities") {
    const SusySystem sys({1.5, 0.0, 1, Family::One});
    const double node = 0.924138873004592;
    CHECK_NOTHROW(extremal_state_logderiv(sys, Family::One, 0.3));
    const Jet d = extremal_log_derivative_jet(sys, Family::One, node, 1);
    CHECK(std::abs(d.value()) > 1e6);
}

TEST_CASE("bkp_action examples") {
    const double x = 0.4;
    const SusySystem sys({-2.5, 0.0, 1, Family::One});
    const Jet u1 = seed_chain_jets(sys.spec, x, 4)[0];
    for (Complex c : bkp_action(sys, u1).coeffs()) CHECK(std::abs(c) <= 1e-13);

    const Jet g = ground_state_jet(x, 4);
    const Jet b = bkp_action(sys, g);
    CHECK(b.order() == 3);
    const Jet direct = wronskian_jet(std::vector<Jet>{u1, g}, 3) / u1.truncated(3);
    for (int n = 0; n <= 3; ++n) CHECK(std::abs(b[n] - direct[n]) <= 1e-14 * std::max(1.0, std::abs(direct[n])));
}

TEST_CASE("second-order intertwiner equals two first-order steps") {
    const SusySystem sys({-0.8, Complex(0.3, 0.6), 2, Family::One});
    for (double x : {-2.0, -0.3, 0.8, 2.5}) {
        const int order = 6;
        const auto chain = seed_chain_jets(sys.spec, x, order);
        const Jet psi = oscillator_eigenfunction_jet(2, x, order);
        const Jet v2 = darboux(chain[0], chain[1]);
        const Jet step1 = darboux(chain[0], psi);
        const Jet stepwise = darboux(v2, step1);
        const Jet crum = bkp_action(sys, psi).truncated(stepwise.order());
        for (int n = 0; n <= stepwise.order(); ++n)
            CHECK(std::abs(stepwise[n] - crum[n]) <= 1e-10 * std::max(1.0, std::abs(crum[n])));
    }
}

TEST_CASE("partner potential examples") {
    const SusySystem rational({-2.5, 0.0, 1, Family::One});
    CHECK(partner_potential(rational, 0.0).real() == doctest::Approx(-5.0).epsilon(1e-14));
    CHECK(partner_potential(rational, 1.0).real() == doctest::Approx(-1.0 / 18.0).epsilon(1e-13));
    // deleting the ground level: x^2/2 - (ln e^{-x^2/2})'' = x^2/2 + 1
    const SusySystem ground({0.5, 0.0, 1, Family::One});
    for (double x : {-3.0, 0.0, 1.7}) CHECK(std::abs(partner_potential(ground, x) - (x * x / 2 + 1)) <= 1e-13);
}

TEST_CASE("Crum consistency of the k=2 potential") {
    const SusySystem sys({-1.1, 0.35, 2, Family::One});
    for (int i = 0; i < 50; ++i) {
        const double x = oracle::uniform(-4, 4);
        const auto chain = seed_chain_jets(sys.spec, x, 4);
        const Jet v2 = darboux(chain[0], chain[1]);  // order 3
        const Complex ln_u1_pp = log_derivative(chain[0])[1];
        const Complex ln_v2_pp = log_derivative(v2)[1];
        const Complex v = x * x / 2 - ln_u1_pp - ln_v2_pp;
        CHECK(oracle::rel(partner_potential(sys, x), v) <= 1e-10);
    }
}

TEST_CASE("transformed and missing eigenfunctions solve the partner equation") {
    const std::vector<SeedSpec> specs = {
        {-2.5, 0.0, 1, Family::One}, {-2.5, 0.0, 2, Family::One}, {-2.5, 0.0, 3, Family::One},
        {-0.5, 0.0, 2, Family::One}, {0.5, Complex(0.4, 1.0), 2, Family::One}, {2.5, Complex(1.0, -1.0), 3, Family::One},
    };
    for (const auto& spec : specs) {
        const SusySystem sys(spec);
        for (int i = 0; i <= 40; ++i) {
            const double x = -4.0 + 8.0 * i / 40;
            const Jet v = partner_potential_jet(sys, x, 0);
            for (int n = 0; n <= 3; ++n) {
                bool degenerate = false;
                for (int j = 1; j <= spec.k; ++j) degenerate |= std::abs(n + 0.5 - spec.factorization_energy(j)) < 1e-12;
                if (degenerate) continue;
                const Jet psi = transformed_eigenfunction_jet(sys, n, x, 2);
                CHECK(eigen_residual(psi, v, n + 0.5, 1e-9).pass);
            }
            for (int j = 1; j <= spec.k; ++j) {
                const Jet psi = missing_state_jet(sys, j, x, 2);
                CHECK(eigen_residual(psi, v, spec.factorization_energy(j), 1e-9).pass);
            }
        }
    }
}

TEST_CASE("transformed eigenfunction vanishes with its Wronskian numerator") {
    // W(u_1, x e^{-x^2/2}) ∝ 1 - 4x^2 - 4x^4 for the rational seed
    const SusySystem sys({-2.5, 0.0, 1, Family::One});
    const double node = std::sqrt((std::sqrt(2.0) - 1) / 2);
    CHECK(std::abs(transformed_eigenfunction(sys, 1, node)) <= 1e-14);
    CHECK(std::abs(transformed_eigenfunction(sys, 1, 0.2)) > 1e-3);
}

TEST_CASE("degenerate eigenvalue") {
    const SusySystem sys({0.5, 0.0, 1, Family::One});
    CHECK_THROWS_AS(transformed_eigenfunction(sys, 0, 0.3), DegenerateError);
}

TEST_CASE("missing state examples") {
    const SusySystem one({-1.4, Complex(0.2, 0.3), 1, Family::One});
    for (double x : {-1.0, 0.5}) {
        const SeedValue s = seed_eval(-1.4, Complex(0.2, 0.3), x);
        CHECK(oracle::rel(missing_state_eigenfunction(one, 1, x), 1.0 / s.u) <= 1e-14);
    }
    const SusySystem three({-2.5, 0.0, 3, Family::One});
    for (double x : {-1.0, 0.5, 2.0}) {
        const Jet m = missing_state_jet(three, 3, x, 2);
        CHECK(oracle::rel(log_derivative(m).value(), extremal_state_logderiv(three, Family::One, x).first) <= 1e-12);
    }
}

TEST_CASE("real regular specs give real potentials") {
    for (const SeedSpec& spec : {SeedSpec{-2.5, 0.0, 3, Family::One}, SeedSpec{-1.0, lambda_from_nu(-1.0, 0.5), 2, Family::One}}) {
        const SusySystem sys(spec);
        for (int i = 0; i <= 50; ++i) {
            const Complex v = partner_potential(sys, -4.0 + 8.0 * i / 50);
            CHECK(std::abs(v.imag()) <= 1e-13 * std::abs(v));
        }
    }
}

TEST_CASE("oscillator eigenfunctions") {
    for (int n = 0; n <= 3; ++n)
        for (double x : {-1.5, 0.0, 2.2}) {
            const Jet psi = oscillator_eigenfunction_jet(n, x, 2);
            const Jet v = Complex(0.5) * Jet::variable(x, 0) * Jet::variable(x, 0);
            CHECK(eigen_residual(psi, v, n + 0.5, 1e-12).pass);
        }
}
