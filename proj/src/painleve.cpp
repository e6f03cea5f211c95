#include "piv/painleve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "piv/errors.hpp"
#include "piv/numerics.hpp"
#include "piv/susy.hpp"

namespace piv {

std::string_view to_string(HierarchyTag tag) noexcept {
    switch (tag) {
        case HierarchyTag::ConfluentHypergeometric: return "ConfluentHypergeometric";
        case HierarchyTag::Erf: return "Erf";
        case HierarchyTag::Erfi: return "Erfi";
        case HierarchyTag::Rational: return "Rational";
        case HierarchyTag::BesselI: return "BesselI";
    }
    return "ConfluentHypergeometric";
}

ExtremalEnergies extremal_energies(Family family, Real epsilon1, int k) {
    const Real ek = epsilon1 - (k - 1);
    const Real ground = 0.5;
    const Real raised = epsilon1 + 1.0;
    switch (family) {
        case Family::One: return {ek, ground, raised};
        case Family::Two: return {ground, raised, ek};
        case Family::Three: return {raised, ek, ground};
    }
    throw std::invalid_argument("unknown family");
}

PivParams params_from_energies(const ExtremalEnergies& e) noexcept {
    const Real gap = e.second - e.third;
    return {e.second + e.third - 2.0 * e.first - 1.0, -2.0 * gap * gap};
}

PivParams piv_params(Family family, Real epsilon1, int k) {
    if (k < 1) throw std::invalid_argument("piv_params: k must be >= 1");
    return params_from_energies(extremal_energies(family, epsilon1, k));
}

Jet g_jet(const SeedSpec& spec, Real x, int order) {
    const SusySystem system(spec);
    const Jet log_psi = extremal_log_derivative_jet(system, spec.family, x, order);
    return -Jet::variable(x, order) - log_psi;
}

Complex g_solution(const SeedSpec& spec, Real x) { return g_jet(spec, x, 0).value(); }

HierarchyTag classify_hierarchy(Real epsilon1, Complex lambda) {
    constexpr Real tol = 1e-12;
    const bool integer = numerics::near_integer(epsilon1, tol);
    const bool half_odd = !integer && numerics::near_integer(2.0 * epsilon1, 2.0 * tol);
    if (half_odd && epsilon1 < 0.0) {
        // -(4m+1)/2  <=>  (-2 eps - 1)/4 = m
        const bool rational_energy = numerics::near_integer((-2.0 * epsilon1 - 1.0) / 4.0, tol);
        if (rational_energy && std::abs(lambda) <= tol) return HierarchyTag::Rational;
        return HierarchyTag::Erf;
    }
    if (half_odd) return HierarchyTag::Erfi;
    if (integer && epsilon1 < 0.5) return HierarchyTag::BesselI;
    return HierarchyTag::ConfluentHypergeometric;
}

namespace {

const Real kSqrtPi = std::sqrt(std::numbers::pi);

Complex checked_ratio(Complex num, Complex den, Real x) {
    if (den == Complex(0.0) || !std::isfinite(std::abs(den))) throw SingularityError("closed form has a pole", x);
    return num / den;
}

Real bessel_at(Real nu, Real z, Real x) {
    try {
        return numerics::bessel_i(nu, z);
    } catch (const DomainError&) {
        throw SingularityError("closed form has a pole", x);
    }
}

Real sign_of(Real x) { return x < 0.0 ? -1.0 : 1.0; }

Complex hypergeometric_form(Real eps, Complex odd_weight, Complex even_weight, Real x) {
    using numerics::kummer_1f1;
    const Real z = x * x;
    const Real a1 = (1.0 - 2.0 * eps) / 4.0;
    const Real a2 = (3.0 - 2.0 * eps) / 4.0;
    const Real odd_part = 3.0 * kummer_1f1(a2, 1.5, z) - (2.0 * eps + 3.0) * z * kummer_1f1(a2, 2.5, z);
    const Complex num = odd_weight * odd_part - even_weight * 3.0 * x * (2.0 * eps + 1.0) * kummer_1f1(a1, 1.5, z);
    const Complex den = even_weight * 3.0 * kummer_1f1(a1, 0.5, z) + odd_weight * 3.0 * x * kummer_1f1(a2, 1.5, z);
    return checked_ratio(num, den, x);
}

// odd_weight multiplies the I_{1/4} branch; already carries sign(x).
Complex bessel_real_form(Real nu_signed, Real x) {
    const Real z = x * x;
    const Real w = 0.5 * z;
    if (x == 0.0) throw SingularityError("closed form has a pole", x);
    const Real i_m14 = bessel_at(-0.25, w, x);
    const Real i_14 = bessel_at(0.25, w, x);
    const Real i_34 = bessel_at(0.75, w, x);
    const Real i_54 = bessel_at(1.25, w, x);
    const Real num = nu_signed * (1.0 - z) * i_14 + z * (-i_m14 + i_34 + nu_signed * i_54);
    const Real den = x * (i_m14 + nu_signed * i_14);
    return checked_ratio(num, den, x);
}

Complex bessel_complex_form(Complex lambda_signed, Real x) {
    const Real w = 0.5 * x * x;
    if (x == 0.0) throw SingularityError("closed form has a pole", x);
    const Real g34 = numerics::gamma(0.75);
    const Real g54 = numerics::gamma(1.25);
    const Real i_m34 = bessel_at(-0.75, w, x);
    const Real i_m14 = bessel_at(-0.25, w, x);
    const Real i_14 = bessel_at(0.25, w, x);
    const Real i_34 = bessel_at(0.75, w, x);
    const Complex num = x * g34 * (i_34 - i_m14) + 2.0 * lambda_signed * x * g54 * (i_m34 - i_14);
    const Complex den = g34 * i_m14 + 2.0 * lambda_signed * g54 * i_14;
    return checked_ratio(num, den, x);
}

}  // namespace

Complex closed_form_g(const ClosedFormCase& c, Real x) {
    const Real z = x * x;
    switch (c.form) {
        case CatalogForm::HypergeometricReal: {
            const Real a1 = (1.0 - 2.0 * c.epsilon1) / 4.0;
            const Real a2 = (3.0 - 2.0 * c.epsilon1) / 4.0;
            return hypergeometric_form(c.epsilon1, 2.0 * c.nu * numerics::gamma(a2), numerics::gamma(a1), x);
        }
        case CatalogForm::ErfRealK1: {
            const Real phi = kSqrtPi * std::exp(z) * (1.0 + c.nu * numerics::erf(x));
            return checked_ratio(4.0 * (c.nu + x * phi), 2.0 * c.nu * x + (1.0 + 2.0 * z) * phi, x);
        }
        case CatalogForm::ErfRealK2: {
            const Real phi = kSqrtPi * std::exp(z) * (1.0 + c.nu * numerics::erf(x));
            const Real lead = c.nu + x * phi;
            return checked_ratio(4.0 * c.nu * lead * lead, phi * (phi * phi - 2.0 * c.nu * x * phi - 2.0 * c.nu * c.nu), x);
        }
        case CatalogForm::RationalK1: return 4.0 * x / (1.0 + 2.0 * z);
        case CatalogForm::RationalK2: return -4.0 * x / (1.0 + 2.0 * z) + 16.0 * x * z / (3.0 + 4.0 * z * z);
        case CatalogForm::RationalK3: {
            const Real z2 = z * z;
            return -16.0 * x * z / (3.0 + 4.0 * z2) +
                   12.0 * x * (3.0 - 4.0 * z + 4.0 * z2) / (9.0 + 18.0 * z - 12.0 * z2 + 8.0 * z2 * z);
        }
        case CatalogForm::BesselReal: return bessel_real_form(c.nu * sign_of(x), x);
        case CatalogForm::HypergeometricComplex: return hypergeometric_form(c.epsilon1, c.lambda, 1.0, x);
        case CatalogForm::ErfComplex: {
            const Complex phi = std::exp(z) * (4.0 + c.lambda * kSqrtPi * numerics::erf(x));
            return checked_ratio(4.0 * c.lambda + 4.0 * x * phi, 2.0 * c.lambda * x + (1.0 + 2.0 * z) * phi, x);
        }
        case CatalogForm::ErfiComplex: {
            const Complex phi = std::exp(-z) * (4.0 + c.lambda * kSqrtPi * numerics::erfi(x));
            return checked_ratio(4.0 * c.lambda * (1.0 - z) + 2.0 * x * (2.0 * z - 3.0) * phi,
                                 2.0 * c.lambda * x + (1.0 - 2.0 * z) * phi, x);
        }
        case CatalogForm::BesselComplex: return bessel_complex_form(c.lambda * sign_of(x), x);
    }
    throw std::invalid_argument("unknown catalog form");
}

SeedSpec matching_spec(const ClosedFormCase& c) {
    auto spec = [](Real eps, Complex lambda, int k) { return SeedSpec{eps, lambda, k, Family::One}; };
    switch (c.form) {
        case CatalogForm::HypergeometricReal: return spec(c.epsilon1, lambda_from_nu(c.epsilon1, c.nu), 1);
        case CatalogForm::ErfRealK1: return spec(-2.5, lambda_from_nu(-2.5, c.nu), 1);
        case CatalogForm::ErfRealK2: return spec(-0.5, lambda_from_nu(-0.5, c.nu), 2);
        case CatalogForm::RationalK1: return spec(-2.5, 0.0, 1);
        case CatalogForm::RationalK2: return spec(-2.5, 0.0, 2);
        case CatalogForm::RationalK3: return spec(-2.5, 0.0, 3);
        case CatalogForm::BesselReal: return spec(0.0, lambda_from_nu(0.0, c.nu), 1);
        case CatalogForm::HypergeometricComplex: return spec(c.epsilon1, c.lambda, 1);
        case CatalogForm::ErfComplex: return spec(-2.5, c.lambda, 1);
        case CatalogForm::ErfiComplex: return spec(2.5, c.lambda, 1);
        case CatalogForm::BesselComplex: return spec(0.0, c.lambda, 1);
    }
    throw std::invalid_argument("unknown catalog form");
}

LadderFunctions ladder_functions_fh(Complex g, Complex g_prime, Real x, Real a) noexcept {
    return {x + g, -x * x + 0.5 * g_prime - 0.5 * g * g - 2.0 * x * g + a};
}

Complex potential_from_g(Complex g, Complex g_prime, Real x, Real e1) noexcept {
    return 0.5 * x * x - 0.5 * g_prime + 0.5 * g * g + x * g + e1 - 0.5;
}

bool PivSolution::residuals_pass() const noexcept {
    for (const auto& s : samples)
        if (s.regular && s.residual && !s.residual_pass) return false;
    return true;
}

std::size_t PivSolution::irregular_count() const noexcept {
    std::size_t n = 0;
    for (const auto& s : samples) n += s.regular ? 0 : 1;
    return n;
}

std::vector<Real> uniform_grid(Real x_lo, Real x_hi, int n) {
    if (n < 2) throw std::invalid_argument("grid needs at least two samples");
    if (!(x_lo < x_hi)) throw std::invalid_argument("grid needs x_lo < x_hi");
    std::vector<Real> xs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) xs[static_cast<std::size_t>(i)] = x_lo + (x_hi - x_lo) * i / (n - 1);
    xs.back() = x_hi;
    return xs;
}

PivSolution sample_solution(const SeedSpec& spec, Real x_lo, Real x_hi, int n, Real tol) {
    spec.validate();
    PivSolution out;
    out.spec = spec;
    out.params = piv_params(spec.family, spec.epsilon1, spec.k);
    out.tag = classify_hierarchy(spec.epsilon1, spec.lambda);
    out.tolerance = tol;
    const std::vector<Real> xs = uniform_grid(x_lo, x_hi, n);
    out.regularity = regularity_check(spec, x_lo, x_hi, std::max(400, n));
    out.samples.reserve(xs.size());
    for (Real x : xs) {
        SolutionSample s;
        s.x = x;
        // zeros are bracketed to 1e-10; a sample this close sits on the pole
        const bool on_pole = std::any_of(out.regularity.singular_at.begin(), out.regularity.singular_at.end(),
                                         [x](Real z) { return std::abs(x - z) <= 1e-8; });
        if (on_pole) {
            out.samples.push_back(s);
            continue;
        }
        try {
            const Jet g = g_jet(spec, x, 2);
            s.regular = true;
            s.g = g.value();
            if (const auto r = piv_residual(g, out.params, tol)) {
                s.residual = r->residual;
                s.residual_scale = r->scale;
                s.residual_pass = r->pass;
            }
        } catch (const SingularityError&) {
            s.regular = false;
        }
        out.samples.push_back(s);
    }
    return out;
}

}  // namespace piv
