#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "piv/jets.hpp"
#include "piv/seeds.hpp"
#include "piv/types.hpp"
#include "piv/verify.hpp"

namespace piv {

enum class HierarchyTag { ConfluentHypergeometric, Erf, Erfi, Rational, BesselI };

std::string_view to_string(HierarchyTag tag) noexcept;

/// Extremal energies in the order (E_1, E_2, E_3) that enters the (a, b) map,
/// i.e. already cyclically rotated so the family's own state comes first.
struct ExtremalEnergies {
    Real first;
    Real second;
    Real third;
};

ExtremalEnergies extremal_energies(Family family, Real epsilon1, int k);

/// a = E_2 + E_3 - 2 E_1 - 1, b = -2 (E_2 - E_3)^2.
PivParams params_from_energies(const ExtremalEnergies& e) noexcept;

PivParams piv_params(Family family, Real epsilon1, int k);

/// Jet of g = -x - (ln psi)' for the spec's extremal state.
Jet g_jet(const SeedSpec& spec, Real x, int order);
Complex g_solution(const SeedSpec& spec, Real x);

/// Hierarchy of the solution family at (epsilon1, Lambda); integer and
/// half-integer detection uses a 1e-12 tolerance on epsilon1.
HierarchyTag classify_hierarchy(Real epsilon1, Complex lambda);

/// Closed-form solutions with known special-function content.
enum class CatalogForm {
    HypergeometricReal,     // k=1, any eps < 1/2, real nu
    ErfRealK1,              // k=1, eps = -5/2
    ErfRealK2,              // k=2, eps = -1/2
    RationalK1,             // k=1, eps = -5/2, nu = 0
    RationalK2,             // k=2
    RationalK3,             // k=3
    BesselReal,             // k=1, eps = 0
    HypergeometricComplex,  // k=1, any eps, complex Lambda
    ErfComplex,             // k=1, eps = -5/2
    ErfiComplex,            // k=1, eps = 5/2
    BesselComplex,          // k=1, eps = 0
};

struct ClosedFormCase {
    CatalogForm form = CatalogForm::RationalK1;
    Real epsilon1 = 0.0;  ///< only read by the two hypergeometric forms
    Real nu = 0.0;        ///< real-case forms
    Complex lambda{0.0, 1.0};  ///< complex-case forms
};

/// Evaluates a catalog formula. Throws SingularityError at its poles.
Complex closed_form_g(const ClosedFormCase& c, Real x);

/// The engine spec (family 1) that the catalog case should reproduce.
SeedSpec matching_spec(const ClosedFormCase& c);

struct LadderFunctions {
    Complex f;
    Complex h;
};

/// f = x + g, h = -x^2 + g'/2 - g^2/2 - 2xg + a.
LadderFunctions ladder_functions_fh(Complex g, Complex g_prime, Real x, Real a) noexcept;

/// V = x^2/2 - g'/2 + g^2/2 + xg + E_1 - 1/2.
Complex potential_from_g(Complex g, Complex g_prime, Real x, Real e1) noexcept;

struct SolutionSample {
    Real x = 0.0;
    bool regular = false;
    std::optional<Complex> g;         ///< unset when irregular
    std::optional<Complex> residual;  ///< unset when irregular or g(x) = 0
    Real residual_scale = 0.0;
    bool residual_pass = false;
};

struct PivSolution {
    SeedSpec spec;
    PivParams params;
    HierarchyTag tag = HierarchyTag::ConfluentHypergeometric;
    Real tolerance = kPivTolerance;
    Regularity regularity;
    std::vector<SolutionSample> samples;

    /// Every regular sample with a defined residual passes.
    bool residuals_pass() const noexcept;
    std::size_t irregular_count() const noexcept;
};

/// Evenly spaced grid of n >= 2 points on [x_lo, x_hi], endpoints included.
std::vector<Real> uniform_grid(Real x_lo, Real x_hi, int n);

/// Samples g on a grid, flags poles (within 1e-8 of a bracketed zero, or exact
/// zeros of a Wronskian) as irregular samples and attaches the
/// P_IV residual computed with (a, b) = piv_params.
PivSolution sample_solution(const SeedSpec& spec, Real x_lo, Real x_hi, int n, Real tol = kPivTolerance);

}  // namespace piv
