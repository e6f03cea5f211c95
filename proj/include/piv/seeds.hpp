#pragma once

#include <optional>
#include <vector>

#include "piv/jets.hpp"
#include "piv/types.hpp"

namespace piv {

/// Real-case mixing constant Lambda = 2 nu Gamma((3-2e)/4) / Gamma((1-2e)/4).
/// Throws DomainError where either Gamma argument is a pole (nu == 0 excepted
/// for the numerator pole).
Complex lambda_from_nu(Real epsilon, Real nu);

/// Inverse of lambda_from_nu for real Lambda. Throws DomainError at the same poles.
Real nu_from_lambda(Real epsilon, Real lambda);

struct SeedValue {
    Complex u;
    Complex u_prime;
};

/// u(x) = e^{-x^2/2} [1F1((1-2e)/4, 1/2; x^2) + x Lambda 1F1((3-2e)/4, 3/2; x^2)]
/// and its derivative (from the 1F1 derivative identity, not differencing).
SeedValue seed_eval(Real epsilon, Complex lambda, Real x);

/// Seed jet at x: value and slope from seed_eval, the rest from the ODE.
Jet seed_jet(Real epsilon, Complex lambda, Real x, int order);

/// Ground state e^{-x^2/2} as a jet.
Jet ground_state_jet(Real x, int order);

enum class Ladder { Raising, Lowering };

/// a^- = (d/dx + x)/sqrt2, a^+ = (-d/dx + x)/sqrt2. Result is one order lower.
Jet ladder_apply(Ladder op, const Jet& f);

/// Jets of u_1, ..., u_k with u_j = (a^-)^{j-1} u_1, all of the requested order.
std::vector<Jet> seed_chain_jets(const SeedSpec& spec, Real x, int order);

struct Regularity {
    /// Real abscissae where a relevant Wronskian vanishes, ascending.
    std::vector<Real> singular_at;
    /// For real Lambda: whether epsilon_1 < 1/2 and |nu_1| < 1 hold.
    std::optional<bool> analytic_rule;

    bool regular() const noexcept { return singular_at.empty(); }
};

/// Scans the Wronskians entering g (denominator W(u_1..u_k) and the family's
/// numerator) on [x_lo, x_hi] for real zeros, bisecting each bracket to 1e-10.
Regularity regularity_check(const SeedSpec& spec, Real x_lo, Real x_hi, int grid_n = 400);

}  // namespace piv
