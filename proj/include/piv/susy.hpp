#pragma once

#include <span>
#include <utility>
#include <vector>

#include "piv/jets.hpp"
#include "piv/types.hpp"

namespace piv {

/// k-th order SUSY partner of the oscillator built from the seed chain of a spec.
struct SusySystem {
    explicit SusySystem(SeedSpec seed);

    SeedSpec spec;
    Real e1;  ///< epsilon_k = epsilon_1 - (k - 1)
    Real e2;  ///< 1/2
    Real e3;  ///< epsilon_1 + 1
};

/// Jet of det[f_i^{(r)}], r = 0..m-1. Each input needs order >= m - 1 + out_order.
/// An empty sequence yields the constant 1.
Jet wronskian_jet(std::span<const Jet> funcs, int out_order);

/// Extremal state psi = numerator / denominator, both as jets of the given order
/// centered at x. The denominator is always W(u_1..u_k).
struct ExtremalRatio {
    Jet numerator;
    Jet denominator;
};

ExtremalRatio extremal_state_ratio(const SusySystem& system, Family family, Real x, int order);

/// Jet of (ln psi)' for the family's extremal state. Throws SingularityError
/// where either Wronskian vanishes.
Jet extremal_log_derivative_jet(const SusySystem& system, Family family, Real x, int order);

/// ((ln psi)', (ln psi)'') at x.
std::pair<Complex, Complex> extremal_state_logderiv(const SusySystem& system, Family family, Real x);

/// B_k^+ psi up to a constant, via W(u_1..u_k, psi) / W(u_1..u_k). The result
/// is k orders lower than psi.
Jet bkp_action(const SusySystem& system, const Jet& psi);

/// V_k = x^2/2 - (ln W(u_1..u_k))''.
Jet partner_potential_jet(const SusySystem& system, Real x, int order);
Complex partner_potential(const SusySystem& system, Real x);

/// Oscillator eigenfunction (a^+)^n e^{-x^2/2}, unnormalized.
Jet oscillator_eigenfunction_jet(int n, Real x, int order);

/// B_k^+ psi_n / sqrt(prod_j (E_n - epsilon_j)), up to the oscillator normalization.
/// Throws DegenerateError when E_n = n + 1/2 coincides with some epsilon_j.
Jet transformed_eigenfunction_jet(const SusySystem& system, int n, Real x, int order);
Complex transformed_eigenfunction(const SusySystem& system, int n, Real x);

/// W(u_1..u_{j-1}, u_{j+1}..u_k) / W(u_1..u_k), eigenvalue epsilon_j of H_k.
Jet missing_state_jet(const SusySystem& system, int j, Real x, int order);
Complex missing_state_eigenfunction(const SusySystem& system, int j, Real x);

}  // namespace piv
