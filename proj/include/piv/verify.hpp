#pragma once

#include <functional>
#include <optional>

#include "piv/jets.hpp"
#include "piv/types.hpp"

namespace piv {

inline constexpr Real kPivTolerance = 1e-8;
inline constexpr Real kSeedTolerance = 1e-11;

/// residual = lhs - rhs; pass iff |residual| <= tol * max(scale, 1).
struct ResidualReport {
    Real x = 0.0;
    Complex lhs{};
    Complex rhs{};
    Complex residual{};
    Real scale = 0.0;  ///< largest magnitude among the terms entering rhs
    bool pass = false;

    Real relative() const noexcept { return std::abs(residual) / std::max(scale, 1.0); }
};

/// P_IV residual g'' - [g'^2/(2g) + 3/2 g^3 + 4x g^2 + 2(x^2 - a) g + b/g] at
/// the jet center. Empty when g vanishes there (the residual is undefined).
std::optional<ResidualReport> piv_residual(const Jet& g, const PivParams& params, Real tol = kPivTolerance);

struct SchrodingerReport {
    ResidualReport schrodinger;          ///< -u''/2 + x^2 u/2 - eps u
    std::optional<ResidualReport> riccati;  ///< alpha' + alpha^2 - (x^2 - 2 eps), alpha = u'/u
};

SchrodingerReport schrodinger_residual(const Jet& u, Real epsilon, Real tol = kSeedTolerance);

/// -psi''/2 + V psi - E psi for a jet psi and potential jet V at a common center.
ResidualReport eigen_residual(const Jet& psi, const Jet& potential, Complex energy, Real tol);

struct FdDerivatives {
    Complex d1;
    Complex d2;
};

/// Central five-point first and second derivatives. Throws std::invalid_argument
/// for h <= 0; empty when the stencil touches a singularity.
std::optional<FdDerivatives> fd_cross_check(const std::function<Complex(Real)>& f, Real x, Real h);

}  // namespace piv
