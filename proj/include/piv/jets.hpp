#pragma once

#include <span>
#include <vector>

#include "piv/numerics.hpp"

namespace piv {

/// Truncated Taylor expansion of a function at a fixed center.
///
/// coeffs()[n] holds f^(n)(center) / n!. All binary operations require both
/// operands to share center and order; mismatches throw std::invalid_argument.
/// Division (and anything built on it) throws SingularityError when the
/// divisor's constant term is zero, which is how poles on the real axis
/// surface to callers.
class Jet {
public:
    Jet(Real center, std::vector<Complex> coeffs);

    static Jet constant(Real center, Complex value, int order);
    /// The identity function x expanded at center.
    static Jet variable(Real center, int order);

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    Real center() const noexcept { return center_; }
    std::span<const Complex> coeffs() const noexcept { return coeffs_; }
    Complex operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }

    Complex value() const noexcept { return coeffs_.front(); }
    /// n-th derivative at the center, n!·c_n.
    Complex derivative_value(int n) const;

    Jet truncated(int order) const;
    /// Jet of f', one order lower.
    Jet derivative() const;

    friend Jet operator+(const Jet& a, const Jet& b);
    friend Jet operator-(const Jet& a, const Jet& b);
    friend Jet operator*(const Jet& a, const Jet& b);
    friend Jet operator/(const Jet& a, const Jet& b);
    friend Jet operator*(Complex s, const Jet& a);
    friend Jet operator-(const Jet& a);

private:
    Real center_;
    std::vector<Complex> coeffs_;
};

/// Jet of f'/f, one order lower than f.
Jet log_derivative(const Jet& f);

/// Jet of a solution of u'' = (x^2 - 2 epsilon) u with u(x0) = u0, u'(x0) = u1.
/// All coefficients beyond the first two follow from the ODE recurrence.
Jet seed_derivative_recurrence(Complex u0, Complex u1, Real epsilon, Real x0, int order);

}  // namespace piv
