#include "piv/verify.hpp"

#include <algorithm>
#include <initializer_list>
#include <stdexcept>

#include "piv/errors.hpp"

namespace piv {

namespace {

Real max_magnitude(std::initializer_list<Complex> terms) {
    Real m = 0.0;
    for (const auto& t : terms) m = std::max(m, std::abs(t));
    return m;
}

ResidualReport make_report(Real x, Complex lhs, Complex rhs, Real scale, Real tol) {
    ResidualReport r;
    r.x = x;
    r.lhs = lhs;
    r.rhs = rhs;
    r.residual = lhs - rhs;
    r.scale = scale;
    r.pass = std::abs(r.residual) <= tol * std::max(scale, 1.0);
    return r;
}

}  // namespace

std::optional<ResidualReport> piv_residual(const Jet& g, const PivParams& params, Real tol) {
    if (g.order() < 2) throw std::invalid_argument("piv_residual needs a jet of order >= 2");
    const Real x = g.center();
    const Complex g0 = g.value();
    const Complex g1 = g.derivative_value(1);
    const Complex g2 = g.derivative_value(2);
    if (std::abs(g0) <= 1e-12 * std::max(1.0, std::abs(g1))) return std::nullopt;

    const Complex t_slope = g1 * g1 / (2.0 * g0);
    const Complex t_cubic = 1.5 * g0 * g0 * g0;
    const Complex t_square = 4.0 * x * g0 * g0;
    const Complex t_linear = 2.0 * (x * x - params.a) * g0;
    const Complex t_pole = params.b / g0;
    CompensatedSum<Complex> rhs;
    for (const auto& t : {t_slope, t_cubic, t_square, t_linear, t_pole}) rhs.add(t);
    return make_report(x, g2, rhs.value(), max_magnitude({t_slope, t_cubic, t_square, t_linear, t_pole}), tol);
}

SchrodingerReport schrodinger_residual(const Jet& u, Real epsilon, Real tol) {
    if (u.order() < 2) throw std::invalid_argument("schrodinger_residual needs a jet of order >= 2");
    const Real x = u.center();
    const Complex u0 = u.value();
    const Complex u2 = u.derivative_value(2);
    const Complex kinetic = -0.5 * u2;
    const Complex confining = 0.5 * x * x * u0;
    const Complex level = epsilon * u0;
    SchrodingerReport out;
    out.schrodinger = make_report(x, kinetic + confining, level, max_magnitude({kinetic, confining, level}), tol);

    if (u0 != Complex(0.0)) {
        const Jet alpha = log_derivative(u);
        const Complex a0 = alpha.value();
        const Complex a1 = alpha.derivative_value(1);
        const Complex lhs_slope = a1;
        const Complex lhs_square = a0 * a0;
        const Complex drive = x * x - 2.0 * epsilon;
        out.riccati = make_report(x, lhs_slope + lhs_square, drive, max_magnitude({lhs_slope, lhs_square, drive}), tol);
    }
    return out;
}

ResidualReport eigen_residual(const Jet& psi, const Jet& potential, Complex energy, Real tol) {
    if (psi.order() < 2) throw std::invalid_argument("eigen_residual needs a jet of order >= 2");
    const Complex p0 = psi.value();
    const Complex kinetic = -0.5 * psi.derivative_value(2);
    const Complex pot = potential.value() * p0;
    const Complex level = energy * p0;
    // eigenfunctions carry arbitrary constants, so the scale is |psi| itself
    return make_report(psi.center(), kinetic + pot, level, std::abs(p0), tol);
}

std::optional<FdDerivatives> fd_cross_check(const std::function<Complex(Real)>& f, Real x, Real h) {
    if (!(h > 0.0)) throw std::invalid_argument("fd_cross_check: step must be positive");
    Complex fm2, fm1, f0, fp1, fp2;
    try {
        fm2 = f(x - 2.0 * h);
        fm1 = f(x - h);
        f0 = f(x);
        fp1 = f(x + h);
        fp2 = f(x + 2.0 * h);
    } catch (const SingularityError&) {
        return std::nullopt;
    }
    FdDerivatives d;
    d.d1 = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h);
    d.d2 = (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * h * h);
    return d;
}

}  // namespace piv
