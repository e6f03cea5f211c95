#include "piv/jets.hpp"

#include <stdexcept>

#include "piv/errors.hpp"

namespace piv {

namespace {

void require_compatible(const Jet& a, const Jet& b) {
    if (a.order() != b.order() || a.center() != b.center())
        throw std::invalid_argument("jet operands differ in order or center");
}

}  // namespace

Jet::Jet(Real center, std::vector<Complex> coeffs) : center_(center), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("jet needs at least one coefficient");
}

Jet Jet::constant(Real center, Complex value, int order) {
    std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
    c[0] = value;
    return Jet(center, std::move(c));
}

Jet Jet::variable(Real center, int order) {
    std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
    c[0] = center;
    if (order >= 1) c[1] = 1.0;
    return Jet(center, std::move(c));
}

Complex Jet::derivative_value(int n) const {
    double fact = 1.0;
    for (int i = 2; i <= n; ++i) fact *= i;
    return fact * (*this)[n];
}

Jet Jet::truncated(int order) const {
    if (order > this->order()) throw std::invalid_argument("cannot raise jet order by truncation");
    return Jet(center_, std::vector<Complex>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

Jet Jet::derivative() const {
    if (order() < 1) throw std::invalid_argument("derivative of an order-0 jet");
    std::vector<Complex> d(coeffs_.size() - 1);
    for (std::size_t n = 0; n < d.size(); ++n) d[n] = static_cast<double>(n + 1) * coeffs_[n + 1];
    return Jet(center_, std::move(d));
}

Jet operator+(const Jet& a, const Jet& b) {
    require_compatible(a, b);
    std::vector<Complex> c(a.coeffs_.size());
    for (std::size_t n = 0; n < c.size(); ++n) c[n] = a.coeffs_[n] + b.coeffs_[n];
    return Jet(a.center_, std::move(c));
}

Jet operator-(const Jet& a, const Jet& b) {
    require_compatible(a, b);
    std::vector<Complex> c(a.coeffs_.size());
    for (std::size_t n = 0; n < c.size(); ++n) c[n] = a.coeffs_[n] - b.coeffs_[n];
    return Jet(a.center_, std::move(c));
}

Jet operator-(const Jet& a) { return Complex(-1.0) * a; }

Jet operator*(const Jet& a, const Jet& b) {
    require_compatible(a, b);
    const std::size_t len = a.coeffs_.size();
    std::vector<Complex> c(len);
    for (std::size_t n = 0; n < len; ++n) {
        CompensatedSum<Complex> s;
        for (std::size_t m = 0; m <= n; ++m) s.add(a.coeffs_[m] * b.coeffs_[n - m]);
        c[n] = s.value();
    }
    return Jet(a.center_, std::move(c));
}

Jet operator/(const Jet& a, const Jet& b) {
    require_compatible(a, b);
    const Complex b0 = b.coeffs_[0];
    if (b0 == Complex(0.0) || !std::isfinite(std::abs(b0)))
        throw SingularityError("jet division by vanishing constant term", a.center_);
    const std::size_t len = a.coeffs_.size();
    std::vector<Complex> q(len);
    for (std::size_t n = 0; n < len; ++n) {
        CompensatedSum<Complex> s;
        s.add(a.coeffs_[n]);
        for (std::size_t m = 1; m <= n; ++m) s.add(-b.coeffs_[m] * q[n - m]);
        q[n] = s.value() / b0;
    }
    return Jet(a.center_, std::move(q));
}

Jet operator*(Complex s, const Jet& a) {
    std::vector<Complex> c(a.coeffs_.size());
    for (std::size_t n = 0; n < c.size(); ++n) c[n] = s * a.coeffs_[n];
    return Jet(a.center_, std::move(c));
}

Jet log_derivative(const Jet& f) {
    if (f.order() < 1) throw std::invalid_argument("log_derivative needs order >= 1");
    if (f.value() == Complex(0.0)) throw SingularityError("log-derivative of a vanishing function", f.center());
    return f.derivative() / f.truncated(f.order() - 1);
}

Jet seed_derivative_recurrence(Complex u0, Complex u1, Real epsilon, Real x0, int order) {
    if (order < 1) throw std::invalid_argument("seed jet order must be >= 1");
    std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
    c[0] = u0;
    c[1] = u1;
    // Taylor coefficients of x^2 - 2 epsilon at x0
    const double p0 = x0 * x0 - 2.0 * epsilon;
    const double p1 = 2.0 * x0;
    for (int n = 0; n + 2 <= order; ++n) {
        Complex rhs = p0 * c[n];
        if (n >= 1) rhs += p1 * c[n - 1];
        if (n >= 2) rhs += c[n - 2];
        c[n + 2] = rhs / static_cast<double>((n + 2) * (n + 1));
    }
    return Jet(x0, std::move(c));
}

}  // namespace piv
