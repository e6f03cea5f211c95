#include "piv/numerics.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "piv/errors.hpp"

namespace piv::numerics {

namespace {

constexpr int kMaxTerms = 500;
constexpr double kSeriesTol = 1e-17;
constexpr double kErrorFunctionLimit = 8.0;

// Lanczos approximation, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// sin(pi x) with exact argument reduction.
double sin_pi(double x) {
    double r = std::fmod(x, 2.0);  // exact
    if (r > 1.0) r -= 2.0;
    if (r < -1.0) r += 2.0;
    if (r > 0.5) r = 1.0 - r;
    if (r < -0.5) r = -1.0 - r;
    return std::sin(std::numbers::pi * r);
}

double gamma_lanczos(double x) {
    // x >= 0.5
    x -= 1.0;
    double a = kLanczos[0];
    const double t = x + kLanczosG + 0.5;
    for (std::size_t i = 1; i < kLanczos.size(); ++i) a += kLanczos[i] / (x + static_cast<double>(i));
    return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

}  // namespace

bool near_integer(Real x, Real tol) { return std::abs(x - std::round(x)) <= tol; }

Real gamma(Real x) {
    if (is_nonpositive_integer(x)) throw DomainError("gamma: pole at non-positive integer");
    if (x < 0.5) return std::numbers::pi / (sin_pi(x) * gamma_lanczos(1.0 - x));
    return gamma_lanczos(x);
}

Real kummer_1f1(Real a, Real b, Real z) {
    if (is_nonpositive_integer(b)) throw DomainError("kummer_1f1: b is a non-positive integer");
    if (z < 0.0) throw DomainError("kummer_1f1: negative argument");
    CompensatedSum<double> sum;
    double term = 1.0;
    sum.add(term);
    for (int n = 0; n < kMaxTerms; ++n) {
        const double ratio = (a + n) * z / ((b + n) * (n + 1));
        term *= ratio;
        sum.add(term);
        // the tail is bounded once the ratio drops below one
        if (std::abs(term) <= kSeriesTol * std::abs(sum.value()) && std::abs(ratio) < 1.0)
            return sum.value();
    }
    throw AccuracyError("kummer_1f1: series did not converge in 500 terms");
}

Real erf(Real x) {
    const double ax = std::abs(x);
    double v;
    if (ax > kErrorFunctionLimit) {
        v = 1.0;
    } else {
        const double z = ax * ax;
        v = 2.0 * ax / std::sqrt(std::numbers::pi) * std::exp(-z) * kummer_1f1(1.0, 1.5, z);
        if (v > 1.0) v = 1.0;
    }
    return x < 0.0 ? -v : v;
}

Real erfi(Real x) {
    const double ax = std::abs(x);
    if (ax > kErrorFunctionLimit) throw RangeError("erfi: |x| > 8 is outside the supported range");
    const double v = 2.0 * ax / std::sqrt(std::numbers::pi) * kummer_1f1(0.5, 1.5, ax * ax);
    return x < 0.0 ? -v : v;
}

ErrorFunctions error_functions(Real x) { return {erf(x), erfi(x)}; }

Real bessel_i(Real nu, Real z) {
    if (z < 0.0) throw DomainError("bessel_i: negative argument");
    if (nu < 0.0 && nu == std::floor(nu)) nu = -nu;  // I_{-n} = I_n
    if (z == 0.0) {
        if (nu == 0.0) return 1.0;
        if (nu > 0.0) return 0.0;
        throw DomainError("bessel_i: divergent at z = 0 for negative order");
    }
    const double q = 0.25 * z * z;
    double term = std::pow(0.5 * z, nu) / gamma(nu + 1.0);
    CompensatedSum<double> sum;
    sum.add(term);
    for (int k = 0; k < kMaxTerms; ++k) {
        const double ratio = q / ((k + 1.0) * (k + 1.0 + nu));
        term *= ratio;
        sum.add(term);
        if (std::abs(term) <= kSeriesTol * std::abs(sum.value()) && std::abs(ratio) < 1.0)
            return sum.value();
    }
    throw AccuracyError("bessel_i: series did not converge in 500 terms");
}

}  // namespace piv::numerics
