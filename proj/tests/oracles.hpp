#pragma once

// Independent reference implementations used only by the tests.

#include <cmath>
#include <complex>
#include <random>

namespace oracle {

using ld = long double;

// Plain Kummer series in long double with a fixed, generous term count.
inline ld kummer(ld a, ld b, ld z, int terms = 400) {
    ld term = 1.0L, sum = 1.0L;
    for (int n = 0; n < terms; ++n) {
        term *= (a + n) / (b + n) * z / (n + 1);
        sum += term;
    }
    return sum;
}

// Maclaurin series erf(x) = 2/sqrt(pi) sum (-1)^n x^(2n+1) / (n! (2n+1)).
inline ld erf_series(ld x, int terms = 60) {
    ld sum = 0.0L, p = x;
    for (int n = 0; n < terms; ++n) {
        sum += p / (2 * n + 1);
        p *= -x * x / (n + 1);
    }
    return 2.0L / std::sqrt(3.14159265358979323846264338327950288L) * sum;
}

inline ld erfi_series(ld x, int terms = 60) {
    ld sum = 0.0L, p = x;
    for (int n = 0; n < terms; ++n) {
        sum += p / (2 * n + 1);
        p *= x * x / (n + 1);
    }
    return 2.0L / std::sqrt(3.14159265358979323846264338327950288L) * sum;
}

// I_nu(z) = sum (z/2)^(2m+nu) / (m! Gamma(m+nu+1)).
inline ld bessel_series(ld nu, ld z, int terms = 100) {
    ld sum = 0.0L;
    for (int m = 0; m < terms; ++m)
        sum += std::pow(z / 2, 2 * m + nu) / (std::tgamma(static_cast<ld>(m + 1)) * std::tgamma(m + nu + 1));
    return sum;
}

inline double rel(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(20240517ULL);
    return gen;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

// Rational P_IV solutions at eps = -5/2, nu = 0 (family 1), hand-derived from
// u1 = e^{x^2/2}(1 + 2x^2) and its lowered partners.
inline double rational_g(int k, double x) {
    const double x2 = x * x;
    switch (k) {
        case 1: return 4 * x / (1 + 2 * x2);
        case 2: return -4 * x / (1 + 2 * x2) + 16 * x * x2 / (3 + 4 * x2 * x2);
        default: {
            const double x4 = x2 * x2, x6 = x4 * x2;
            return -16 * x * x2 / (3 + 4 * x4) + 12 * x * (4 * x4 - 4 * x2 + 3) / (8 * x6 - 12 * x4 + 18 * x2 + 9);
        }
    }
}

}  // namespace oracle
