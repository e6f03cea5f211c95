#pragma once

#include <complex>
#include <utility>

namespace piv {

using Real = double;
using Complex = std::complex<double>;

/// Neumaier-compensated accumulator, usable for Real and Complex.
template <typename T>
class CompensatedSum {
public:
    void add(const T& v) {
        if constexpr (std::is_same_v<T, Complex>) {
            re_.add(v.real());
            im_.add(v.imag());
        } else {
            T t = sum_ + v;
            if (std::abs(sum_) >= std::abs(v))
                comp_ += (sum_ - t) + v;
            else
                comp_ += (v - t) + sum_;
            sum_ = t;
        }
    }
    T value() const {
        if constexpr (std::is_same_v<T, Complex>)
            return {re_.value(), im_.value()};
        else
            return sum_ + comp_;
    }

private:
    struct Empty {};
    T sum_{};
    T comp_{};
    std::conditional_t<std::is_same_v<T, Complex>, CompensatedSum<double>, Empty> re_{};
    std::conditional_t<std::is_same_v<T, Complex>, CompensatedSum<double>, Empty> im_{};
};

namespace numerics {

/// Gamma function. Throws DomainError at 0, -1, -2, ...
Real gamma(Real x);

/// Kummer's confluent hypergeometric series 1F1(a; b; z) for z >= 0.
/// Throws DomainError when b is a non-positive integer and AccuracyError if
/// the series has not settled after 500 terms.
Real kummer_1f1(Real a, Real b, Real z);

/// erf(x). Saturates to +-1 for |x| > 8.
Real erf(Real x);

/// Imaginary error function erfi(x) = -i erf(ix). Throws RangeError for |x| > 8.
Real erfi(Real x);

struct ErrorFunctions {
    Real erf;
    Real erfi;
};

/// Both error functions at once; same domain as erfi.
ErrorFunctions error_functions(Real x);

/// Modified Bessel function of the first kind I_nu(z), ascending series.
/// Throws DomainError for z < 0, and for z == 0 with nu < 0 non-integer.
Real bessel_i(Real nu, Real z);

/// True when x lies within tol of an integer.
bool near_integer(Real x, Real tol = 1e-12);

}  // namespace numerics
}  // namespace piv
