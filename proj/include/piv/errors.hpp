#pragma once

#include <stdexcept>
#include <string>

namespace piv {

/// Argument outside the mathematical domain of a function (poles, divergent points).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Result would leave the representable range.
class RangeError : public std::range_error {
public:
    using std::range_error::range_error;
};

/// A series failed to converge within its term budget.
class AccuracyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Division by a vanishing quantity at a known abscissa: a pole of g, a node
/// of a Wronskian or of an extremal state.
class SingularityError : public std::runtime_error {
public:
    SingularityError(const std::string& what, double x)
        : std::runtime_error(what + " at x=" + std::to_string(x)), x_(x) {}
    double x() const noexcept { return x_; }

private:
    double x_;
};

/// Eigenvalue coincides with a factorization energy.
class DegenerateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace piv
