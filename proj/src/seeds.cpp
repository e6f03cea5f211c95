#include "piv/seeds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "piv/errors.hpp"
#include "piv/susy.hpp"

namespace piv {

namespace {

bool gamma_pole(Real arg) { return arg <= 0.0 && arg == std::floor(arg); }

}  // namespace

Complex lambda_from_nu(Real epsilon, Real nu) {
    const Real a_even = (1.0 - 2.0 * epsilon) / 4.0;
    const Real a_odd = (3.0 - 2.0 * epsilon) / 4.0;
    if (gamma_pole(a_even))
        throw DomainError("lambda_from_nu: Gamma((1-2e)/4) has a pole; the even seed series is a polynomial at this energy");
    if (nu == 0.0) return 0.0;
    if (gamma_pole(a_odd))
        throw DomainError("lambda_from_nu: Gamma((3-2e)/4) has a pole; Lambda is unbounded for nu != 0");
    return 2.0 * nu * numerics::gamma(a_odd) / numerics::gamma(a_even);
}

Real nu_from_lambda(Real epsilon, Real lambda) {
    const Real a_even = (1.0 - 2.0 * epsilon) / 4.0;
    const Real a_odd = (3.0 - 2.0 * epsilon) / 4.0;
    if (gamma_pole(a_even) || gamma_pole(a_odd)) throw DomainError("nu_from_lambda: Gamma pole at this energy");
    return lambda * numerics::gamma(a_even) / (2.0 * numerics::gamma(a_odd));
}

SeedValue seed_eval(Real epsilon, Complex lambda, Real x) {
    using numerics::kummer_1f1;
    const Real z = x * x;
    const Real a_even = (1.0 - 2.0 * epsilon) / 4.0;
    const Real a_odd = (3.0 - 2.0 * epsilon) / 4.0;
    const Real gauss = std::exp(-0.5 * z);

    const Real even = kummer_1f1(a_even, 0.5, z);
    const Real even_prime = 4.0 * x * a_even * kummer_1f1(a_even + 1.0, 1.5, z);
    const Real m_odd = kummer_1f1(a_odd, 1.5, z);
    const Real odd = x * m_odd;
    const Real odd_prime = m_odd + (4.0 / 3.0) * a_odd * z * kummer_1f1(a_odd + 1.0, 2.5, z);

    const Complex bracket = Complex(even) + lambda * odd;
    const Complex bracket_prime = Complex(even_prime) + lambda * odd_prime;
    return {gauss * bracket, gauss * (bracket_prime - x * bracket)};
}

Jet seed_jet(Real epsilon, Complex lambda, Real x, int order) {
    const SeedValue s = seed_eval(epsilon, lambda, x);
    return seed_derivative_recurrence(s.u, s.u_prime, epsilon, x, order);
}

Jet ground_state_jet(Real x, int order) {
    const Real g = std::exp(-0.5 * x * x);
    return seed_derivative_recurrence(g, -x * g, 0.5, x, order);
}

Jet ladder_apply(Ladder op, const Jet& f) {
    if (f.order() < 1) throw std::invalid_argument("ladder_apply needs jet order >= 1");
    const int n = f.order() - 1;
    const Jet lowered = f.truncated(n);
    const Jet xf = Jet::variable(f.center(), n) * lowered;
    const Jet d = f.derivative();
    const Complex inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    return op == Ladder::Lowering ? inv_sqrt2 * (d + xf) : inv_sqrt2 * (xf - d);
}

std::vector<Jet> seed_chain_jets(const SeedSpec& spec, Real x, int order) {
    spec.validate();
    if (order < 1) throw std::invalid_argument("seed chain order must be >= 1");
    std::vector<Jet> chain;
    chain.reserve(static_cast<std::size_t>(spec.k));
    Jet current = seed_jet(spec.epsilon1, spec.lambda, x, order + spec.k - 1);
    for (int j = 1; j <= spec.k; ++j) {
        chain.push_back(current.truncated(order));
        if (j < spec.k) current = ladder_apply(Ladder::Lowering, current);
    }
    return chain;
}

namespace {

constexpr Real kZeroFloor = 1e-12;
constexpr Real kBisectTol = 1e-10;
constexpr int kMedianHalfWindow = 5;

struct Probe {
    Complex value;
    Complex slope;
};

Probe probe(const SusySystem& system, Family family, Real x, bool numerator) {
    const ExtremalRatio r = extremal_state_ratio(system, family, x, 1);
    const Jet& w = numerator ? r.numerator : r.denominator;
    return {w.value(), w[1]};
}

Real local_median(const std::vector<Real>& mags, std::size_t i) {
    const std::size_t lo = i >= kMedianHalfWindow ? i - kMedianHalfWindow : 0;
    const std::size_t hi = std::min(mags.size(), i + kMedianHalfWindow + 1);
    std::vector<Real> window(mags.begin() + static_cast<std::ptrdiff_t>(lo), mags.begin() + static_cast<std::ptrdiff_t>(hi));
    std::nth_element(window.begin(), window.begin() + static_cast<std::ptrdiff_t>(window.size() / 2), window.end());
    return window[window.size() / 2];
}

// Bisection on one component (real or imaginary) of the probed function.
Real bisect(const SusySystem& system, Family family, bool numerator, bool imag_part, Real lo, Real hi) {
    auto part = [&](Real x) {
        const Complex v = probe(system, family, x, numerator).value;
        return imag_part ? v.imag() : v.real();
    };
    Real flo = part(lo);
    while (hi - lo > kBisectTol) {
        const Real mid = 0.5 * (lo + hi);
        const Real fm = part(mid);
        if (fm == 0.0) return mid;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

void scan(const SusySystem& system, Family family, bool numerator, Real x_lo, Real x_hi, int grid_n,
          std::vector<Real>& zeros) {
    std::vector<Real> xs(static_cast<std::size_t>(grid_n));
    std::vector<Complex> vals(xs.size());
    std::vector<Real> mags(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        xs[i] = x_lo + (x_hi - x_lo) * static_cast<Real>(i) / static_cast<Real>(grid_n - 1);
        vals[i] = probe(system, family, xs[i], numerator).value;
        mags[i] = std::abs(vals[i]);
    }
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const Real scale = local_median(mags, i);
        if (mags[i] <= kZeroFloor * scale) zeros.push_back(xs[i]);
        if (i + 1 == xs.size()) continue;
        for (bool imag_part : {false, true}) {
            const Real a = imag_part ? vals[i].imag() : vals[i].real();
            const Real b = imag_part ? vals[i + 1].imag() : vals[i + 1].real();
            if (!(a * b < 0.0)) continue;
            const Real root = bisect(system, family, numerator, imag_part, xs[i], xs[i + 1]);
            const Probe p = probe(system, family, root, numerator);
            // a root located to kBisectTol leaves |f| ~ |f'| * kBisectTol
            if (std::abs(p.value) <= kZeroFloor * scale + 2.0 * kBisectTol * std::abs(p.slope)) zeros.push_back(root);
        }
    }
}

}  // namespace

Regularity regularity_check(const SeedSpec& spec, Real x_lo, Real x_hi, int grid_n) {
    spec.validate();
    if (!(x_lo < x_hi)) throw std::invalid_argument("regularity_check: empty interval");
    if (grid_n < 100) throw std::invalid_argument("regularity_check: grid_n must be >= 100");

    Regularity result;
    if (spec.real_seed()) {
        bool rule = spec.epsilon1 < 0.5;
        if (rule) rule = std::abs(nu_from_lambda(spec.epsilon1, spec.lambda.real())) < 1.0;
        result.analytic_rule = rule;
    }

    const SusySystem system(spec);
    std::vector<Real> zeros;
    scan(system, spec.family, false, x_lo, x_hi, grid_n, zeros);
    if (!(spec.family == Family::One && spec.k == 1)) scan(system, spec.family, true, x_lo, x_hi, grid_n, zeros);

    std::sort(zeros.begin(), zeros.end());
    for (Real z : zeros)
        if (result.singular_at.empty() || z - result.singular_at.back() > 1e-8) result.singular_at.push_back(z);
    return result;
}

}  // namespace piv
