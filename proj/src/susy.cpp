#include "piv/susy.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "piv/errors.hpp"
#include "piv/seeds.hpp"

namespace piv {

namespace {

// Pivots below this fraction of their column's largest entry mean W itself
// (nearly) vanishes at the center; elimination would then divide by noise.
constexpr Real kPivotFloor = 1e-13;
// |W| below this fraction of the Hadamard bound is treated as a zero of W.
constexpr Real kVanishingFloor = 1e-14;

using Matrix = std::vector<std::vector<Jet>>;

Matrix derivative_matrix(std::span<const Jet> funcs, int out_order) {
    const std::size_t m = funcs.size();
    Matrix rows;
    rows.reserve(m);
    std::vector<Jet> current(funcs.begin(), funcs.end());
    for (std::size_t r = 0; r < m; ++r) {
        std::vector<Jet> row;
        row.reserve(m);
        for (auto& f : current) row.push_back(f.truncated(out_order));
        rows.push_back(std::move(row));
        if (r + 1 < m)
            for (auto& f : current) f = f.derivative();
    }
    return rows;
}

// Division-free cofactor expansion over column subsets.
Jet subset_determinant(const Matrix& a, Real center, int order) {
    const std::size_t m = a.size();
    std::vector<Jet> minors(std::size_t{1} << m, Jet::constant(center, 0.0, order));
    minors[0] = Jet::constant(center, 1.0, order);
    for (std::size_t mask = 1; mask < minors.size(); ++mask) {
        const int row = std::popcount(mask) - 1;
        Jet acc = Jet::constant(center, 0.0, order);
        int position = 0;
        for (std::size_t col = 0; col < m; ++col) {
            if (!(mask & (std::size_t{1} << col))) continue;
            const Jet term = a[static_cast<std::size_t>(row)][col] * minors[mask & ~(std::size_t{1} << col)];
            acc = ((position + row) % 2 == 0) ? acc + term : acc - term;
            ++position;
        }
        minors[mask] = acc;
    }
    return minors.back();
}

struct ScaledDeterminant {
    Jet det;
    Real hadamard;
};

ScaledDeterminant determinant(Matrix a, Real center, int order) {
    const std::size_t m = a.size();
    Real hadamard = 1.0;
    for (std::size_t c = 0; c < m; ++c) {
        Real col = 0.0;
        for (std::size_t r = 0; r < m; ++r) col += std::norm(a[r][c].value());
        hadamard *= std::sqrt(col);
    }
    const Matrix original = a;
    Jet det = Jet::constant(center, 1.0, order);
    for (std::size_t c = 0; c < m; ++c) {
        std::size_t pivot = c;
        Real best = std::abs(a[c][c].value());
        Real column_max = best;
        for (std::size_t r = c + 1; r < m; ++r) {
            const Real v = std::abs(a[r][c].value());
            column_max = std::max(column_max, v);
            if (v > best) {
                best = v;
                pivot = r;
            }
        }
        for (std::size_t r = 0; r < c; ++r) column_max = std::max(column_max, std::abs(original[r][c].value()));
        if (best <= kPivotFloor * column_max || best == 0.0) return {subset_determinant(original, center, order), hadamard};
        if (pivot != c) {
            std::swap(a[pivot], a[c]);
            det = -det;
        }
        det = det * a[c][c];
        for (std::size_t r = c + 1; r < m; ++r) {
            const Jet factor = a[r][c] / a[c][c];
            for (std::size_t j = c + 1; j < m; ++j) a[r][j] = a[r][j] - factor * a[c][j];
        }
    }
    return {det, hadamard};
}

ScaledDeterminant scaled_wronskian(std::span<const Jet> funcs, Real center, int out_order) {
    if (funcs.empty()) return {Jet::constant(center, 1.0, out_order), 1.0};
    const int m = static_cast<int>(funcs.size());
    for (const auto& f : funcs) {
        if (f.order() < m - 1 + out_order) throw std::invalid_argument("wronskian_jet: input jet order too low");
        if (f.center() != center) throw std::invalid_argument("wronskian_jet: jets differ in center");
    }
    return determinant(derivative_matrix(funcs, out_order), center, out_order);
}

void require_nonvanishing(const ScaledDeterminant& w, Real x, const char* what) {
    const Real mag = std::abs(w.det.value());
    if (mag == 0.0 || mag <= kVanishingFloor * w.hadamard || !std::isfinite(mag)) throw SingularityError(what, x);
}

Jet log_derivative_checked(const ScaledDeterminant& w, Real x, const char* what) {
    require_nonvanishing(w, x, what);
    return log_derivative(w.det);
}

// Chain jets plus the orders needed for a Wronskian with m functions.
std::vector<Jet> chain_for(const SusySystem& s, Real x, int m, int out_order) {
    return seed_chain_jets(s.spec, x, std::max(1, m - 1 + out_order));
}

struct ExtremalDeterminants {
    ScaledDeterminant numerator;
    ScaledDeterminant denominator;
};

ExtremalDeterminants extremal_determinants(const SusySystem& s, Family family, Real x, int order) {
    const int k = s.spec.k;
    std::vector<Jet> chain = chain_for(s, x, k + 1, order);
    ScaledDeterminant den = scaled_wronskian(chain, x, order);
    switch (family) {
        case Family::One:
            return {scaled_wronskian(std::span<const Jet>(chain).first(static_cast<std::size_t>(k - 1)), x, order),
                    std::move(den)};
        case Family::Two:
            chain.push_back(ground_state_jet(x, k + order));
            break;
        case Family::Three: {
            const Jet u1 = seed_jet(s.spec.epsilon1, s.spec.lambda, x, k + order + 1);
            chain.push_back(ladder_apply(Ladder::Raising, u1));
            break;
        }
    }
    return {scaled_wronskian(chain, x, order), std::move(den)};
}

}  // namespace

SusySystem::SusySystem(SeedSpec seed) : spec(seed), e1(0), e2(0.5), e3(0) {
    spec.validate();
    e1 = spec.factorization_energy(spec.k);
    e3 = spec.epsilon1 + 1.0;
}

Jet wronskian_jet(std::span<const Jet> funcs, int out_order) {
    const Real center = funcs.empty() ? 0.0 : funcs.front().center();
    return scaled_wronskian(funcs, center, out_order).det;
}

ExtremalRatio extremal_state_ratio(const SusySystem& system, Family family, Real x, int order) {
    ExtremalDeterminants d = extremal_determinants(system, family, x, order);
    return {std::move(d.numerator.det), std::move(d.denominator.det)};
}

Jet extremal_log_derivative_jet(const SusySystem& system, Family family, Real x, int order) {
    const ExtremalDeterminants d = extremal_determinants(system, family, x, order + 1);
    return log_derivative_checked(d.numerator, x, "extremal state vanishes") -
           log_derivative_checked(d.denominator, x, "Wronskian W(u_1..u_k) vanishes");
}

std::pair<Complex, Complex> extremal_state_logderiv(const SusySystem& system, Family family, Real x) {
    const Jet l = extremal_log_derivative_jet(system, family, x, 1);
    return {l.value(), l[1]};
}

Jet bkp_action(const SusySystem& system, const Jet& psi) {
    const int k = system.spec.k;
    const int out = psi.order() - k;
    if (out < 0) throw std::invalid_argument("bkp_action: psi jet order below k");
    std::vector<Jet> chain = seed_chain_jets(system.spec, psi.center(), std::max(1, k + out));
    ScaledDeterminant den = scaled_wronskian(chain, psi.center(), out);
    require_nonvanishing(den, psi.center(), "Wronskian W(u_1..u_k) vanishes");
    chain.push_back(psi);
    return scaled_wronskian(chain, psi.center(), out).det / den.det;
}

Jet partner_potential_jet(const SusySystem& system, Real x, int order) {
    std::vector<Jet> chain = chain_for(system, x, system.spec.k, order + 2);
    const ScaledDeterminant w = scaled_wronskian(chain, x, order + 2);
    const Jet second = log_derivative_checked(w, x, "Wronskian W(u_1..u_k) vanishes").derivative();
    const Jet X = Jet::variable(x, order);
    return Complex(0.5) * (X * X) - second;
}

Complex partner_potential(const SusySystem& system, Real x) { return partner_potential_jet(system, x, 0).value(); }

Jet oscillator_eigenfunction_jet(int n, Real x, int order) {
    if (n < 0) throw std::invalid_argument("oscillator level must be non-negative");
    Jet psi = ground_state_jet(x, order + n);
    for (int i = 0; i < n; ++i) psi = ladder_apply(Ladder::Raising, psi);
    return psi;
}

Jet transformed_eigenfunction_jet(const SusySystem& system, int n, Real x, int order) {
    const Real energy = n + 0.5;
    Complex product = 1.0;
    for (int j = 1; j <= system.spec.k; ++j) {
        const Real gap = energy - system.spec.factorization_energy(j);
        if (std::abs(gap) <= 1e-12) throw DegenerateError("transformed_eigenfunction: E_n equals a factorization energy");
        product *= gap;
    }
    const Jet psi = oscillator_eigenfunction_jet(n, x, order + system.spec.k);
    return (1.0 / std::sqrt(product)) * bkp_action(system, psi);
}

Complex transformed_eigenfunction(const SusySystem& system, int n, Real x) {
    return transformed_eigenfunction_jet(system, n, x, 0).value();
}

Jet missing_state_jet(const SusySystem& system, int j, Real x, int order) {
    const int k = system.spec.k;
    if (j < 1 || j > k) throw std::invalid_argument("missing_state: j must lie in [1, k]");
    std::vector<Jet> chain = chain_for(system, x, k, order);
    const ScaledDeterminant den = scaled_wronskian(chain, x, order);
    require_nonvanishing(den, x, "Wronskian W(u_1..u_k) vanishes");
    chain.erase(chain.begin() + (j - 1));
    return scaled_wronskian(chain, x, order).det / den.det;
}

Complex missing_state_eigenfunction(const SusySystem& system, int j, Real x) {
    return missing_state_jet(system, j, x, 0).value();
}

}  // namespace piv
