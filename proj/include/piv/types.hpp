#pragma once

#include "piv/numerics.hpp"

namespace piv {

/// Which extremal state of the partner Hamiltonian generates g.
/// One: W(u_1..u_{k-1})/W(u_1..u_k); Two: B_k^+ e^{-x^2/2}; Three: B_k^+ a^+ u_1.
enum class Family : int { One = 1, Two = 2, Three = 3 };

Family family_from_int(int family);
inline int to_int(Family f) noexcept { return static_cast<int>(f); }

/// Everything that determines one generated solution.
struct SeedSpec {
    Real epsilon1 = 0.0;  ///< factorization energy of the free seed
    Complex lambda{};     ///< odd-part mixing constant of u_1
    int k = 1;            ///< transformation order
    Family family = Family::One;

    /// Throws std::invalid_argument unless 1 <= k <= 10.
    void validate() const;
    bool real_seed() const noexcept { return lambda.imag() == 0.0; }
    /// epsilon_j = epsilon_1 - (j - 1), 1-based.
    Real factorization_energy(int j) const noexcept { return epsilon1 - (j - 1); }
};

inline constexpr int kMaxOrder = 10;

/// Parameters (a, b) of g'' = g'^2/(2g) + 3/2 g^3 + 4x g^2 + 2(x^2 - a) g + b/g.
struct PivParams {
    Real a = 0.0;
    Real b = 0.0;
};

}  // namespace piv
