#include "piv/types.hpp"

#include <stdexcept>
#include <string>

namespace piv {

Family family_from_int(int family) {
    if (family < 1 || family > 3) throw std::invalid_argument("family must be 1, 2 or 3, got " + std::to_string(family));
    return static_cast<Family>(family);
}

void SeedSpec::validate() const {
    if (k < 1 || k > kMaxOrder) throw std::invalid_argument("transformation order k must lie in [1, 10]");
    family_from_int(to_int(family));
    if (!std::isfinite(epsilon1) || !std::isfinite(lambda.real()) || !std::isfinite(lambda.imag()))
        throw std::invalid_argument("seed parameters must be finite");
}

}  // namespace piv
