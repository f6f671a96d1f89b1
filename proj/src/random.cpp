#include "msim/random.hpp"

#include <cmath>
#include <numbers>

namespace msim {

double RandomSource::normal(std::uint64_t k) const noexcept {
    // 1 - u keeps the log argument in (0, 1].
    const double u1 = 1.0 - uniform(2 * k);
    const double u2 = uniform(2 * k + 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace msim
