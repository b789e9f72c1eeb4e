#include "mobifem/rng.hpp"

#include <cmath>
#include <numbers>

namespace mobifem {

double standard_normal(std::uint64_t seed, std::uint64_t trial, std::uint64_t link) {
    const std::uint64_t h1 = hash_triple(seed, trial, link);
    const std::uint64_t h2 = splitmix64(h1);
    const double u1 = u64_to_unit(h1);                           // (0, 1]
    const double u2 = static_cast<double>(h2 >> 11) * 0x1.0p-53; // [0, 1)
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double unit_exponential(std::uint64_t seed, std::uint64_t trial, std::uint64_t link) {
    return -std::log(u64_to_unit(hash_triple(seed, trial, link)));
}

} // namespace mobifem
