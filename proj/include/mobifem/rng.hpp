#pragma once

#include <cstdint>

namespace mobifem {

// Counter-based randomness: every draw is a pure function of the integers
// that identify it, so simulations are reproducible regardless of thread
// count or evaluation order. No generator state is ever carried around.

// splitmix64 finalizer (Steele, Lea, Flood 2014). Bijective on 64 bits.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

constexpr std::uint64_t hash_triple(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    std::uint64_t h = splitmix64(a);
    h = splitmix64(h ^ b);
    h = splitmix64(h ^ c);
    return h;
}

// Top 53 bits mapped to (0, 1]; never returns 0 so log() stays finite.
inline double u64_to_unit(std::uint64_t h) {
    return static_cast<double>((h >> 11) + 1) * 0x1.0p-53;
}

// Standard normal draw for the triple (seed, trial, link) via Box-Muller.
double standard_normal(std::uint64_t seed, std::uint64_t trial, std::uint64_t link);

// Exponential draw with unit mean for the same addressing scheme.
double unit_exponential(std::uint64_t seed, std::uint64_t trial, std::uint64_t link);

} // namespace mobifem
