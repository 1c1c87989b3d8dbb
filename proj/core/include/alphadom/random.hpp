#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace alphadom {

using Seed = std::uint64_t;
using Rng = std::mt19937_64;

/// SplitMix64 finalizer; a bijective 64-bit mixer.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Stable child seed from a parent seed and a tuple of coordinates. Adding
/// coordinates elsewhere never perturbs an existing derivation.
constexpr Seed derive_seed(Seed base, std::initializer_list<std::uint64_t> coords) noexcept {
    std::uint64_t h = mix64(base);
    for (std::uint64_t c : coords) h = mix64(h ^ mix64(c + 0x632be59bd9b4e019ULL));
    return h;
}

// Stream tags so the structure and the weights of one graph never share draws.
inline constexpr std::uint64_t kStreamGnm = 1;
inline constexpr std::uint64_t kStreamPowerlaw = 2;
inline constexpr std::uint64_t kStreamPlanted = 3;
inline constexpr std::uint64_t kStreamWeights = 4;

}  // namespace alphadom
