#pragma once

#include <cstdint>
#include <random>

namespace hcn {

// Stream tags for deriving independent RNG streams from one master seed.
// Keeping purposes on separate streams makes scheme variants bit-comparable:
// a scheme that skips a block does not shift any other block's randomness.
enum class RngStream : std::uint64_t {
    kPlacement = 1,
    kChannel = 2,
    kPhaseInit = 3,
    kModeInit = 4,
    kCoalition = 5,
};

// splitmix64 finalizer; used both as a mixer and as a seed derivation step.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, RngStream stream) {
    return mix64(seed ^ mix64(static_cast<std::uint64_t>(stream)));
}

// Per-run seed for sweep repetitions: a pure function of
// (master seed, repetition index). Neither the scheme nor the axis position
// enters the derivation, so schemes and neighboring axis values are compared
// on common random numbers — paired instances cancel most Monte-Carlo noise.
inline std::uint64_t derive_run_seed(std::uint64_t master, std::size_t repetition) {
    return mix64(mix64(master) ^ mix64(repetition + 0x51ULL));
}

inline std::mt19937_64 make_rng(std::uint64_t seed, RngStream stream) {
    return std::mt19937_64(derive_seed(seed, stream));
}

}  // namespace hcn
