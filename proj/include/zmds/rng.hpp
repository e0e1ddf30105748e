#pragma once

#include <cstdint>
#include <random>

namespace zmds {

// SplitMix64 step. Used directly as a small generator and as the seed
// splitter for deriving independent streams from one master seed.
inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Stream seed derivation rule: two SplitMix64 steps over (master, stream).
// Every component that needs randomness takes a stream index so that runs
// are reproducible from a single --seed.
inline uint64_t derive_seed(uint64_t master, uint64_t stream) {
    uint64_t s = master ^ (stream * 0xd1b54a32d192ed03ull + 0x2545f4914f6cdd1dull);
    (void)splitmix64(s);
    return splitmix64(s);
}

inline std::mt19937_64 make_rng(uint64_t master, uint64_t stream = 0) {
    return std::mt19937_64(derive_seed(master, stream));
}

}  // namespace zmds
