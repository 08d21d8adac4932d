#pragma once

#include <cstdint>
#include <random>

namespace pcapm {

// Deterministic uniform sampler on top of the fixed mt19937_64 stream; the
// standard distributions are implementation-defined, so the mapping to
// doubles is done by hand to keep verify output stable across toolchains.
struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}

    double uniform() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    int index(int n) { return static_cast<int>(eng() % static_cast<std::uint64_t>(n)); }
};

}  // namespace pcapm
