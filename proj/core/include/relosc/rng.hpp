#pragma once

#include <cstdint>
#include <random>

namespace relosc {

// Deterministic uniform generator.  std::uniform_real_distribution is
// implementation-defined, which would break byte-identical outputs across
// toolchains; this maps the mt19937_64 stream to doubles directly.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // Uniform in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Uniform integer in [0, n-1] (n small; modulo bias negligible for our use
    // of picking polynomial degrees, and determinism is what matters).
    int index(int n) { return static_cast<int>(eng_() % static_cast<std::uint64_t>(n)); }

private:
    std::mt19937_64 eng_;
};

}  // namespace relosc
