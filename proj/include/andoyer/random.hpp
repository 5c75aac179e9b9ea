#pragma once

#include <cstdint>
#include <random>

namespace andoyer {

// Deterministic uniform generator. mt19937_64 output is fixed by the
// standard; the [0,1) mapping below avoids the implementation-defined
// std::uniform_real_distribution, so streams are byte-reproducible.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    static std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
        // splitmix64 over the pair
        std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    std::uint64_t next_u64() { return engine_(); }

  private:
    std::mt19937_64 engine_;
};

}  // namespace andoyer
