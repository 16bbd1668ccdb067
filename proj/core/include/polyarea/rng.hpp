#pragma once

#include <cstdint>
#include <random>

namespace polyarea {

// Stateless mixer used to derive independent stream seeds from a base seed.
uint64_t splitmix64(uint64_t x);

inline uint64_t derive_seed(uint64_t base, uint64_t stream) {
    return splitmix64(base + 0x9e3779b97f4a7c15ull * (stream + 1));
}

// Deterministic random source. Gaussians come from the Marsaglia polar
// method instead of std::normal_distribution, whose sequence the standard
// does not pin down.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next_u64() { return gen_(); }

    // Uniform in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // Uniform in [0, bound), bound > 0, by rejection.
    uint64_t next_below(uint64_t bound);

    // Normal with mean 0 and the given standard deviation.
    double next_gaussian(double sigma);

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace polyarea
