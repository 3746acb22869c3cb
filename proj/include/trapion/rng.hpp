#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace trapion {

// Seedable, splittable generator. Built on mt19937_64, whose output sequence
// is fixed by the standard, and converts bits to doubles by hand so shot
// sequences are identical across standard libraries.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
    result_type operator()() { return engine_(); }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform();
    // Uniform integer in [0, bound). bound must be > 0.
    std::uint64_t below(std::uint64_t bound);
    // Independent child stream; advances this generator by one draw.
    Rng split();

private:
    std::mt19937_64 engine_;
};

}  // namespace trapion
