#pragma once

#include <cstdint>

namespace replab {

// Deterministic random streams for simulation trials.
//
// Stream identity (fixed for reproducibility): trial stream i of master seed s
// is an xoshiro256++ generator whose four state words are the first four
// outputs of splitmix64 started at  s + (i + 1) * 0x9E3779B97F4A7C15.
// Identical (seed, stream) always produces identical draws, independent of
// which worker thread runs the trial.

std::uint64_t splitmix64_next(std::uint64_t& state);

class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t next();

    // Uniform on [0,1) with 53 random bits.
    double uniform01();

    // Uniform on [lo, hi).
    double uniform(double lo, double hi);

    // Unbiased integer in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound);

    bool bernoulli(double p);

    // Number of successes in n Bernoulli(p) draws.
    std::int64_t binomial(std::int64_t n, double p);

private:
    std::uint64_t state_[4];
};

} // namespace replab
