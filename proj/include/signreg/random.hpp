#pragma once

#include "signreg/matrix.hpp"

#include <cstdint>
#include <initializer_list>
#include <random>

namespace signreg {

/// Deterministic PRNG wrapper. Identical seeds give identical streams.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Derives an independent stream from a base seed and a salt.
    static Rng derived(std::uint64_t seed, std::initializer_list<std::uint64_t> salt);

    long uniform_int(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }
    bool bernoulli(double p) { return std::bernoulli_distribution(p)(engine_); }
    std::uint64_t next() { return engine_(); }

    /// num/den with num in [num_lo, num_hi] and den in [1, den_hi].
    Rational rational(long num_lo, long num_hi, long den_hi);

    /// Strictly positive rational with numerator and denominator in [1, bound].
    Rational positive_rational(long bound);

private:
    std::mt19937_64 engine_;
};

}  // namespace signreg
