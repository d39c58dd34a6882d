#include "signreg/random.hpp"

namespace signreg {

namespace {

// splitmix64 finalizer
std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

Rng Rng::derived(std::uint64_t seed, std::initializer_list<std::uint64_t> salt) {
    std::uint64_t h = mix(seed);
    for (auto s : salt) h = mix(h ^ mix(s));
    return Rng(h);
}

Rational Rng::rational(long num_lo, long num_hi, long den_hi) {
    const long num = uniform_int(num_lo, num_hi);
    const long den = uniform_int(1, den_hi);
    return Rational(num, den);
}

Rational Rng::positive_rational(long bound) {
    return Rational(uniform_int(1, bound), uniform_int(1, bound));
}

}  // namespace signreg
