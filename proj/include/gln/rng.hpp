#pragma once

#include <cstdint>

#include "gln/rational.hpp"

namespace gln {

// Deterministic splitmix64 generator. Used everywhere randomness is needed so
// that runs are reproducible from a single seed across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform integer in [lo, hi], inclusive.
    long long uniform(long long lo, long long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long long>(next() % span);
    }

    // Small-denominator rational with numerator in [-3, 3], denominator in [1, 3].
    Rational small_rational() { return Rational(uniform(-3, 3), uniform(1, 3)); }

    // Same pool but never zero.
    Rational nonzero_small_rational() {
        for (;;) {
            Rational r = small_rational();
            if (!r.is_zero()) return r;
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace gln
