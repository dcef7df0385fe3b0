#pragma once

// Deterministic cross-platform RNG (splitmix64). std distributions are
// implementation-defined, so byte-identical verify output requires rolling
// the reductions by hand.

#include <cstdint>
#include <string_view>

#include "lamcalc/rational.hpp"

namespace lamcalc {

struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [lo, hi], inclusive. Modulo bias is irrelevant here.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next() % span);
    }

    bool coin() { return next() & 1; }

    /// Test-scale rationals: numerator in [-9,9], denominator in [1,9].
    Rational rational() {
        return Rational(uniform(-9, 9), uniform(1, 9));
    }

    Rational nonzero_rational() {
        for (;;) {
            Rational r = rational();
            if (!r.is_zero()) return r;
        }
    }

    /// Nonzero and not +-1 (safe wherever (lambda;lambda)_j divides).
    Rational generic_lambda() {
        for (;;) {
            Rational r = rational();
            if (!r.is_zero() && r != Rational(1) && r != Rational(-1)) return r;
        }
    }
};

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (const char ch : s) {
        h ^= static_cast<unsigned char>(ch);
        h *= 0x100000001B3ULL;
    }
    return h;
}

/// Sub-seed for trial t of a named suite under master seed S.
inline std::uint64_t derive_subseed(std::uint64_t seed, std::string_view suite,
                                    std::uint64_t trial) {
    Rng g(seed ^ fnv1a64(suite) ^ (0x9E3779B97F4A7C15ULL * (trial + 1)));
    return g.next();
}

}  // namespace lamcalc
