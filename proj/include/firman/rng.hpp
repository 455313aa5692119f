#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace firman {

/// splitmix64 finalizer; used to derive well-mixed seeds from counters.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Deterministic random source for population sampling and scheduling.
///
/// The core generator is std::mt19937_64, which the standard pins down
/// bit-exactly. The distribution transforms are implemented here rather
/// than taken from <random> (whose distributions vary across standard
/// libraries), so one seed reproduces the same draw stream on any
/// platform. Every transform consumes a fixed number of engine words,
/// except below(), which rejects out-of-range masked words.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1), 53-bit resolution. One engine word.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// True with probability p. One engine word.
    bool bernoulli(double p) { return uniform01() < p; }

    /// Normal(mean, stddev) via Box-Muller. Always two engine words; the
    /// second deviate of the pair is discarded so draw counts stay
    /// position-independent.
    double normal(double mean, double stddev) {
        const double u1 = static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        return mean + stddev * r * std::cos(2.0 * std::numbers::pi * u2);
    }

    /// Uniform integer in [0, bound). Bitmask rejection, unbiased.
    std::uint64_t below(std::uint64_t bound) {
        if (bound < 2) return 0;
        const int bits = 64 - std::countl_zero(bound - 1);
        const std::uint64_t mask = bits >= 64 ? ~0ull : (1ull << bits) - 1;
        for (;;) {
            const std::uint64_t v = engine_() & mask;
            if (v < bound) return v;
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace firman
