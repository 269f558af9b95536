#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace qmeas {

/// Seedable random stream. Wraps std::mt19937_64 (bit-exact across
/// platforms) and maps to doubles with explicit formulas instead of
/// std distributions, so replays with the same seed are reproducible
/// byte-for-byte everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// uniform in [0, 1)
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// uniform in [lo, hi)
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform();
    }

    /// standard normal via Box-Muller (caches the paired value)
    double gauss();

    /// standard complex normal: re and im each N(0, 1/2), E|z|^2 = 1
    std::complex<double> complex_gauss() {
        constexpr double inv_sqrt2 = 0.7071067811865475244;
        const double re = gauss(), im = gauss();
        return {re * inv_sqrt2, im * inv_sqrt2};
    }

    /// index in [0, n) from cumulative-inverse sampling of uniform()
    std::size_t index(std::size_t n) {
        return static_cast<std::size_t>(uniform() * static_cast<double>(n)) %
               n;
    }

    /// per-shard stream derivation (shard_seed = seed XOR shard_index)
    static std::uint64_t shard_seed(std::uint64_t seed,
                                    std::uint64_t shard_index) {
        return seed ^ shard_index;
    }

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

} // namespace qmeas
