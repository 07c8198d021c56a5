#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace edcp {

/// splitmix64 finalizer; full-period bijective mixer.
inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Derive the seed of an independent substream (replicate, trial, cell, ...)
/// from a master seed. Substreams with distinct ids never collide in practice,
/// which makes parallel execution reproducible regardless of scheduling.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    return splitmix64(splitmix64(master) ^ splitmix64(stream + 0x9E3779B97F4A7C15ULL));
}

inline std::mt19937_64 make_engine(std::uint64_t seed) {
    return std::mt19937_64(splitmix64(seed));
}

/// Standard normal sampler: Marsaglia's polar method over raw 64-bit engine
/// words, caching the second draw of each accepted pair. Identical law to
/// std::normal_distribution with far less per-draw overhead, which matters in
/// the limit simulation (m * T * R draws per test).
class NormalSampler {
public:
    explicit NormalSampler(std::mt19937_64& eng) : eng_(&eng) {}

    double operator()() {
        if (hasSpare_) {
            hasSpare_ = false;
            return spare_;
        }
        double u;
        double v;
        double s;
        do {
            u = signed_unit();
            v = signed_unit();
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        double scale = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * scale;
        hasSpare_ = true;
        return u * scale;
    }

private:
    // Uniform on (-1, 1) from the top 54 signed bits of one engine word.
    double signed_unit() {
        return static_cast<double>(static_cast<std::int64_t>((*eng_)()) >> 10) * 0x1p-53;
    }

    std::mt19937_64* eng_;
    double spare_ = 0.0;
    bool hasSpare_ = false;
};

} // namespace edcp
