#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace entropic {

// splitmix64 step; used both as a stream mixer and for seed derivation.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Derives an independent stream seed from a master seed and a list of
/// identifiers (operation tag, grid index, trial index, ...). Stable across
/// platforms, so per-trial results do not depend on scheduling.
inline std::uint64_t derive_seed(std::uint64_t master,
                                 std::initializer_list<std::uint64_t> parts) {
    std::uint64_t s = master;
    splitmix64(s);
    for (std::uint64_t p : parts) {
        s ^= p + 0x9e3779b97f4a7c15ULL + (s << 6) + (s >> 2);
        splitmix64(s);
    }
    return splitmix64(s);
}

/// Seeded generator with hand-rolled variate transforms. Every transform is
/// implemented here rather than via std:: distributions so that identical
/// seeds give identical draws regardless of the standard library build.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1), 53-bit resolution.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in (0, 1]; safe as a log argument.
    double uniform_open() {
        return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
    }

    /// Uniform integer in [0, n). Rejection sampling keeps it unbiased.
    std::uint64_t uniform_int(std::uint64_t n) {
        const std::uint64_t limit = n * (UINT64_MAX / n);
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    /// Unit-rate exponential.
    double exponential() { return -std::log(uniform_open()); }

    /// Standard normal via Box-Muller.
    double normal() {
        const double u = uniform_open();
        const double v = uniform();
        return std::sqrt(-2.0 * std::log(u)) *
               std::cos(2.0 * 3.14159265358979323846 * v);
    }

    /// Gamma(shape, 1). Marsaglia-Tsang for shape >= 1; the boost
    /// Gamma(a) = Gamma(a+1) * U^(1/a) for shape < 1. Small shapes may
    /// underflow to exactly zero; callers that normalize must check the sum.
    double gamma(double shape) {
        if (shape == 1.0) return exponential();
        if (shape < 1.0) {
            const double boost = std::pow(uniform_open(), 1.0 / shape);
            return gamma(shape + 1.0) * boost;
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x;
            double v;
            do {
                x = normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = uniform_open();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v)))
                return d * v;
        }
    }

    std::mt19937_64& engine() { return engine_; }

  private:
    std::mt19937_64 engine_;
};

}  // namespace entropic
