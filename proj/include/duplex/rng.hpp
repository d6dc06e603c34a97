#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace duplex {

namespace detail {

// SplitMix64 finalizer; full-avalanche mixing of a 64-bit word.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace detail

// Per-draw random stream. The engine seed is a pure function of
// (master_seed, draw_index), so draw i produces the same variates no matter
// how draws are partitioned among workers or in what order they run.
class DrawRng {
public:
    DrawRng(std::uint64_t master_seed, std::uint64_t draw_index)
        : engine_(detail::mix64(detail::mix64(master_seed) ^ detail::mix64(draw_index))) {}

    /// Uniform on [0, 1), 53-bit resolution.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller (explicit, so the variate sequence is
    /// pinned by this class rather than by the standard library).
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform();  // (0, 1]
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    /// Circularly symmetric complex Gaussian with the given total variance.
    std::complex<double> complex_normal(double variance) {
        const double s = std::sqrt(variance / 2.0);
        const double re = normal();
        const double im = normal();
        return {s * re, s * im};
    }

    /// Uniform phase on [0, 2pi).
    double phase() { return 2.0 * std::numbers::pi * uniform(); }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace duplex
