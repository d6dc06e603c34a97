#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "duplex/error.hpp"

namespace duplex {

// Uniformly spaced complex channel samples over a band, e.g. the S21
// transmission coefficient recorded by a network analyzer.
struct FrequencyResponse {
    std::vector<double> freqs_hz;
    std::vector<std::complex<double>> values;  // linear scale, dimensionless
    std::string meta;
};

// Relative tolerance on grid uniformity. Network analyzers emit uniform
// sweeps, so a tight bound is safe.
inline constexpr double kGridUniformityTol = 1e-6;

inline double frequency_step_hz(const FrequencyResponse& resp) {
    return (resp.freqs_hz.back() - resp.freqs_hz.front()) /
           static_cast<double>(resp.freqs_hz.size() - 1);
}

/// Validates lengths, monotonicity, grid uniformity and finiteness, then
/// assembles the response. Throws NonUniformGrid / InvalidFrequencyResponse.
inline FrequencyResponse make_frequency_response(std::vector<double> freqs_hz,
                                                 std::vector<std::complex<double>> values,
                                                 std::string meta) {
    const std::size_t n = freqs_hz.size();
    if (n != values.size())
        fail("InvalidFrequencyResponse", "frequency and value counts differ");
    if (n < 2)
        fail("InvalidFrequencyResponse", "need at least 2 frequency points");
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(freqs_hz[i]))
            fail("InvalidFrequencyResponse", "non-finite frequency");
        if (!std::isfinite(values[i].real()) || !std::isfinite(values[i].imag()))
            fail("InvalidFrequencyResponse", "non-finite value");
    }
    for (std::size_t i = 1; i < n; ++i) {
        if (!(freqs_hz[i] > freqs_hz[i - 1]))
            fail("NonUniformGrid", "frequencies not strictly increasing");
    }
    const double df_mean = (freqs_hz.back() - freqs_hz.front()) / static_cast<double>(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
        const double df = freqs_hz[i] - freqs_hz[i - 1];
        if (std::abs(df - df_mean) > kGridUniformityTol * df_mean)
            fail("NonUniformGrid", "grid spacing not uniform within tolerance");
    }
    return FrequencyResponse{std::move(freqs_hz), std::move(values), std::move(meta)};
}

}  // namespace duplex
