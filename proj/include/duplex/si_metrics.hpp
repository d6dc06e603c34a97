#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "duplex/error.hpp"
#include "duplex/fft.hpp"
#include "duplex/frequency_response.hpp"
#include "duplex/units.hpp"

namespace duplex {

// Delay-indexed tap powers (linear) with uniform delay spacing; tau = 0 at
// index 0.
struct PowerDelayProfile {
    std::vector<double> powers;
    double delay_step_s = 0.0;
};

struct DelayStats {
    double mean_delay_s = 0.0;        // first moment of the normalized profile
    double rms_delay_spread_s = 0.0;  // second central moment, sqrt
    double coherence_bw_hz = 0.0;     // 0.02 / rms spread; +inf for a pure single path
};

struct SuppressionReport {
    double avg_suppression_db = 0.0;
    double direct_path_suppression_db = 0.0;
    DelayStats delay_stats;
    std::size_t required_taps = 1;
    double analysis_bandwidth_hz = 0.0;
};

struct Suppression {
    double ratio = 0.0;  // linear transmit-to-incident power ratio
    double db = 0.0;
};

// Ratio of coherence bandwidth to RMS delay spread in the 90%-correlation
// approximation B_C ~= 0.02 / sigma_tau.
inline constexpr double kCoherenceFactor = 0.02;

/// Average suppression over the band: inverse of the mean squared magnitude
/// of the response.
inline Suppression avg_passive_suppression(const FrequencyResponse& resp) {
    double acc = 0.0;
    for (const auto& v : resp.values) acc += std::norm(v);
    const double mean_power = acc / static_cast<double>(resp.values.size());
    if (mean_power <= 0.0) fail("AllZeroResponse", "response has zero mean power");
    const double ratio = 1.0 / mean_power;
    return Suppression{ratio, linear_to_db(ratio)};
}

/// Impulse-response tap powers from the frequency response.
///
/// Convention: the inverse transform carries the 1/N factor,
/// h[k] = (1/N) sum_n H_n e^{+j2pikn/N}, so a flat unit response maps to a
/// unit tap at delay zero and sum_k |h[k]|^2 equals mean_n |H_n|^2.
/// Delay resolution is 1/(N*df). n_taps = 0 keeps all N taps.
inline PowerDelayProfile to_pdp(const FrequencyResponse& resp, std::size_t n_taps = 0) {
    const std::size_t n = resp.values.size();
    if (n_taps > n) fail("InvalidArgument", "n_taps exceeds number of frequency points");
    auto h = inverse_dft(resp.values);
    const double inv_n = 1.0 / static_cast<double>(n);
    const std::size_t keep = n_taps == 0 ? n : n_taps;
    std::vector<double> powers(keep);
    for (std::size_t k = 0; k < keep; ++k) powers[k] = std::norm(h[k] * inv_n);
    return PowerDelayProfile{std::move(powers), 1.0 / (static_cast<double>(n) * frequency_step_hz(resp))};
}

namespace detail {

inline std::size_t argmax_tap(const std::vector<double>& p, std::size_t count) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < count; ++k)
        if (p[k] > p[best]) best = k;  // ties keep the lowest index
    return best;
}

}  // namespace detail

/// Zeroes taps below the estimated noise floor. The floor is the median
/// power of the last 10% of taps; everything below floor * 10^(margin/10)
/// is cleared, except the global-maximum tap which always survives.
inline PowerDelayProfile denoise_pdp(const PowerDelayProfile& pdp, double floor_margin_db) {
    if (floor_margin_db < 0.0) fail("InvalidArgument", "floor margin must be >= 0 dB");
    const std::size_t n = pdp.powers.size();
    const std::size_t tail = std::max<std::size_t>(1, n / 10);
    std::vector<double> tail_powers(pdp.powers.end() - static_cast<std::ptrdiff_t>(tail),
                                    pdp.powers.end());
    std::sort(tail_powers.begin(), tail_powers.end());
    const double floor = tail % 2 == 1
                             ? tail_powers[tail / 2]
                             : 0.5 * (tail_powers[tail / 2 - 1] + tail_powers[tail / 2]);
    const double threshold = floor * db_to_linear(floor_margin_db);

    PowerDelayProfile out = pdp;
    const std::size_t keep = detail::argmax_tap(pdp.powers, n);
    for (std::size_t k = 0; k < n; ++k)
        if (k != keep && out.powers[k] < threshold) out.powers[k] = 0.0;
    return out;
}

/// Mean delay and RMS delay spread of the normalized profile, plus the
/// coherence bandwidth approximation. A zero-spread (single-path) profile
/// maps to an infinite coherence bandwidth.
inline DelayStats delay_stats(const PowerDelayProfile& pdp) {
    if (pdp.delay_step_s <= 0.0) fail("InvalidArgument", "delay step must be > 0");
    double total = 0.0;
    for (double p : pdp.powers) {
        if (!(p >= 0.0) || !std::isfinite(p)) fail("InvalidArgument", "tap powers must be finite and >= 0");
        total += p;
    }
    if (total <= 0.0) fail("ZeroTotalPower", "profile has no power");

    // normalize each weight up front so common scaling of the profile
    // cancels before any accumulation
    const double dt = pdp.delay_step_s;
    double mean = 0.0;
    for (std::size_t k = 0; k < pdp.powers.size(); ++k)
        mean += (static_cast<double>(k) * dt) * (pdp.powers[k] / total);

    double var = 0.0;
    for (std::size_t k = 0; k < pdp.powers.size(); ++k) {
        const double d = static_cast<double>(k) * dt - mean;
        var += d * d * (pdp.powers[k] / total);
    }

    const double sigma = std::sqrt(var);
    const double bc = sigma > 0.0 ? kCoherenceFactor / sigma
                                  : std::numeric_limits<double>::infinity();
    return DelayStats{mean, sigma, bc};
}

/// Suppression of the direct path, estimated from the strongest tap within
/// the initial window (ties resolve to the lowest index).
inline double direct_path_suppression_db(const PowerDelayProfile& pdp,
                                         std::size_t window_taps = 4) {
    if (window_taps < 1) fail("InvalidArgument", "window must cover at least 1 tap");
    const std::size_t count = std::min(window_taps, pdp.powers.size());
    const double peak = pdp.powers[detail::argmax_tap(pdp.powers, count)];
    if (peak <= 0.0) fail("ZeroWindowPower", "no power in the initial tap window");
    return linear_to_db(1.0 / peak);
}

/// Cancellation-filter taps needed for a signal of the given bandwidth over
/// a channel with the given coherence bandwidth: ceil(B / B_C), at least 1.
inline std::size_t required_taps(double coherence_bw_hz, double signal_bandwidth_hz) {
    if (!(signal_bandwidth_hz > 0.0))
        fail("NonPositiveBandwidth", "signal bandwidth must be > 0");
    if (std::isinf(coherence_bw_hz)) return 1;
    if (!(coherence_bw_hz > 0.0))
        fail("NonPositiveBandwidth", "coherence bandwidth must be > 0");
    const double taps = std::ceil(signal_bandwidth_hz / coherence_bw_hz);
    return taps < 1.0 ? 1 : static_cast<std::size_t>(taps);
}

/// Full metric chain over a measured response: average suppression, PDP,
/// noise-floor cleanup, delay statistics, direct-path suppression, and the
/// canceler-tap requirement at the given signal bandwidth.
inline SuppressionReport analyze(const FrequencyResponse& resp, double signal_bandwidth_hz,
                                 double floor_margin_db = 6.0, std::size_t window_taps = 4) {
    const Suppression supp = avg_passive_suppression(resp);
    const PowerDelayProfile pdp = denoise_pdp(to_pdp(resp), floor_margin_db);
    const DelayStats stats = delay_stats(pdp);
    const double direct_db = direct_path_suppression_db(pdp, window_taps);
    const std::size_t taps = required_taps(stats.coherence_bw_hz, signal_bandwidth_hz);
    const double analysis_bw =
        static_cast<double>(resp.freqs_hz.size()) * frequency_step_hz(resp);
    return SuppressionReport{supp.db, direct_db, stats, taps, analysis_bw};
}

}  // namespace duplex
