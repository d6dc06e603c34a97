#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "duplex/error.hpp"
#include "duplex/fft.hpp"
#include "duplex/mc.hpp"
#include "duplex/pdp_model.hpp"
#include "duplex/sweep_table.hpp"
#include "duplex/units.hpp"

namespace duplex {

// How the residual-noise spectrum is assembled from the transmitter-noise
// leak and the receiver noise. The two processes are independent, so their
// power spectra add (independent_sum, the default); amplitude_sum keeps the
// coherent cross term and is provided for auditing alternate conventions.
enum class PsdMode { independent_sum, amplitude_sum };

// Residual self-interference-plus-noise spectrum across uniformly weighted
// frequency bins.
struct NoisePsd {
    std::vector<double> values;
    PsdMode mode = PsdMode::independent_sum;
};

struct LinkBudgetParams {
    double p_t = 1.0;    // transmit power, mW
    double n_t = 1e-3;   // transmitter noise power, mW
    double n_r = 1e-9;   // receiver noise power, mW
    FadingModel fading{0.0, 0.0, 32, 1e-6};
    std::size_t n_bins = 128;       // spectral discretization
    std::uint64_t n_draws = 10000;  // Monte Carlo draws
    std::uint64_t master_seed = 0;
    PsdMode psd_mode = PsdMode::independent_sum;
    unsigned workers = 1;
};

struct CapacityEstimate {
    double mean_bits_per_s_per_hz = 0.0;
    double std_error = 0.0;
    std::uint64_t n_draws = 0;
};

struct WaterfillResult {
    double water_level = 0.0;
    std::vector<double> allocation;
    double capacity_bits_per_s_per_hz = 0.0;
};

inline void validate(const LinkBudgetParams& p) {
    if (!(p.p_t > 0.0)) fail("InvalidArgument", "p_t must be > 0");
    if (!(p.n_t >= 0.0)) fail("InvalidArgument", "n_t must be >= 0");
    if (!(p.n_r > 0.0)) fail("InvalidArgument", "n_r must be > 0");
    if (p.n_bins < p.fading.t_r) fail("InvalidArgument", "n_bins must be >= t_r");
    if (p.n_draws < 1) fail("InvalidArgument", "need at least one draw");
    validate(p.fading);
}

/// Noise spectrum over n_bins uniform frequencies. The channel spectrum is
/// the forward DFT of the zero-padded taps; independent_sum forms
/// n_t*|H(f)|^2 + n_r, amplitude_sum forms |sqrt(n_t)*H(f) + sqrt(n_r)|^2.
inline NoisePsd noise_psd(std::span<const std::complex<double>> h_i, double n_t, double n_r,
                          std::size_t n_bins, PsdMode mode = PsdMode::independent_sum) {
    if (n_bins < h_i.size()) fail("InvalidArgument", "n_bins must be >= tap count");
    std::vector<std::complex<double>> padded(n_bins, std::complex<double>(0.0, 0.0));
    std::copy(h_i.begin(), h_i.end(), padded.begin());
    const auto spectrum = forward_dft(std::move(padded));

    NoisePsd psd;
    psd.mode = mode;
    psd.values.resize(n_bins);
    const double sqrt_nt = std::sqrt(n_t);
    const double sqrt_nr = std::sqrt(n_r);
    for (std::size_t k = 0; k < n_bins; ++k) {
        if (mode == PsdMode::independent_sum)
            psd.values[k] = n_t * std::norm(spectrum[k]) + n_r;
        else
            psd.values[k] = std::norm(sqrt_nt * spectrum[k] + sqrt_nr);
    }
    return psd;
}

/// Water-filling over uniformly weighted bins: finds the level nu with
/// mean_k (nu - S_k)^+ = power, allocates (nu - S_k)^+ per bin, and returns
/// capacity mean_k log2(1 + alloc_k / S_k).
///
/// nu is solved exactly by the sorted active-set method: with the a smallest
/// bins active, nu = (power*n + sum of those bins)/a; the correct a is the
/// largest one whose candidate level covers its highest active bin.
inline WaterfillResult waterfill(const NoisePsd& psd, double power) {
    if (power < 0.0) fail("NegativePower", "power budget must be >= 0");
    const std::size_t n = psd.values.size();
    if (n == 0) fail("InvalidArgument", "empty noise spectrum");
    for (double s : psd.values)
        if (!(s > 0.0) || !std::isfinite(s)) fail("InvalidArgument", "noise bins must be positive and finite");

    std::vector<double> sorted = psd.values;
    std::sort(sorted.begin(), sorted.end());

    double nu = sorted.front();
    if (power > 0.0) {
        double prefix = 0.0;
        std::vector<double> prefixes(n);
        for (std::size_t a = 0; a < n; ++a) {
            prefix += sorted[a];
            prefixes[a] = prefix;
        }
        for (std::size_t a = n; a >= 1; --a) {
            const double candidate =
                (power * static_cast<double>(n) + prefixes[a - 1]) / static_cast<double>(a);
            if (candidate >= sorted[a - 1]) {
                nu = candidate;
                break;
            }
        }
    }

    WaterfillResult result;
    result.water_level = nu;
    result.allocation.resize(n);
    double cap = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double alloc = std::max(nu - psd.values[k], 0.0);
        result.allocation[k] = alloc;
        cap += std::log2(1.0 + alloc / psd.values[k]);
    }
    result.capacity_bits_per_s_per_hz = cap / static_cast<double>(n);
    return result;
}

/// Capacity of one channel realization: water-filling against the residual
/// spectrum of h_i with the per-draw power budget |h_s|^2 * p_t.
inline double fd_draw_capacity(std::span<const std::complex<double>> h_i, double h_s_gain2,
                               const LinkBudgetParams& p) {
    const NoisePsd psd = noise_psd(h_i, p.n_t, p.n_r, p.n_bins, p.psd_mode);
    return waterfill(psd, h_s_gain2 * p.p_t).capacity_bits_per_s_per_hz;
}

/// Half-duplex rate for a fixed signal gain: even time sharing with the
/// downlink (pre-log 1/2) and the doubled transmit power it buys.
inline double hd_draw_capacity(double h_s_gain2, double p_t, double n_r) {
    return 0.5 * std::log2(1.0 + 2.0 * h_s_gain2 * p_t / n_r);
}

/// Full-duplex rate for a fixed signal gain with no self-interference.
inline double ideal_draw_capacity(double h_s_gain2, double p_t, double n_r) {
    return std::log2(1.0 + h_s_gain2 * p_t / n_r);
}

inline CapacityEstimate fd_uplink_capacity(const LinkBudgetParams& p) {
    validate(p);
    auto caps = mc_collect(p.n_draws, p.workers, [&p](std::uint64_t i) {
        const ChannelDraw d = draw_channel(p.fading, i, p.master_seed);
        return fd_draw_capacity(d.h_i, std::norm(d.h_s), p);
    });
    const auto [mean, se] = mean_std_error(caps);
    return CapacityEstimate{mean, se, p.n_draws};
}

inline CapacityEstimate hd_uplink_capacity(const LinkBudgetParams& p) {
    validate(p);
    auto caps = mc_collect(p.n_draws, p.workers, [&p](std::uint64_t i) {
        const ChannelDraw d = draw_channel(p.fading, i, p.master_seed);
        return hd_draw_capacity(std::norm(d.h_s), p.p_t, p.n_r);
    });
    const auto [mean, se] = mean_std_error(caps);
    return CapacityEstimate{mean, se, p.n_draws};
}

inline CapacityEstimate ideal_fd_capacity(const LinkBudgetParams& p) {
    validate(p);
    auto caps = mc_collect(p.n_draws, p.workers, [&p](std::uint64_t i) {
        const ChannelDraw d = draw_channel(p.fading, i, p.master_seed);
        return ideal_draw_capacity(std::norm(d.h_s), p.p_t, p.n_r);
    });
    const auto [mean, se] = mean_std_error(caps);
    return CapacityEstimate{mean, se, p.n_draws};
}

/// Average passive suppression in dB: 10*log10 of the ensemble mean of
/// 1 / (total tap energy).
inline double passive_suppression_mc(const LinkBudgetParams& p) {
    validate(p);
    if (p.fading.p_direct == 0.0 && p.fading.p_reflected == 0.0)
        fail("DegenerateChannel", "self-interference channel is identically zero");
    auto inv_gains = mc_collect(p.n_draws, p.workers, [&p](std::uint64_t i) {
        const double g = channel_total_gain(draw_channel(p.fading, i, p.master_seed));
        if (g <= 0.0) fail("DegenerateChannel", "zero total channel gain");
        return 1.0 / g;
    });
    return linear_to_db(mean_std_error(inv_gains).mean);
}

/// Average active cancellation in dB for a canceler that subtracts the known
/// transmit signal filtered by the first n_tap channel taps. Residual power:
/// the uncancelled tail carries the transmit signal, the full channel
/// carries the (unknown) transmitter noise.
inline double active_cancellation_mc(const LinkBudgetParams& p, std::size_t n_tap) {
    validate(p);
    if (n_tap > p.fading.t_r) fail("InvalidArgument", "n_tap must be <= t_r");
    auto ratios = mc_collect(p.n_draws, p.workers, [&p, n_tap](std::uint64_t i) {
        const ChannelDraw d = draw_channel(p.fading, i, p.master_seed);
        double total = 0.0;
        double tail = 0.0;
        for (std::size_t m = 0; m < d.h_i.size(); ++m) {
            const double g = std::norm(d.h_i[m]);
            total += g;
            if (m >= n_tap) tail += g;
        }
        return total * (p.p_t + p.n_t) / (tail * p.p_t + total * p.n_t);
    });
    return linear_to_db(mean_std_error(ratios).mean);
}

/// Uplink capacity vs direct-path strength: one FD column per reflected
/// level, plus the half-duplex and ideal full-duplex references (which do
/// not depend on the self-interference channel). Every grid point reuses
/// the same master seed, so curves share their random draws.
inline SweepTable capacity_sweep(const LinkBudgetParams& base, std::span<const double> p_d_grid_db,
                                 std::span<const double> p_r_list_db) {
    if (p_d_grid_db.empty() || p_r_list_db.empty())
        fail("InvalidArgument", "empty sweep input");
    SweepTable table;
    table.add_column("P_D_dB", std::vector<double>(p_d_grid_db.begin(), p_d_grid_db.end()));
    for (double p_r_db : p_r_list_db) {
        std::vector<double> col;
        col.reserve(p_d_grid_db.size());
        for (double p_d_db : p_d_grid_db) {
            LinkBudgetParams point = base;
            point.fading.p_direct = db_to_linear(p_d_db);
            point.fading.p_reflected = db_to_linear(p_r_db);
            col.push_back(fd_uplink_capacity(point).mean_bits_per_s_per_hz);
        }
        table.add_column("FD_PR_" + format_value(p_r_db) + "dB", std::move(col));
    }
    const double hd = hd_uplink_capacity(base).mean_bits_per_s_per_hz;
    const double ideal = ideal_fd_capacity(base).mean_bits_per_s_per_hz;
    table.add_column("HD", std::vector<double>(p_d_grid_db.size(), hd));
    table.add_column("IdealFD", std::vector<double>(p_d_grid_db.size(), ideal));
    return table;
}

/// Passive suppression and active cancellation vs direct-path strength, one
/// cancellation column per canceler length.
inline SweepTable cancel_sweep(const LinkBudgetParams& base, std::span<const double> p_d_grid_db,
                               std::span<const std::size_t> n_tap_list) {
    if (p_d_grid_db.empty() || n_tap_list.empty())
        fail("InvalidArgument", "empty sweep input");
    SweepTable table;
    table.add_column("P_D_dB", std::vector<double>(p_d_grid_db.begin(), p_d_grid_db.end()));
    std::vector<double> passive;
    passive.reserve(p_d_grid_db.size());
    for (double p_d_db : p_d_grid_db) {
        LinkBudgetParams point = base;
        point.fading.p_direct = db_to_linear(p_d_db);
        passive.push_back(passive_suppression_mc(point));
    }
    table.add_column("alpha_P_dB", std::move(passive));
    for (std::size_t n_tap : n_tap_list) {
        std::vector<double> col;
        col.reserve(p_d_grid_db.size());
        for (double p_d_db : p_d_grid_db) {
            LinkBudgetParams point = base;
            point.fading.p_direct = db_to_linear(p_d_db);
            col.push_back(active_cancellation_mc(point, n_tap));
        }
        table.add_column("alpha_A_N" + std::to_string(n_tap) + "_dB", std::move(col));
    }
    return table;
}

}  // namespace duplex
