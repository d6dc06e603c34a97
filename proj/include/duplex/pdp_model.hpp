#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "duplex/error.hpp"
#include "duplex/rng.hpp"
#include "duplex/si_metrics.hpp"
#include "duplex/sweep_table.hpp"
#include "duplex/units.hpp"

namespace duplex {

// Analytical "two-level" profile: one direct tap of power p_direct followed
// by t_r - 1 reflected taps of power p_reflected each.
struct TwoLevelPdp {
    double p_direct = 0.0;
    double p_reflected = 0.0;
    std::size_t t_r = 1;
    double delay_step_s = 1.0;
};

// Stochastic tap model built on the two-level profile: tap 0 is Rician with
// K-factor p_direct/p_reflected (variance p_direct + p_reflected), taps
// 1..t_r-1 are i.i.d. Rayleigh with variance p_reflected, and the single
// signal-of-interest tap is Rayleigh with variance p_signal.
struct FadingModel {
    double p_direct = 0.0;
    double p_reflected = 0.0;
    std::size_t t_r = 1;
    double p_signal = 1.0;
};

// One realization of the fading channels.
struct ChannelDraw {
    std::vector<std::complex<double>> h_i;
    std::complex<double> h_s;
};

inline void validate(const TwoLevelPdp& m) {
    if (!(m.p_direct >= 0.0) || !(m.p_reflected >= 0.0))
        fail("InvalidArgument", "tap powers must be >= 0");
    if (m.p_direct == 0.0 && m.p_reflected == 0.0)
        fail("InvalidArgument", "direct and reflected powers are both zero");
    if (m.t_r < 1) fail("InvalidArgument", "t_r must be >= 1");
    if (!(m.delay_step_s > 0.0)) fail("InvalidArgument", "delay step must be > 0");
}

inline void validate(const FadingModel& m) {
    if (!(m.p_direct >= 0.0) || !(m.p_reflected >= 0.0))
        fail("InvalidArgument", "tap powers must be >= 0");
    if (m.t_r < 1) fail("InvalidArgument", "t_r must be >= 1");
    if (!(m.p_signal > 0.0)) fail("InvalidArgument", "p_signal must be > 0");
}

inline PowerDelayProfile two_level_pdp(const TwoLevelPdp& model) {
    validate(model);
    std::vector<double> powers(model.t_r, model.p_reflected);
    powers[0] = model.p_direct;
    return PowerDelayProfile{std::move(powers), model.delay_step_s};
}

/// RMS delay spread and coherence bandwidth of the two-level profile swept
/// over the direct-to-reflected ratio, one sigma_tau/B_C column pair per
/// reflection duration. Only the ratio matters, so the reflected power is
/// fixed at 1 and the direct power is 10^(DRR/10).
inline SweepTable drr_sweep(std::span<const std::size_t> t_r_list,
                            std::span<const double> drr_grid_db, double delay_step_s) {
    if (t_r_list.empty() || drr_grid_db.empty())
        fail("InvalidArgument", "empty sweep input");
    for (std::size_t t_r : t_r_list)
        if (t_r < 2) fail("InvalidArgument", "sweep needs t_r >= 2");

    SweepTable table;
    table.add_column("DRR_dB", std::vector<double>(drr_grid_db.begin(), drr_grid_db.end()));
    std::vector<std::vector<double>> sigma_cols(t_r_list.size());
    std::vector<std::vector<double>> bc_cols(t_r_list.size());
    for (std::size_t ti = 0; ti < t_r_list.size(); ++ti) {
        for (double drr_db : drr_grid_db) {
            const TwoLevelPdp m{db_to_linear(drr_db), 1.0, t_r_list[ti], delay_step_s};
            const DelayStats st = delay_stats(two_level_pdp(m));
            sigma_cols[ti].push_back(st.rms_delay_spread_s);
            bc_cols[ti].push_back(st.coherence_bw_hz);
        }
    }
    for (std::size_t ti = 0; ti < t_r_list.size(); ++ti)
        table.add_column("sigma_tau_TR" + std::to_string(t_r_list[ti]), std::move(sigma_cols[ti]));
    for (std::size_t ti = 0; ti < t_r_list.size(); ++ti)
        table.add_column("B_C_TR" + std::to_string(t_r_list[ti]), std::move(bc_cols[ti]));
    return table;
}

/// One channel realization. Deterministic in (master_seed, draw_index); see
/// DrawRng for the seeding contract. The line-of-sight component gets a
/// fresh uniform phase each draw so no coherent bias accumulates across the
/// ensemble.
inline ChannelDraw draw_channel(const FadingModel& model, std::uint64_t draw_index,
                                std::uint64_t master_seed) {
    validate(model);
    DrawRng rng(master_seed, draw_index);
    ChannelDraw draw;
    draw.h_i.resize(model.t_r);
    const double theta = rng.phase();
    draw.h_i[0] = std::sqrt(model.p_direct) * std::complex<double>(std::cos(theta), std::sin(theta)) +
                  rng.complex_normal(model.p_reflected);
    for (std::size_t k = 1; k < model.t_r; ++k)
        draw.h_i[k] = rng.complex_normal(model.p_reflected);
    draw.h_s = rng.complex_normal(model.p_signal);
    return draw;
}

/// Total self-interference tap energy sum_m |h_i[m]|^2.
inline double channel_total_gain(const ChannelDraw& draw) {
    double acc = 0.0;
    for (const auto& h : draw.h_i) acc += std::norm(h);
    return acc;
}

}  // namespace duplex
