#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "duplex/capacity.hpp"
#include "duplex/detail/text.hpp"
#include "duplex/error.hpp"
#include "duplex/units.hpp"

namespace duplex {

/// Expands a sweep specification: either 'start:stop:step' (stop included
/// when it lands on the lattice within 1e-9 of a step) or a comma-separated
/// value list. A bare number is a one-point grid.
inline std::vector<double> parse_grid(const std::string& spec) {
    using namespace detail;
    std::vector<double> out;
    if (spec.find(':') != std::string::npos) {
        auto parts = split_on(spec, ':');
        if (parts.size() != 3) fail("InvalidGrid", "expected 'start:stop:step': " + spec);
        auto a = parse_double(parts[0]);
        auto b = parse_double(parts[1]);
        auto s = parse_double(parts[2]);
        if (!a || !b || !s) fail("InvalidGrid", "non-numeric grid bound: " + spec);
        if (*s == 0.0) fail("InvalidGrid", "step must be nonzero");
        const double tol = 1e-9 * std::abs(*s);
        if (*s > 0.0) {
            for (double v = *a; v <= *b + tol; v += *s) out.push_back(v);
        } else {
            for (double v = *a; v >= *b - tol; v += *s) out.push_back(v);
        }
    } else {
        for (const auto& tok : split_on(spec, ',')) {
            auto v = parse_double(tok);
            if (!v) fail("InvalidGrid", "non-numeric grid value: " + tok);
            out.push_back(*v);
        }
    }
    if (out.empty()) fail("InvalidGrid", "grid expands to no points: " + spec);
    return out;
}

inline std::vector<std::size_t> parse_count_list(const std::string& spec) {
    std::vector<std::size_t> out;
    for (double v : parse_grid(spec)) {
        if (v < 0.0 || v != std::floor(v))
            fail("InvalidGrid", "expected non-negative integers: " + spec);
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

// All run parameters in user-facing units (dBm/dB/Hz), plus sweep grids and
// Monte Carlo controls. Precedence: command-line flag > config-file entry >
// the built-in defaults below.
struct RunConfig {
    // link budget (user units)
    double p_t_dbm = 0.0;
    double n_t_dbm = -30.0;
    double n_r_dbm = -90.0;
    double p_s_db = -60.0;
    std::size_t t_r = 32;

    // analysis
    double signal_bandwidth_hz = 20e6;
    double floor_margin_db = 6.0;
    std::size_t window_taps = 4;

    // Monte Carlo
    std::size_t n_bins = 128;
    std::uint64_t draws = 10000;
    std::uint64_t master_seed = 0;
    unsigned workers = 1;
    PsdMode psd_mode = PsdMode::independent_sum;

    // sweep grids
    std::string pd_grid = "-100:-20:5";
    std::string pr_list = "-40,-50,-60,-70,-80";
    std::string drr_grid = "-60:60:1";
    std::string tr_list = "5,10,20,40";
    std::string ntap_list = "1,24,32";
    double model_delay_step_s = 1.0;

    std::string out_path;

    void apply(const std::string& key, const std::string& value);
    void load_config_text(const std::string& text);
};

inline void RunConfig::apply(const std::string& key, const std::string& value) {
    using namespace detail;
    auto num = [&](double lo, double hi) {
        auto v = parse_double(value);
        if (!v || *v < lo || *v > hi) fail("InvalidConfig", "bad value for " + key + ": " + value);
        return *v;
    };
    auto count = [&](double lo) {
        const double v = num(lo, 1e18);
        if (v != std::floor(v)) fail("InvalidConfig", "expected integer for " + key + ": " + value);
        return v;
    };

    if (key == "p_t_dbm") p_t_dbm = num(-300, 300);
    else if (key == "n_t_dbm") n_t_dbm = num(-300, 300);
    else if (key == "n_r_dbm") n_r_dbm = num(-300, 300);
    else if (key == "p_s_db") p_s_db = num(-300, 300);
    else if (key == "t_r") t_r = static_cast<std::size_t>(count(1));
    else if (key == "bandwidth_hz") signal_bandwidth_hz = num(1e-12, 1e15);
    else if (key == "floor_margin_db") floor_margin_db = num(0, 300);
    else if (key == "window_taps") window_taps = static_cast<std::size_t>(count(1));
    else if (key == "n_bins") n_bins = static_cast<std::size_t>(count(1));
    else if (key == "draws") draws = static_cast<std::uint64_t>(count(1));
    else if (key == "seed") master_seed = static_cast<std::uint64_t>(count(0));
    else if (key == "workers") workers = static_cast<unsigned>(count(1));
    else if (key == "psd_mode") {
        if (value == "sum") psd_mode = PsdMode::independent_sum;
        else if (value == "literal") psd_mode = PsdMode::amplitude_sum;
        else fail("InvalidConfig", "psd_mode must be 'sum' or 'literal'");
    }
    else if (key == "pd_grid") pd_grid = value;
    else if (key == "pr_list") pr_list = value;
    else if (key == "drr_grid") drr_grid = value;
    else if (key == "tr_list") tr_list = value;
    else if (key == "ntap_list") ntap_list = value;
    else if (key == "delay_step_s") model_delay_step_s = num(1e-15, 1e6);
    else if (key == "out") out_path = value;
    else fail("InvalidConfig", "unknown config key: " + key);
}

/// key=value lines; '#' starts a comment, blank lines are skipped.
inline void RunConfig::load_config_text(const std::string& text) {
    using namespace detail;
    for (const std::string& raw : split_lines(text)) {
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) fail("InvalidConfig", "expected key=value: " + line);
        apply(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
}

/// Link-budget parameters in linear units for a given direct/reflected
/// operating point.
inline LinkBudgetParams to_link_budget(const RunConfig& cfg, double p_d_db, double p_r_db) {
    LinkBudgetParams p;
    p.p_t = db_to_linear(cfg.p_t_dbm);
    p.n_t = db_to_linear(cfg.n_t_dbm);
    p.n_r = db_to_linear(cfg.n_r_dbm);
    p.fading = FadingModel{db_to_linear(p_d_db), db_to_linear(p_r_db), cfg.t_r,
                           db_to_linear(cfg.p_s_db)};
    p.n_bins = cfg.n_bins;
    p.n_draws = cfg.draws;
    p.master_seed = cfg.master_seed;
    p.psd_mode = cfg.psd_mode;
    p.workers = cfg.workers;
    return p;
}

}  // namespace duplex
