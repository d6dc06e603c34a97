// duplexctl: command-line front end for the full-duplex self-interference
// analysis library. Subcommands compose the library into channel-metric
// reports and sweep tables (.dat plot data).

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "duplex/duplex.hpp"

namespace {

using duplex::RunConfig;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) duplex::fail("FileNotFound", "cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) duplex::fail("FileWriteError", "cannot write: " + path);
    out << content;
}

duplex::FrequencyResponse load_response(const std::string& path) {
    const std::string text = read_file(path);
    auto ends_with = [&path](const char* suffix) {
        const std::string s(suffix);
        return path.size() >= s.size() && path.compare(path.size() - s.size(), s.size(), s) == 0;
    };
    if (ends_with(".s2p") || ends_with(".snp")) return duplex::parse_touchstone(text);
    if (ends_with(".csv")) return duplex::parse_csv(text);
    // No recognized extension: sniff. Touchstone files start with '!' or '#'.
    for (const auto& line : duplex::detail::split_lines(text)) {
        const std::string t = duplex::detail::trim(line);
        if (t.empty()) continue;
        if (t[0] == '!' || t[0] == '#') return duplex::parse_touchstone(text);
        break;
    }
    return duplex::parse_csv(text);
}

// Flags are collected as key=value strings and applied through RunConfig so
// precedence is uniform: defaults, then --config entries, then flags.
struct SubOpts {
    std::string config_path;
    std::map<std::string, std::string> overrides;

    RunConfig resolve() const {
        RunConfig cfg;
        if (!config_path.empty()) cfg.load_config_text(read_file(config_path));
        for (const auto& [k, v] : overrides) cfg.apply(k, v);
        return cfg;
    }
};

void add_flag(CLI::App* sub, SubOpts& opts, const std::string& flag, const std::string& key,
              const std::string& help) {
    sub->add_option_function<std::string>(
        flag, [&opts, key](const std::string& v) { opts.overrides[key] = v; }, help);
}

void add_common_flags(CLI::App* sub, SubOpts& opts) {
    sub->add_option("--config", opts.config_path, "key=value config file ('#' comments)");
    add_flag(sub, opts, "--seed", "seed", "master seed for Monte Carlo draws");
    add_flag(sub, opts, "--out", "out", "output .dat path (default: stdout)");
}

void add_mc_flags(CLI::App* sub, SubOpts& opts) {
    add_flag(sub, opts, "--draws", "draws", "Monte Carlo draws per point");
    add_flag(sub, opts, "--workers", "workers", "worker threads (results are worker-count independent)");
    add_flag(sub, opts, "--psd-mode", "psd_mode", "noise spectrum mode: sum | literal");
}

void emit(const RunConfig& cfg, const std::string& content) {
    if (cfg.out_path.empty())
        std::cout << content;
    else
        write_file(cfg.out_path, content);
}

std::string fmt(const char* pattern, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), pattern, v);
    return buf;
}

int cmd_analyze(const std::string& input, const RunConfig& cfg) {
    const auto resp = load_response(input);
    const auto report = duplex::analyze(resp, cfg.signal_bandwidth_hz, cfg.floor_margin_db,
                                        cfg.window_taps);
    std::cout << "source                      : " << resp.meta << ", "
              << resp.freqs_hz.size() << " points, "
              << fmt("%.6g", resp.freqs_hz.front() / 1e9) << "-"
              << fmt("%.6g", resp.freqs_hz.back() / 1e9) << " GHz\n"
              << "average passive suppression : " << fmt("%.2f", report.avg_suppression_db) << " dB\n"
              << "direct-path suppression     : " << fmt("%.2f", report.direct_path_suppression_db) << " dB\n"
              << "mean delay                  : " << fmt("%.4f", report.delay_stats.mean_delay_s * 1e9) << " ns\n"
              << "RMS delay spread            : " << fmt("%.4f", report.delay_stats.rms_delay_spread_s * 1e9) << " ns\n"
              << "coherence bandwidth         : " << fmt("%.4f", report.delay_stats.coherence_bw_hz / 1e6) << " MHz\n"
              << "required canceler taps      : " << report.required_taps
              << " (signal bandwidth " << fmt("%.6g", cfg.signal_bandwidth_hz / 1e6) << " MHz)\n"
              << "analysis bandwidth          : " << fmt("%.4f", report.analysis_bandwidth_hz / 1e6) << " MHz\n";

    if (!cfg.out_path.empty()) {
        duplex::SweepTable t;
        t.add_column("avg_suppression_dB", {report.avg_suppression_db});
        t.add_column("direct_path_suppression_dB", {report.direct_path_suppression_db});
        t.add_column("mean_delay_ns", {report.delay_stats.mean_delay_s * 1e9});
        t.add_column("rms_delay_spread_ns", {report.delay_stats.rms_delay_spread_s * 1e9});
        t.add_column("coherence_bw_MHz", {report.delay_stats.coherence_bw_hz / 1e6});
        t.add_column("required_taps", {static_cast<double>(report.required_taps)});
        t.add_column("analysis_bandwidth_MHz", {report.analysis_bandwidth_hz / 1e6});
        write_file(cfg.out_path, duplex::write_dat(t));
    }
    return 0;
}

int cmd_pdp(const std::string& input, const RunConfig& cfg) {
    const auto resp = load_response(input);
    const auto pdp = duplex::to_pdp(resp);
    duplex::SweepTable t;
    std::vector<double> delay_ns(pdp.powers.size());
    std::vector<double> power_db(pdp.powers.size());
    for (std::size_t k = 0; k < pdp.powers.size(); ++k) {
        delay_ns[k] = static_cast<double>(k) * pdp.delay_step_s * 1e9;
        // display floor at -300 dB so exact-zero taps stay plottable
        power_db[k] = duplex::linear_to_db(std::max(pdp.powers[k], 1e-30));
    }
    t.add_column("delay_ns", std::move(delay_ns));
    t.add_column("power_dB", std::move(power_db));
    const std::string header =
        "# delay_step_ns " + duplex::format_value(pdp.delay_step_s * 1e9) + "\n";
    emit(cfg, header + duplex::write_dat(t));
    return 0;
}

int cmd_model_sweep(const RunConfig& cfg) {
    const auto t_r_list = duplex::parse_count_list(cfg.tr_list);
    const auto drr_grid = duplex::parse_grid(cfg.drr_grid);
    const auto table = duplex::drr_sweep(t_r_list, drr_grid, cfg.model_delay_step_s);
    emit(cfg, duplex::write_dat(table));
    return 0;
}

int cmd_capacity_sweep(const RunConfig& cfg) {
    const auto pd_grid = duplex::parse_grid(cfg.pd_grid);
    const auto pr_list = duplex::parse_grid(cfg.pr_list);
    // p_direct/p_reflected are set per sweep point
    const auto base = duplex::to_link_budget(cfg, -40.0, -60.0);
    const auto table = duplex::capacity_sweep(base, pd_grid, pr_list);
    emit(cfg, duplex::write_dat(table));
    return 0;
}

int cmd_cancel_sweep(const RunConfig& cfg, double pr_db) {
    const auto pd_grid = duplex::parse_grid(cfg.pd_grid);
    const auto ntap_list = duplex::parse_count_list(cfg.ntap_list);
    const auto base = duplex::to_link_budget(cfg, -40.0, pr_db);
    const auto table = duplex::cancel_sweep(base, pd_grid, ntap_list);
    emit(cfg, duplex::write_dat(table));
    return 0;
}

int cmd_rates(const std::string& fd_path, const std::string& hd_path, const RunConfig& cfg) {
    const auto fd_log = duplex::parse_evm_log(read_file(fd_path), fd_path);
    const auto hd_log = duplex::parse_evm_log(read_file(hd_path), hd_path);
    const double r_fd = duplex::fd_rate(fd_log);
    const double r_hd = duplex::hd_rate(hd_log);
    const double gain = duplex::percent_improvement(r_fd, r_hd);
    std::cout << "R_FD        : " << fmt("%.4f", r_fd) << " b/s/Hz ("
              << fd_log.evm.size() << " packets)\n"
              << "R_HD        : " << fmt("%.4f", r_hd) << " b/s/Hz ("
              << hd_log.evm.size() << " packets)\n"
              << "improvement : " << fmt("%.2f", gain) << " %\n";
    if (!cfg.out_path.empty()) {
        duplex::SweepTable t;
        t.add_column("R_FD", {r_fd});
        t.add_column("R_HD", {r_hd});
        t.add_column("improvement_pct", {gain});
        write_file(cfg.out_path, duplex::write_dat(t));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"full-duplex self-interference channel analysis toolkit"};
    app.require_subcommand(1);

    SubOpts analyze_opts, pdp_opts, model_opts, cap_opts, cancel_opts, rates_opts;
    std::string analyze_input, pdp_input, rates_fd, rates_hd;
    std::string cancel_pr_db = "-60";

    auto* analyze = app.add_subcommand("analyze", "suppression / delay-spread report from a measured response");
    analyze->add_option("input", analyze_input, "Touchstone .s2p or freq_hz,real,imag .csv")->required();
    add_common_flags(analyze, analyze_opts);
    add_flag(analyze, analyze_opts, "--bandwidth-hz", "bandwidth_hz", "signal bandwidth for the tap count");
    add_flag(analyze, analyze_opts, "--floor-margin-db", "floor_margin_db", "noise-floor margin");
    add_flag(analyze, analyze_opts, "--window-taps", "window_taps", "direct-path search window");

    auto* pdp = app.add_subcommand("pdp", "power delay profile (delay_ns, power_dB) from a measured response");
    pdp->add_option("input", pdp_input, "Touchstone .s2p or freq_hz,real,imag .csv")->required();
    add_common_flags(pdp, pdp_opts);

    auto* model = app.add_subcommand("model-sweep", "two-level model: delay spread and coherence bandwidth vs DRR");
    add_common_flags(model, model_opts);
    add_flag(model, model_opts, "--drr-grid", "drr_grid", "DRR grid in dB, start:stop:step");
    add_flag(model, model_opts, "--tr-list", "tr_list", "reflection durations, comma list");
    add_flag(model, model_opts, "--delay-step", "delay_step_s", "model delay step in seconds");

    auto* cap = app.add_subcommand("capacity-sweep", "uplink capacity vs direct-path strength");
    add_common_flags(cap, cap_opts);
    add_mc_flags(cap, cap_opts);
    add_flag(cap, cap_opts, "--pd-grid", "pd_grid", "direct-path grid in dB, start:stop:step");
    add_flag(cap, cap_opts, "--pr-list", "pr_list", "reflected levels in dB, comma list");

    auto* cancel = app.add_subcommand("cancel-sweep", "passive suppression and active cancellation vs direct-path strength");
    add_common_flags(cancel, cancel_opts);
    add_mc_flags(cancel, cancel_opts);
    add_flag(cancel, cancel_opts, "--pd-grid", "pd_grid", "direct-path grid in dB, start:stop:step");
    add_flag(cancel, cancel_opts, "--ntap-list", "ntap_list", "canceler lengths, comma list");
    cancel->add_option("--pr-db", cancel_pr_db, "reflected level in dB");

    auto* rates = app.add_subcommand("rates", "achievable rates and improvement from EVM packet logs");
    rates->add_option("fd_log", rates_fd, "full-duplex EVM csv (header 'evm')")->required();
    rates->add_option("hd_log", rates_hd, "half-duplex EVM csv (header 'evm')")->required();
    add_common_flags(rates, rates_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*analyze) return cmd_analyze(analyze_input, analyze_opts.resolve());
        if (*pdp) return cmd_pdp(pdp_input, pdp_opts.resolve());
        if (*model) return cmd_model_sweep(model_opts.resolve());
        if (*cap) return cmd_capacity_sweep(cap_opts.resolve());
        if (*cancel) {
            auto pr = duplex::detail::parse_double(cancel_pr_db);
            if (!pr) duplex::fail("InvalidConfig", "bad --pr-db value: " + cancel_pr_db);
            return cmd_cancel_sweep(cancel_opts.resolve(), *pr);
        }
        if (*rates) return cmd_rates(rates_fd, rates_hd, rates_opts.resolve());
    } catch (const duplex::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
