#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "duplex/si_metrics.hpp"
#include "helpers.hpp"

using duplex::DelayStats;
using duplex::Error;
using duplex::FrequencyResponse;
using duplex::PowerDelayProfile;

namespace {

FrequencyResponse make_resp(const std::vector<std::complex<double>>& values,
                            double f0 = 2.4e9, double df = 4e3) {
    std::vector<double> freqs(values.size());
    for (std::size_t i = 0; i < freqs.size(); ++i)
        freqs[i] = f0 + df * static_cast<double>(i);
    return duplex::make_frequency_response(freqs, values, "synthetic");
}

FrequencyResponse response_from_taps(const oracle::cvec& taps, std::size_t n_points,
                                     double f0 = 2.4e9, double df = 4e3) {
    return make_resp(oracle::synthesize_response(taps, n_points), f0, df);
}

}  // namespace

TEST_CASE("average passive suppression") {
    const auto flat = make_resp(std::vector<std::complex<double>>(16, {0.01, 0.0}));
    REQUIRE(duplex::avg_passive_suppression(flat).db == Catch::Approx(40.0).margin(1e-12));

    const auto unit = make_resp(std::vector<std::complex<double>>(8, {1.0, 0.0}));
    REQUIRE(duplex::avg_passive_suppression(unit).db == Catch::Approx(0.0).margin(1e-12));

    const auto two = make_resp({{0.1, 0.0}, {0.001, 0.0}});
    const double expected_db = 10.0 * std::log10(1.0 / ((0.01 + 1e-6) / 2.0));
    REQUIRE(duplex::avg_passive_suppression(two).ratio ==
            Catch::Approx(1.0 / 5.0005e-3).epsilon(1e-12));
    REQUIRE(duplex::avg_passive_suppression(two).db ==
            Catch::Approx(expected_db).margin(1e-12));

    const auto zero = make_resp(std::vector<std::complex<double>>(4, {0.0, 0.0}));
    REQUIRE_THROWS_AS(duplex::avg_passive_suppression(zero), Error);
}

TEST_CASE("pdp of flat and pure-delay responses") {
    const std::size_t n = 32;
    const auto flat = make_resp(std::vector<std::complex<double>>(n, {1.0, 0.0}));
    const auto pdp = duplex::to_pdp(flat);
    REQUIRE(pdp.powers.size() == n);
    REQUIRE(pdp.powers[0] == Catch::Approx(1.0).margin(1e-12));
    for (std::size_t k = 1; k < n; ++k) REQUIRE(pdp.powers[k] < 1e-24);

    // H_n = e^{-j2pi*3n/N} is a pure delay of three taps
    std::vector<std::complex<double>> delayed(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double ang = -2.0 * std::numbers::pi * 3.0 * static_cast<double>(i) /
                           static_cast<double>(n);
        delayed[i] = {std::cos(ang), std::sin(ang)};
    }
    const auto pdp3 = duplex::to_pdp(make_resp(delayed));
    for (std::size_t k = 0; k < n; ++k) {
        if (k == 3)
            REQUIRE(pdp3.powers[k] == Catch::Approx(1.0).margin(1e-12));
        else
            REQUIRE(pdp3.powers[k] < 1e-20);
    }
}

TEST_CASE("pdp recovers forward-synthesized taps") {
    const std::size_t n = 64;
    const auto resp = response_from_taps({{0.8, 0.0}, {0.0, 0.0}, {0.2, 0.0}}, n);
    const auto pdp = duplex::to_pdp(resp);
    REQUIRE(pdp.powers[0] == Catch::Approx(0.64).margin(1e-12));
    REQUIRE(pdp.powers[2] == Catch::Approx(0.04).margin(1e-12));
    for (std::size_t k = 0; k < n; ++k)
        if (k != 0 && k != 2) REQUIRE(pdp.powers[k] < 1e-12);

    // delay resolution is 1/(N * df)
    REQUIRE(pdp.delay_step_s == Catch::Approx(1.0 / (64.0 * 4e3)).epsilon(1e-12));
}

TEST_CASE("pdp truncation and argument checks") {
    const auto resp = make_resp(std::vector<std::complex<double>>(16, {1.0, 0.0}));
    REQUIRE(duplex::to_pdp(resp, 4).powers.size() == 4);
    REQUIRE_THROWS_AS(duplex::to_pdp(resp, 17), Error);
}

TEST_CASE("Parseval: pdp total power equals mean squared magnitude") {
    std::mt19937 gen(3);
    std::normal_distribution<double> nd(0.0, 1.0);
    for (std::size_t n : {5u, 16u, 33u, 100u}) {
        std::vector<std::complex<double>> values(n);
        for (auto& v : values) v = {nd(gen), nd(gen)};
        const auto resp = make_resp(values);
        const auto pdp = duplex::to_pdp(resp);
        double total = 0.0;
        for (double p : pdp.powers) total += p;
        const double alpha = duplex::avg_passive_suppression(resp).ratio;
        REQUIRE(alpha * total == Catch::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("denoise keeps clean profiles and strips the noise floor") {
    // noiseless two-tap profile inside a longer vector: tail median is zero
    PowerDelayProfile clean{{0.64, 0.0, 0.04, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, 1e-9};
    const auto kept = duplex::denoise_pdp(clean, 6.0);
    REQUIRE(kept.powers == clean.powers);

    std::vector<double> noisy(50, 1e-9);
    noisy[0] = 1.0;
    const auto cleaned = duplex::denoise_pdp({noisy, 1e-9}, 6.0);
    REQUIRE(cleaned.powers[0] == 1.0);
    for (std::size_t k = 1; k < cleaned.powers.size(); ++k) REQUIRE(cleaned.powers[k] == 0.0);

    // degenerate all-equal profile: global max (lowest index) survives
    const auto flat = duplex::denoise_pdp({std::vector<double>(20, 0.5), 1e-9}, 6.0);
    REQUIRE(flat.powers[0] == 0.5);
    double total = 0.0;
    for (double p : flat.powers) total += p;
    REQUIRE(total > 0.0);
}

TEST_CASE("delay stats on named cases") {
    const auto single = duplex::delay_stats({{1.0, 0.0, 0.0}, 1.0});
    REQUIRE(single.mean_delay_s == 0.0);
    REQUIRE(single.rms_delay_spread_s == 0.0);
    REQUIRE(std::isinf(single.coherence_bw_hz));

    const auto pair = duplex::delay_stats({{0.5, 0.5}, 1.0});
    REQUIRE(pair.mean_delay_s == Catch::Approx(0.5).margin(1e-15));
    REQUIRE(pair.rms_delay_spread_s == Catch::Approx(0.5).margin(1e-15));
    REQUIRE(pair.coherence_bw_hz == Catch::Approx(0.04).margin(1e-15));

    // two-level profile, 25 dB direct over 5 dB reflected, 20 taps
    std::vector<double> two_level(20, std::pow(10.0, 0.5));
    two_level[0] = std::pow(10.0, 2.5);
    const auto st = duplex::delay_stats({two_level, 1.0});
    const auto ref = oracle::brute_force_moments(two_level, 1.0);
    REQUIRE(st.rms_delay_spread_s == Catch::Approx(ref.sigma).epsilon(1e-12));
    REQUIRE(st.rms_delay_spread_s == Catch::Approx(4.2670).margin(5e-4));
    REQUIRE(st.coherence_bw_hz == Catch::Approx(0.02 / 4.2670).margin(5e-5));

    REQUIRE_THROWS_AS(duplex::delay_stats({{0.0, 0.0}, 1.0}), Error);
}

TEST_CASE("delay stats match brute-force moments on random profiles") {
    std::mt19937 gen(17);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(u(gen) * 60);
        std::vector<double> p(n);
        for (auto& v : p) v = u(gen) < 0.3 ? 0.0 : std::pow(10.0, -6.0 * u(gen));
        p[static_cast<std::size_t>(u(gen) * static_cast<double>(n - 1))] = 0.5;
        const double dt = std::pow(10.0, -9.0 * u(gen));
        const auto st = duplex::delay_stats({p, dt});
        const auto ref = oracle::brute_force_moments(p, dt);
        REQUIRE(st.mean_delay_s == Catch::Approx(ref.mean).epsilon(1e-12).margin(1e-300));
        REQUIRE(st.rms_delay_spread_s == Catch::Approx(ref.sigma).epsilon(1e-12).margin(1e-300));
    }
}

TEST_CASE("delay stats scale invariance and shift covariance") {
    std::mt19937 gen(23);
    std::uniform_real_distribution<double> u(0.01, 1.0);
    std::vector<double> p(24);
    for (auto& v : p) v = u(gen);
    const auto base = duplex::delay_stats({p, 2.5e-9});

    // binary-power scalings leave every weight bit-identical
    for (double c : {0.5, 2.0, 4096.0, 0x1.0p-40}) {
        auto scaled = p;
        for (auto& v : scaled) v *= c;
        const auto st = duplex::delay_stats({scaled, 2.5e-9});
        REQUIRE(st.mean_delay_s == base.mean_delay_s);
        REQUIRE(st.rms_delay_spread_s == base.rms_delay_spread_s);
    }
    // other scalings round the scaled powers; invariant to ~1 ulp
    for (double c : {1e-6, 3.0, 1e9}) {
        auto scaled = p;
        for (auto& v : scaled) v *= c;
        const auto st = duplex::delay_stats({scaled, 2.5e-9});
        REQUIRE(st.mean_delay_s == Catch::Approx(base.mean_delay_s).epsilon(1e-14));
        REQUIRE(st.rms_delay_spread_s == Catch::Approx(base.rms_delay_spread_s).epsilon(1e-14));
    }

    for (std::size_t z : {1u, 5u}) {
        std::vector<double> shifted(z, 0.0);
        shifted.insert(shifted.end(), p.begin(), p.end());
        const auto st = duplex::delay_stats({shifted, 2.5e-9});
        REQUIRE(st.mean_delay_s ==
                Catch::Approx(base.mean_delay_s + static_cast<double>(z) * 2.5e-9).epsilon(1e-12));
        REQUIRE(st.rms_delay_spread_s ==
                Catch::Approx(base.rms_delay_spread_s).epsilon(1e-12));
    }
}

TEST_CASE("direct-path suppression picks the strongest early tap") {
    REQUIRE(duplex::direct_path_suppression_db({{1e-4, 0.0, 0.0, 0.0, 0.0}, 1.0}) ==
            Catch::Approx(40.0).margin(1e-12));
    REQUIRE(duplex::direct_path_suppression_db({{1e-6, 1e-4, 1e-8, 0.0, 1.0}, 1.0}, 4) ==
            Catch::Approx(40.0).margin(1e-12));
    // regression on a synthetic strongest-early-tap at -45.3 dB
    const double g = std::pow(10.0, -4.53);
    REQUIRE(duplex::direct_path_suppression_db({{g * 0.5, g, 1e-9, 1e-9, 1e-3}, 1.0}, 4) ==
            Catch::Approx(45.3).margin(1e-9));
    // invariant to taps outside the window
    PowerDelayProfile pdp{{1e-4, 1e-6, 1e-6, 1e-6, 0.0, 0.0}, 1.0};
    auto changed = pdp;
    changed.powers[4] = 10.0;
    changed.powers[5] = 1e-12;
    REQUIRE(duplex::direct_path_suppression_db(pdp, 4) ==
            duplex::direct_path_suppression_db(changed, 4));
    REQUIRE_THROWS_AS(duplex::direct_path_suppression_db({{0.0, 0.0, 1.0}, 1.0}, 2), Error);
}

TEST_CASE("required taps from coherence and signal bandwidth") {
    REQUIRE(duplex::required_taps(20e6, 20e6) == 1);
    REQUIRE(duplex::required_taps(0.7e6, 20e6) == 29);
    REQUIRE(duplex::required_taps(2.5e6, 20e6) == 8);
    REQUIRE(duplex::required_taps(std::numeric_limits<double>::infinity(), 20e6) == 1);
    REQUIRE_THROWS_AS(duplex::required_taps(0.0, 20e6), Error);
    REQUIRE_THROWS_AS(duplex::required_taps(1e6, 0.0), Error);

    // monotone: non-increasing in coherence bw, non-decreasing in signal bw
    std::size_t prev = duplex::required_taps(0.1e6, 20e6);
    for (double bc = 0.2e6; bc < 30e6; bc += 0.1e6) {
        const std::size_t cur = duplex::required_taps(bc, 20e6);
        REQUIRE(cur <= prev);
        prev = cur;
    }
    prev = duplex::required_taps(1e6, 0.5e6);
    for (double b = 1e6; b < 50e6; b += 0.5e6) {
        const std::size_t cur = duplex::required_taps(1e6, b);
        REQUIRE(cur >= prev);
        prev = cur;
    }
}

TEST_CASE("analyze composes the metric chain") {
    const auto flat = make_resp(std::vector<std::complex<double>>(64, {0.01, 0.0}));
    const auto report = duplex::analyze(flat, 20e6);
    REQUIRE(report.avg_suppression_db == Catch::Approx(40.0).margin(1e-9));
    REQUIRE(report.direct_path_suppression_db == Catch::Approx(40.0).margin(1e-9));
    REQUIRE(report.delay_stats.rms_delay_spread_s == 0.0);
    REQUIRE(std::isinf(report.delay_stats.coherence_bw_hz));
    REQUIRE(report.required_taps == 1);

    // two-tap synthetic channel: fields equal the individually computed ones
    const auto resp = response_from_taps({{0.02, 0.0}, {0.0, 0.01}}, 128);
    const auto r = duplex::analyze(resp, 20e6, 6.0, 4);
    const auto pdp = duplex::denoise_pdp(duplex::to_pdp(resp), 6.0);
    const auto st = duplex::delay_stats(pdp);
    REQUIRE(r.avg_suppression_db ==
            Catch::Approx(duplex::avg_passive_suppression(resp).db).margin(1e-12));
    REQUIRE(r.direct_path_suppression_db ==
            Catch::Approx(duplex::direct_path_suppression_db(pdp, 4)).margin(1e-12));
    REQUIRE(r.delay_stats.rms_delay_spread_s == Catch::Approx(st.rms_delay_spread_s));
    REQUIRE(r.required_taps == duplex::required_taps(st.coherence_bw_hz, 20e6));

    const auto zero = make_resp(std::vector<std::complex<double>>(8, {0.0, 0.0}));
    REQUIRE_THROWS_AS(duplex::analyze(zero, 20e6), Error);
}
