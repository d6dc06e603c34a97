#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "duplex/detail/text.hpp"
#include "duplex/error.hpp"
#include "duplex/frequency_response.hpp"

namespace duplex {

namespace detail {

inline double touchstone_unit_scale(const std::string& unit_upper) {
    if (unit_upper == "HZ") return 1.0;
    if (unit_upper == "KHZ") return 1e3;
    if (unit_upper == "MHZ") return 1e6;
    if (unit_upper == "GHZ") return 1e9;
    fail("MalformedRow", "unknown frequency unit in option line: " + unit_upper);
}

enum class TsFormat { ri, ma, db };

inline TsFormat touchstone_format(const std::string& fmt_upper) {
    if (fmt_upper == "RI") return TsFormat::ri;
    if (fmt_upper == "MA") return TsFormat::ma;
    if (fmt_upper == "DB") return TsFormat::db;
    fail("MalformedRow", "unknown data format in option line: " + fmt_upper);
}

inline std::complex<double> decode_pair(double a, double b, TsFormat fmt) {
    constexpr double deg = std::numbers::pi / 180.0;
    switch (fmt) {
        case TsFormat::ri: return {a, b};
        case TsFormat::ma: return std::polar(a, b * deg);
        case TsFormat::db: return std::polar(std::pow(10.0, a / 20.0), b * deg);
    }
    fail("MalformedRow", "unreachable format");
}

}  // namespace detail

/// Parses a Touchstone v1 two-port file and returns its S21 column as a
/// FrequencyResponse (frequencies in Hz, values complex linear).
///
/// Supported subset: '!' comments (whole-line or trailing), exactly one
/// option line '# <freq-unit> S <RI|MA|DB> R <ohms>', and data rows of nine
/// numeric fields: freq, then S11, S21, S12, S22 as (re,im) / (mag,angle) /
/// (dB,angle) pairs. All four parameters are validated; only S21 is kept.
inline FrequencyResponse parse_touchstone(const std::string& text) {
    using namespace detail;

    bool have_options = false;
    TsFormat fmt = TsFormat::ma;
    double freq_scale = 1e9;
    std::string fmt_name;
    std::string unit_name;

    std::vector<double> freqs;
    std::vector<std::complex<double>> s21;

    for (const std::string& raw : split_lines(text)) {
        std::string line = raw;
        if (auto bang = line.find('!'); bang != std::string::npos) line.resize(bang);
        line = trim(line);
        if (line.empty()) continue;

        if (line[0] == '#') {
            if (have_options) fail("MalformedRow", "multiple option lines");
            auto toks = split_ws(line.substr(1));
            if (toks.size() != 5)
                fail("MalformedRow", "option line must read '# <unit> S <RI|MA|DB> R <ohms>'");
            const std::string param = to_upper(toks[1]);
            if (param != "S")
                fail("UnsupportedParameter", "only S-parameter files are supported, got: " + param);
            if (to_upper(toks[3]) != "R" || !parse_double(toks[4]))
                fail("MalformedRow", "bad reference-impedance clause in option line");
            unit_name = to_upper(toks[0]);
            fmt_name = to_upper(toks[2]);
            freq_scale = touchstone_unit_scale(unit_name);
            fmt = touchstone_format(fmt_name);
            have_options = true;
            continue;
        }

        if (!have_options) fail("MissingOptionLine", "data before '#' option line");

        auto toks = split_ws(line);
        if (toks.size() != 9)
            fail("MalformedRow", "expected 9 numeric fields, got " + std::to_string(toks.size()));
        double f[9];
        for (std::size_t i = 0; i < 9; ++i) {
            auto v = parse_double(toks[i]);
            if (!v) fail("MalformedRow", "non-numeric field: " + toks[i]);
            f[i] = *v;
        }
        // Two-port row order: freq, S11, S21, S12, S22.
        decode_pair(f[1], f[2], fmt);
        decode_pair(f[5], f[6], fmt);
        decode_pair(f[7], f[8], fmt);
        freqs.push_back(f[0] * freq_scale);
        s21.push_back(decode_pair(f[3], f[4], fmt));
    }

    if (!have_options) fail("MissingOptionLine", "no '#' option line found");
    if (freqs.empty()) fail("MalformedRow", "no data rows");
    if (freqs.size() < 2) fail("MalformedRow", "need at least 2 data rows");

    return make_frequency_response(std::move(freqs), std::move(s21),
                                   "touchstone S21 (" + unit_name + "/" + fmt_name + ")");
}

}  // namespace duplex
