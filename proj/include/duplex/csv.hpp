#pragma once

#include <complex>
#include <string>
#include <vector>

#include "duplex/detail/text.hpp"
#include "duplex/error.hpp"
#include "duplex/frequency_response.hpp"

namespace duplex {

/// Parses 'freq_hz,real,imag' CSV into a validated FrequencyResponse.
inline FrequencyResponse parse_csv(const std::string& text) {
    using namespace detail;

    auto lines = split_lines(text);
    std::size_t i = 0;
    while (i < lines.size() && trim(lines[i]).empty()) ++i;
    if (i == lines.size() || trim(lines[i]) != "freq_hz,real,imag")
        fail("BadHeader", "expected header 'freq_hz,real,imag'");
    ++i;

    std::vector<double> freqs;
    std::vector<std::complex<double>> values;
    for (; i < lines.size(); ++i) {
        const std::string line = trim(lines[i]);
        if (line.empty()) continue;
        auto toks = split_on(line, ',');
        if (toks.size() != 3)
            fail("MalformedRow", "expected 3 fields, got " + std::to_string(toks.size()));
        double v[3];
        for (std::size_t k = 0; k < 3; ++k) {
            auto p = parse_double(toks[k]);
            if (!p) fail("MalformedRow", "non-numeric field: " + toks[k]);
            v[k] = *p;
        }
        freqs.push_back(v[0]);
        values.emplace_back(v[1], v[2]);
    }
    if (freqs.empty()) fail("MalformedRow", "zero data rows");
    if (freqs.size() < 2) fail("MalformedRow", "need at least 2 data rows");

    return make_frequency_response(std::move(freqs), std::move(values), "csv");
}

/// CSV rendering of a FrequencyResponse in the same 'freq_hz,real,imag'
/// schema parse_csv accepts.
inline std::string write_csv(const FrequencyResponse& resp) {
    std::string out = "freq_hz,real,imag\n";
    char buf[128];
    for (std::size_t k = 0; k < resp.freqs_hz.size(); ++k) {
        std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g\n", resp.freqs_hz[k],
                      resp.values[k].real(), resp.values[k].imag());
        out += buf;
    }
    return out;
}

}  // namespace duplex
