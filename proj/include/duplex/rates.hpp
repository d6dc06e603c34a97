#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "duplex/detail/text.hpp"
#include "duplex/error.hpp"

namespace duplex {

// Per-packet average EVM values from a prototype run.
struct PacketLog {
    std::vector<double> evm;
    std::string label;
};

/// SNR = 1 / EVM^2.
inline double evm_to_snr(double evm) {
    if (!(evm > 0.0)) fail("NonPositiveEvm", "EVM must be > 0");
    return 1.0 / (evm * evm);
}

/// Average full-duplex achievable rate over packets: mean log2(1 + SSINR).
inline double fd_rate(const PacketLog& log) {
    if (log.evm.empty()) fail("InvalidArgument", "empty packet log");
    double acc = 0.0;
    for (double e : log.evm) acc += std::log2(1.0 + evm_to_snr(e));
    return acc / static_cast<double>(log.evm.size());
}

/// Average half-duplex achievable rate: mean (1/2) log2(1 + SNR), the 1/2
/// accounting for even time sharing with the downlink.
inline double hd_rate(const PacketLog& log) {
    if (log.evm.empty()) fail("InvalidArgument", "empty packet log");
    double acc = 0.0;
    for (double e : log.evm) acc += 0.5 * std::log2(1.0 + evm_to_snr(e));
    return acc / static_cast<double>(log.evm.size());
}

inline double percent_improvement(double fd, double hd) {
    if (!(hd > 0.0)) fail("InvalidArgument", "half-duplex rate must be > 0");
    // divide before scaling so a doubled rate maps to exactly 100
    return 100.0 * ((fd - hd) / hd);
}

/// Parses an EVM log: header 'evm', one positive value per row.
inline PacketLog parse_evm_log(const std::string& text, std::string label) {
    using namespace detail;
    auto lines = split_lines(text);
    std::size_t i = 0;
    while (i < lines.size() && trim(lines[i]).empty()) ++i;
    if (i == lines.size() || trim(lines[i]) != "evm")
        fail("BadHeader", "expected header 'evm'");
    ++i;

    PacketLog log;
    log.label = std::move(label);
    for (; i < lines.size(); ++i) {
        const std::string line = trim(lines[i]);
        if (line.empty()) continue;
        auto v = parse_double(line);
        if (!v) fail("MalformedRow", "non-numeric EVM value: " + line);
        if (!(*v > 0.0) || !std::isfinite(*v)) fail("NonPositiveEvm", "EVM must be finite and > 0");
        log.evm.push_back(*v);
    }
    if (log.evm.empty()) fail("MalformedRow", "zero data rows");
    return log;
}

}  // namespace duplex
