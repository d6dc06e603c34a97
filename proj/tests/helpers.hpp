#pragma once

// Test-only oracles, kept independent of the library implementations they
// check: direct-sum DFT, brute-force profile moments, exponential integral,
// and a reader for the .dat table format.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace oracle {

using cvec = std::vector<std::complex<double>>;

// O(N^2) direct evaluation of sum_n x_n e^{j*sign*2pi*k*n/N}.
inline cvec direct_dft(const cvec& x, int sign) {
    const std::size_t n = x.size();
    cvec out(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::complex<double> acc(0.0, 0.0);
        for (std::size_t m = 0; m < n; ++m) {
            const double ang = sign * 2.0 * std::numbers::pi *
                               static_cast<double>(k) * static_cast<double>(m) /
                               static_cast<double>(n);
            acc += x[m] * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        out[k] = acc;
    }
    return out;
}

// Frequency response synthesized from taps by the forward kernel
// H_n = sum_k h_k e^{-j2pi*k*n/N}, on a uniform grid starting at f0.
inline cvec synthesize_response(const cvec& taps, std::size_t n_points) {
    cvec padded(n_points, {0.0, 0.0});
    for (std::size_t k = 0; k < taps.size(); ++k) padded[k] = taps[k];
    return direct_dft(padded, -1);
}

struct Moments {
    double mean = 0.0;
    double sigma = 0.0;
};

// Two-pass weighted moments over tau_k = k * dt.
inline Moments brute_force_moments(const std::vector<double>& powers, double dt) {
    double total = 0.0;
    for (double p : powers) total += p;
    double mean = 0.0;
    for (std::size_t k = 0; k < powers.size(); ++k)
        mean += static_cast<double>(k) * dt * powers[k] / total;
    double var = 0.0;
    for (std::size_t k = 0; k < powers.size(); ++k) {
        const double d = static_cast<double>(k) * dt - mean;
        var += d * d * powers[k] / total;
    }
    return {mean, std::sqrt(var)};
}

// Exponential integral E1(x), x > 0: series for small x, continued fraction
// otherwise (Abramowitz & Stegun 5.1.11 / 5.1.22).
inline double expint_e1(double x) {
    constexpr double euler_gamma = 0.57721566490153286060;
    if (x <= 1.0) {
        double sum = -euler_gamma - std::log(x);
        double term = 1.0;
        for (int k = 1; k <= 60; ++k) {
            term *= -x / k;
            sum -= term / k;
        }
        return sum;
    }
    // modified Lentz continued fraction
    double b = x + 1.0;
    double c = 1e308;
    double d = 1.0 / b;
    double h = d;
    for (int k = 1; k <= 200; ++k) {
        const double a = -static_cast<double>(k) * static_cast<double>(k);
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        const double delta = c * d;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-15) break;
    }
    return h * std::exp(-x);
}

// E[log2(1 + a X)] for X ~ Exp(1): e^{1/a} E1(1/a) / ln 2.
inline double rayleigh_log_capacity(double a) {
    return std::exp(1.0 / a) * expint_e1(1.0 / a) / std::numbers::ln2;
}

struct DatTable {
    std::vector<std::string> names;
    std::vector<std::vector<double>> columns;
};

// Reads the whitespace table format back ('#' comment lines skipped).
inline DatTable read_dat(const std::string& text) {
    DatTable t;
    std::istringstream in(text);
    std::string line;
    bool header_done = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        if (!header_done) {
            std::string name;
            while (row >> name) t.names.push_back(name);
            t.columns.resize(t.names.size());
            header_done = true;
            continue;
        }
        double v;
        std::size_t c = 0;
        while (row >> v) t.columns.at(c++).push_back(v);
    }
    return t;
}

inline std::size_t dat_column(const DatTable& t, const std::string& name) {
    for (std::size_t i = 0; i < t.names.size(); ++i)
        if (t.names[i] == name) return i;
    throw std::runtime_error("no such column: " + name);
}

}  // namespace oracle
