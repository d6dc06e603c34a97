#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <span>
#include <thread>
#include <utility>
#include <vector>

#include "duplex/error.hpp"

namespace duplex {

struct MeanStdError {
    double mean = 0.0;
    double std_error = 0.0;
};

/// Evaluates fn(draw_index) for draw_index in [0, n_draws), fanned out over
/// contiguous index chunks. Results land in a vector indexed by draw, so the
/// output is identical for any worker count; reductions over it are ordered.
template <typename Fn>
std::vector<double> mc_collect(std::uint64_t n_draws, unsigned workers, Fn&& fn) {
    if (n_draws == 0) fail("InvalidArgument", "need at least one draw");
    std::vector<double> out(n_draws);
    if (workers <= 1 || n_draws == 1) {
        for (std::uint64_t i = 0; i < n_draws; ++i) out[i] = fn(i);
        return out;
    }
    const unsigned w = static_cast<unsigned>(
        std::min<std::uint64_t>(workers, n_draws));
    std::vector<std::exception_ptr> errors(w);
    std::vector<std::thread> pool;
    pool.reserve(w);
    for (unsigned t = 0; t < w; ++t) {
        const std::uint64_t lo = n_draws * t / w;
        const std::uint64_t hi = n_draws * (t + 1) / w;
        pool.emplace_back([&, t, lo, hi] {
            try {
                for (std::uint64_t i = lo; i < hi; ++i) out[i] = fn(i);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

inline MeanStdError mean_std_error(std::span<const double> samples) {
    const std::size_t n = samples.size();
    double mean = 0.0;
    for (double v : samples) mean += v;
    mean /= static_cast<double>(n);
    if (n < 2) return {mean, 0.0};
    double ss = 0.0;
    for (double v : samples) {
        const double d = v - mean;
        ss += d * d;
    }
    const double var = ss / static_cast<double>(n - 1);
    return {mean, std::sqrt(var / static_cast<double>(n))};
}

}  // namespace duplex
