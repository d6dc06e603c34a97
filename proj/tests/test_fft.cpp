#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "duplex/fft.hpp"
#include "helpers.hpp"

using duplex::cplx;

namespace {

std::vector<cplx> random_signal(std::size_t n, unsigned seed) {
    std::mt19937 gen(seed);
    std::normal_distribution<double> nd(0.0, 1.0);
    std::vector<cplx> x(n);
    for (auto& v : x) v = {nd(gen), nd(gen)};
    return x;
}

}  // namespace

TEST_CASE("forward/inverse DFT match the direct-sum oracle") {
    for (std::size_t n : {2u, 3u, 5u, 8u, 12u, 64u, 100u, 257u}) {
        const auto x = random_signal(n, 1234 + static_cast<unsigned>(n));
        const auto fwd = duplex::forward_dft(x);
        const auto inv = duplex::inverse_dft(x);
        const auto fwd_ref = oracle::direct_dft(x, -1);
        const auto inv_ref = oracle::direct_dft(x, +1);
        for (std::size_t k = 0; k < n; ++k) {
            REQUIRE(std::abs(fwd[k] - fwd_ref[k]) < 1e-9 * (1.0 + std::abs(fwd_ref[k])));
            REQUIRE(std::abs(inv[k] - inv_ref[k]) < 1e-9 * (1.0 + std::abs(inv_ref[k])));
        }
    }
}

TEST_CASE("inverse of forward recovers the signal") {
    for (std::size_t n : {4u, 6u, 31u, 128u}) {
        const auto x = random_signal(n, 99 + static_cast<unsigned>(n));
        auto y = duplex::inverse_dft(duplex::forward_dft(x));
        for (std::size_t k = 0; k < n; ++k) {
            y[k] /= static_cast<double>(n);
            REQUIRE(std::abs(y[k] - x[k]) < 1e-10 * (1.0 + std::abs(x[k])));
        }
    }
}
