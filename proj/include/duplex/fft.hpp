#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <vector>

#include "duplex/error.hpp"

namespace duplex {

using cplx = std::complex<double>;

namespace detail {

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

// In-place iterative radix-2 transform, unnormalized.
// sign = -1: X_k = sum_n x_n e^{-j2pikn/N}; sign = +1 is the conjugate kernel.
inline void fft_pow2(std::vector<cplx>& a, int sign) {
    const std::size_t n = a.size();
    if (n < 2) return;
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
        const cplx wlen(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            cplx w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                cplx u = a[i + k];
                cplx v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

// Chirp phase e^{j*sign*pi*k^2/n} with the quadratic reduced mod 2n so the
// trig argument stays in [0, 2pi) even for large transform sizes.
inline cplx chirp(std::uint64_t k, std::uint64_t n, int sign) {
    const std::uint64_t m = (k * k) % (2 * n);
    const double ang = sign * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n);
    return {std::cos(ang), std::sin(ang)};
}

// Bluestein's algorithm: arbitrary-length DFT as a convolution of two
// power-of-two FFTs. Unnormalized, same kernel convention as fft_pow2.
inline std::vector<cplx> fft_bluestein(const std::vector<cplx>& x, int sign) {
    const std::size_t n = x.size();
    const std::size_t m = next_pow2(2 * n - 1);
    std::vector<cplx> a(m, cplx(0.0, 0.0));
    std::vector<cplx> b(m, cplx(0.0, 0.0));
    for (std::size_t k = 0; k < n; ++k) {
        a[k] = x[k] * chirp(k, n, sign);
        b[k] = chirp(k, n, -sign);
    }
    for (std::size_t k = 1; k < n; ++k) b[m - k] = b[k];
    fft_pow2(a, -1);
    fft_pow2(b, -1);
    for (std::size_t k = 0; k < m; ++k) a[k] *= b[k];
    fft_pow2(a, +1);
    std::vector<cplx> out(n);
    const double scale = 1.0 / static_cast<double>(m);
    for (std::size_t k = 0; k < n; ++k) out[k] = a[k] * scale * chirp(k, n, sign);
    return out;
}

}  // namespace detail

/// Unnormalized DFT: X_k = sum_n x_n e^{-j2pikn/N}.
inline std::vector<cplx> forward_dft(std::vector<cplx> x) {
    if (x.empty()) fail("InvalidArgument", "forward_dft: empty input");
    if (detail::is_pow2(x.size())) {
        detail::fft_pow2(x, -1);
        return x;
    }
    return detail::fft_bluestein(x, -1);
}

/// Unnormalized inverse kernel: y_k = sum_n x_n e^{+j2pikn/N}.
/// Callers that want the inverse transform scale by 1/N.
inline std::vector<cplx> inverse_dft(std::vector<cplx> x) {
    if (x.empty()) fail("InvalidArgument", "inverse_dft: empty input");
    if (detail::is_pow2(x.size())) {
        detail::fft_pow2(x, +1);
        return x;
    }
    return detail::fft_bluestein(x, +1);
}

}  // namespace duplex
