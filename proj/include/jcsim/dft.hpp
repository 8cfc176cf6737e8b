#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

// Plain O(N^2) discrete Fourier transform. Trace lengths here are a few
// hundred samples, where the direct sum is fast, dependency-free and exactly
// reproducible.
namespace jcsim::dft {

inline std::vector<std::complex<double>> forward(const std::vector<std::complex<double>>& x) {
    const std::size_t n = x.size();
    std::vector<std::complex<double>> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::complex<double> s = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double ph = -2.0 * std::numbers::pi * double(k) * double(j) / double(n);
            s += x[j] * std::complex<double>(std::cos(ph), std::sin(ph));
        }
        out[k] = s;
    }
    return out;
}

inline std::vector<std::complex<double>> inverse(const std::vector<std::complex<double>>& x) {
    const std::size_t n = x.size();
    std::vector<std::complex<double>> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::complex<double> s = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double ph = 2.0 * std::numbers::pi * double(k) * double(j) / double(n);
            s += x[j] * std::complex<double>(std::cos(ph), std::sin(ph));
        }
        out[k] = s / double(n);
    }
    return out;
}

/// Frequency of bin k for sample spacing dt (same time unit): cycles per unit.
/// Bins above n/2 alias to negative frequencies.
inline double bin_frequency(std::size_t k, std::size_t n, double dt) {
    const double f = double(k) / (double(n) * dt);
    return k <= n / 2 ? f : f - 1.0 / dt;
}

} // namespace jcsim::dft
