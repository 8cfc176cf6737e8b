#pragma once

#include <numbers>

// All rates, detunings and Rabi amplitudes are stored internally as angular
// frequencies in rad/ns. Configuration files and CSV columns use ordinary
// frequencies in GHz; the conversion happens only at these boundaries.
namespace jcsim::units {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

inline constexpr double ghz_to_angular(double f_ghz) { return two_pi * f_ghz; }
inline constexpr double angular_to_ghz(double w_rad_ns) { return w_rad_ns / two_pi; }

inline constexpr double ps_to_ns(double t_ps) { return 1e-3 * t_ps; }
inline constexpr double ns_to_ps(double t_ns) { return 1e3 * t_ns; }

// Detected rates are kept in counts/ns internally; CSV columns are counts/s.
inline constexpr double per_ns_to_per_s(double r) { return 1e9 * r; }

} // namespace jcsim::units
