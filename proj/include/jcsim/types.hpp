#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace jcsim {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr Complex I{0.0, 1.0};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Physical rates of the emitter-cavity system, angular frequencies in rad/ns.
struct RateSet {
    double g;      // emitter-cavity coupling
    double kappa;  // cavity photon decay
    double gamma;  // emitter decay into non-cavity modes

    RateSet(double g_, double kappa_, double gamma_) : g(g_), kappa(kappa_), gamma(gamma_) {
        if (!(g > 0.0) || !(kappa > 0.0) || !(gamma > 0.0))
            throw ConfigError("RateSet: g, kappa, gamma must all be positive");
    }

    double cooperativity() const { return 2.0 * g * g / (kappa * gamma); }
    double beta_factor() const {
        const double c = cooperativity();
        return 2.0 * c / (2.0 * c + 1.0);
    }
};

/// Laser and cavity detunings relative to the bare emitter (omega_0 == 0).
struct DetuningSpec {
    double delta_C = 0.0;  // omega_C - omega_0
    double delta_L = 0.0;  // omega_L - omega_0
};

inline double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

inline bool is_hermitian(const CMatrix& m, double tol = 1e-12) {
    return max_abs(m - m.adjoint()) < tol;
}

} // namespace jcsim
