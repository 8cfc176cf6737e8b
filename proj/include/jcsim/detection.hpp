#pragma once

#include <cmath>
#include <vector>

#include "jcsim/hilbert.hpp"
#include "jcsim/liouvillian.hpp"
#include "jcsim/types.hpp"

// Laser-background admixture and the non-photon-number-resolving detector
// pair. The background enters through a beam-splitter c = sqrt(eta) a
// - i sqrt(1-eta) b with b in a coherent state; since b is coherent and
// independent, every normally-ordered, time-ordered correlator of c equals
// the same correlator of the displaced system operator
//   a_eff = sqrt(eta) a - i sqrt(1-eta) alpha 1.
namespace jcsim::detection {

enum class BackgroundMode { off, fixed_sbr, power_proportional };

struct BackgroundModel {
    BackgroundMode mode = BackgroundMode::off;
    double eta = 1.0;        // transmission; 1/(1-eta) is the signal-to-background ratio
    Complex alpha = 0.0;     // coherent background amplitude
    double eta2 = 1e-9;      // second-splitter transmission (power-proportional mode)
    double power_coeff = 1000.0;

    static BackgroundModel off_model() { return {}; }

    static BackgroundModel fixed_sbr(double sbr, double phase_rad = 0.0) {
        if (!(sbr > 1.0)) throw ConfigError("BackgroundModel: SBR must exceed 1");
        BackgroundModel bg;
        bg.mode = BackgroundMode::fixed_sbr;
        bg.eta = 1.0 - 1.0 / sbr;
        bg.alpha = std::polar(0.0, phase_rad);  // magnitude set by a reference occupation
        return bg;
    }

    static BackgroundModel power_proportional(double eta2, double coeff = 1000.0,
                                              double phase_rad = 0.0) {
        BackgroundModel bg;
        bg.mode = BackgroundMode::power_proportional;
        bg.eta = 0.999;
        bg.eta2 = eta2;
        bg.power_coeff = coeff;
        bg.alpha = std::polar(0.0, phase_rad);
        return bg;
    }

    double sbr() const { return 1.0 / (1.0 - eta); }

    /// Fixed-SBR convention: |alpha|^2 equals the photon occupation of the
    /// background-free system driven on resonance.
    BackgroundModel with_reference_occupation(double nbar) const {
        BackgroundModel bg = *this;
        bg.alpha = std::polar(std::sqrt(std::max(nbar, 0.0)), std::arg(alpha));
        return bg;
    }

    /// Power-proportional convention: alpha = sqrt(coeff * P * eta2).
    BackgroundModel with_power(double power_nw) const {
        BackgroundModel bg = *this;
        bg.alpha = std::polar(std::sqrt(power_coeff * power_nw * eta2), std::arg(alpha));
        return bg;
    }
};

/// Effective detection operator after the background beam-splitter.
inline CMatrix displaced_operator(const CMatrix& a, const BackgroundModel& bg) {
    if (!std::isfinite(std::abs(bg.alpha)))
        throw ConfigError("displaced_operator: non-finite background amplitude");
    if (bg.mode == BackgroundMode::off) return a;
    const CMatrix id = CMatrix::Identity(a.rows(), a.cols());
    return std::sqrt(bg.eta) * a - I * std::sqrt(1.0 - bg.eta) * bg.alpha * id;
}

/// Normally-ordered g2(0) of an arbitrary mode operator on a state.
inline double moment_g2_zero(const liouville::DensityMatrix& rho, const CMatrix& c) {
    const CMatrix cd = c.adjoint();
    const double n1 = rho.expectation(cd * c);
    if (!(n1 > 0.0)) throw NumericalError("moment_g2_zero: zero mode occupation");
    const double n2 = rho.expectation(cd * cd * c * c);
    return n2 / (n1 * n1);
}

/// g2(0) averaged over the unknown background phase.
inline double phase_averaged_g2_zero(const liouville::DensityMatrix& rho, const CMatrix& a,
                                     const BackgroundModel& bg, int n_phase = 32) {
    double acc = 0.0;
    for (int k = 0; k < n_phase; ++k) {
        BackgroundModel b = bg;
        b.alpha = std::polar(std::abs(bg.alpha), 2.0 * std::numbers::pi * k / n_phase);
        acc += moment_g2_zero(rho, displaced_operator(a, b));
    }
    return acc / n_phase;
}

/// Slow cross-check of the displaced-operator shortcut: tensor an explicit
/// background mode in a truncated coherent state and evaluate the same
/// moments on the joint space. Intended for small n_max only.
inline double tensored_background_g2_zero(const liouville::DensityMatrix& rho_sys,
                                          const CMatrix& a_sys, const BackgroundModel& bg,
                                          int background_dim = 24) {
    const int ds = int(a_sys.rows());
    const int db = background_dim;
    CMatrix b = CMatrix::Zero(db, db);
    for (int n = 1; n < db; ++n) b(n - 1, n) = std::sqrt(double(n));
    CVector coh = CVector::Zero(db);
    double logfact = 0.0;
    for (int n = 0; n < db; ++n) {
        if (n > 0) logfact += std::log(double(n));
        coh(n) = std::pow(bg.alpha, n) * std::exp(-0.5 * std::norm(bg.alpha) - 0.5 * logfact);
    }
    coh /= coh.norm();
    const CMatrix rho_b = coh * coh.adjoint();

    const CMatrix ids = CMatrix::Identity(ds, ds), idb = CMatrix::Identity(db, db);
    const CMatrix c = std::sqrt(bg.eta) * Eigen::kroneckerProduct(a_sys, idb).eval() -
                      I * std::sqrt(1.0 - bg.eta) * Eigen::kroneckerProduct(ids, b).eval();
    const CMatrix rho_joint = Eigen::kroneckerProduct(rho_sys.m, rho_b).eval();
    return moment_g2_zero(liouville::DensityMatrix{rho_joint}, c);
}

/// NPNR click detector: T is the probability that one cavity photon triggers
/// a detection event within one window, T = kappa * tau_det * eta_det.
struct DetectorModel {
    double T;

    explicit DetectorModel(double t) : T(t) {
        if (!(T > 0.0 && T < 1.0)) throw ConfigError("DetectorModel: need 0 < T < 1");
    }
    static DetectorModel from_window(const RateSet& r, double tau_det_ns, double eta_det) {
        return DetectorModel(r.kappa * tau_det_ns * eta_det);
    }
};

/// Photon-number distribution of a Jaynes-Cummings density matrix (the
/// emitter state is traced out; |e,m> carries m photons).
inline std::vector<double> photon_number_distribution(const liouville::DensityMatrix& rho,
                                                      const hilbert::FockBasis& b) {
    std::vector<double> p(b.n_max + 1, 0.0);
    for (int n = 0; n <= b.n_max; ++n) {
        p[n] += rho.m(b.index_g(n), b.index_g(n)).real();
        if (n <= b.n_max - 1) p[n] += rho.m(b.index_e(n), b.index_e(n)).real();
    }
    return p;
}

inline double factor_expectation(const std::vector<double>& dist, double x) {
    double s = 0.0, xn = 1.0;
    for (std::size_t n = 0; n < dist.size(); ++n) {
        s += dist[n] * xn;
        xn *= x;
    }
    return s;
}

/// Click probability of one detector behind the 50/50 splitter:
/// p = 1 - <(1 - T/2)^(a^dag a)>.
inline double npnr_click_probability(const std::vector<double>& dist, const DetectorModel& det) {
    return 1.0 - factor_expectation(dist, 1.0 - det.T / 2.0);
}

/// Coincidence probability of the detector pair:
/// p_C = 1 - 2 <(1 - T/2)^(a^dag a)> + <(1 - T)^(a^dag a)>.
inline double npnr_coincidence_probability(const std::vector<double>& dist,
                                           const DetectorModel& det) {
    return 1.0 - 2.0 * factor_expectation(dist, 1.0 - det.T / 2.0) +
           factor_expectation(dist, 1.0 - det.T);
}

inline double npnr_click_probability(const liouville::DensityMatrix& rho,
                                     const hilbert::FockBasis& b, const DetectorModel& det) {
    return npnr_click_probability(photon_number_distribution(rho, b), det);
}

inline double npnr_coincidence_probability(const liouville::DensityMatrix& rho,
                                           const hilbert::FockBasis& b,
                                           const DetectorModel& det) {
    return npnr_coincidence_probability(photon_number_distribution(rho, b), det);
}

/// Closed forms for a coherent state with mean photon number nbar.
inline double npnr_click_probability_coherent(double nbar, const DetectorModel& det) {
    return 1.0 - std::exp(-det.T * nbar / 2.0);
}
inline double npnr_coincidence_probability_coherent(double nbar, const DetectorModel& det) {
    return 1.0 - 2.0 * std::exp(-det.T * nbar / 2.0) + std::exp(-det.T * nbar);
}

/// Power-to-Rabi calibration: Omega = sqrt(P/P0) * (kappa+gamma)/2 * 1/sqrt(2).
inline double rabi_from_power(double power_nw, double p0_nw, const RateSet& r) {
    if (!(power_nw >= 0.0) || !(p0_nw > 0.0))
        throw ConfigError("rabi_from_power: need P >= 0 and P0 > 0");
    return std::sqrt(power_nw / p0_nw) * (r.kappa + r.gamma) / (2.0 * std::sqrt(2.0));
}

} // namespace jcsim::detection
