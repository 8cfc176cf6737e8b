#pragma once

#include <cmath>

#include "jcsim/types.hpp"

// Truncated Jaynes-Cummings Hilbert space.
//
// Basis ordering is interleaved and grouped by ladder rung so that the free
// Hamiltonian is block diagonal with contiguous 2x2 blocks:
//   index 0      -> |g,0>
//   index 2n-1   -> |g,n>    (rung n >= 1)
//   index 2n     -> |e,n-1>  (rung n >= 1)
// Total dimension is 2*n_max + 1. The raising operator maps the top rung out
// of the space; that component is projected to zero, so truncation adequacy
// has to be checked by increasing n_max.
namespace jcsim::hilbert {

struct FockBasis {
    int n_max;

    explicit FockBasis(int n) : n_max(n) {
        if (n < 1) throw ConfigError("FockBasis: n_max must be >= 1");
    }
    int dim() const { return 2 * n_max + 1; }

    // |g,n>, n in [0, n_max]
    int index_g(int n) const { return n == 0 ? 0 : 2 * n - 1; }
    // |e,m>, m photons, m in [0, n_max-1]
    int index_e(int m) const { return 2 * (m + 1); }
};

/// Dressed ladder level |n,sign> with sign = +1 or -1.
struct DressedLevel {
    int n;
    int sign;

    DressedLevel(int n_, int sign_) : n(n_), sign(sign_) {
        if (n < 1 || (sign != 1 && sign != -1))
            throw ConfigError("DressedLevel: need n >= 1 and sign in {+1,-1}");
    }
};

/// Photon annihilation operator in the bare product basis.
inline CMatrix build_annihilation(const FockBasis& b) {
    CMatrix a = CMatrix::Zero(b.dim(), b.dim());
    for (int n = 1; n <= b.n_max; ++n)
        a(b.index_g(n - 1), b.index_g(n)) = std::sqrt(double(n));
    for (int m = 1; m <= b.n_max - 1; ++m)
        a(b.index_e(m - 1), b.index_e(m)) = std::sqrt(double(m));
    return a;
}

/// Emitter lowering operator |g><e| (x) identity on photon number.
inline CMatrix build_sigma_minus(const FockBasis& b) {
    CMatrix s = CMatrix::Zero(b.dim(), b.dim());
    for (int m = 0; m <= b.n_max - 1; ++m)
        s(b.index_g(m), b.index_e(m)) = 1.0;
    return s;
}

/// Projector onto the excited emitter state, summed over photon number.
inline CMatrix build_excited_projector(const FockBasis& b) {
    CMatrix p = CMatrix::Zero(b.dim(), b.dim());
    for (int m = 0; m <= b.n_max - 1; ++m)
        p(b.index_e(m), b.index_e(m)) = 1.0;
    return p;
}

/// Free Hamiltonian (lab frame, omega_0 == 0): rung blocks
/// [[n*delta_C, sqrt(n) g], [sqrt(n) g, (n-1)*delta_C]].
inline CMatrix build_h_free(const FockBasis& b, const RateSet& r, const DetuningSpec& det) {
    CMatrix h = CMatrix::Zero(b.dim(), b.dim());
    for (int n = 1; n <= b.n_max; ++n) {
        const int ig = b.index_g(n), ie = b.index_e(n - 1);
        h(ig, ig) = double(n) * det.delta_C;
        h(ie, ie) = double(n) * det.delta_C - det.delta_C;
        h(ig, ie) = std::sqrt(double(n)) * r.g;
        h(ie, ig) = std::sqrt(double(n)) * r.g;
    }
    return h;
}

/// Rotating-frame Hamiltonian at the laser frequency:
/// Omega (a + a^dag) + (delta_C - delta_L) a^dag a - delta_L |e><e| + JC coupling.
inline CMatrix build_h_rotating(const FockBasis& b, const RateSet& r, const DetuningSpec& det,
                                double omega_rabi) {
    if (omega_rabi < 0.0) throw ConfigError("build_h_rotating: Omega must be >= 0");
    const CMatrix a = build_annihilation(b);
    const CMatrix sm = build_sigma_minus(b);
    CMatrix h = omega_rabi * (a + a.adjoint());
    h += (det.delta_C - det.delta_L) * (a.adjoint() * a).eval();
    h -= det.delta_L * build_excited_projector(b);
    h += r.g * (sm * a.adjoint() + sm.adjoint() * a).eval();
    return h;
}

/// Energy of the dressed level for a detuned cavity (omega_0 == 0):
/// (n - 1/2) delta_C +/- sqrt(delta_C^2/4 + n g^2).
inline double dressed_energy(const DressedLevel& lv, const RateSet& r, double delta_C) {
    const double root = std::sqrt(delta_C * delta_C / 4.0 + lv.n * r.g * r.g);
    return (lv.n - 0.5) * delta_C + lv.sign * root;
}

/// Unitary mapping the bare basis to the dressed basis; column k of U is the
/// k-th dressed state. Dressed ordering: |0>, then per rung (|n,tilde+>, |n,tilde->).
/// For delta_C = 0 this reduces to |n+-> = (|g,n> +- |e,n-1>)/sqrt(2).
inline CMatrix dressed_transform(const FockBasis& b, const RateSet& r, double delta_C = 0.0) {
    CMatrix u = CMatrix::Zero(b.dim(), b.dim());
    u(0, 0) = 1.0;
    for (int n = 1; n <= b.n_max; ++n) {
        const double root = std::sqrt(delta_C * delta_C / 4.0 + n * r.g * r.g);
        const double sg = std::sqrt(double(n)) * r.g;
        for (int sign : {+1, -1}) {
            const double cg = delta_C / 2.0 + sign * root;  // amplitude on |g,n>
            const double norm = std::sqrt(cg * cg + sg * sg);
            const int col = sign > 0 ? 2 * n - 1 : 2 * n;
            u(b.index_g(n), col) = cg / norm;
            u(b.index_e(n - 1), col) = sg / norm;
        }
    }
    return u;
}

inline CMatrix to_dressed_basis(const CMatrix& op, const CMatrix& u) {
    return u.adjoint() * op * u;
}

/// Ladder matrix element T_n^+- = (sqrt(n+1) +- sqrt(n))/2 of the photon
/// operator between neighbouring dressed rungs (resonant cavity).
inline double ladder_element(int n, int sign) {
    return (std::sqrt(double(n + 1)) + sign * std::sqrt(double(n))) / 2.0;
}

/// Deviation of neighbouring-rung energy differences from the central
/// frequency, in units of g: R_n^(s,p) = (E_{n+1}^s - E_n^p - omega_0)/g.
/// n = 0 refers to the ground level with E_0 = 0 (p is ignored there).
inline double anharmonicity(int n, int s, int p, const RateSet& r) {
    if (n < 0) throw ConfigError("anharmonicity: n must be >= 0");
    const auto energy = [&](int m, int sign) {
        return m == 0 ? 0.0 : sign * std::sqrt(double(m)) * r.g;  // omega_0 == 0
    };
    return (energy(n + 1, s) - energy(n, p)) / r.g;
}

/// Squared matrix-element ratio |<2-|a|1+>|^2 / |<2+|a|1+>|^2 = (T_1^-/T_1^+)^2.
inline double matrix_element_ratio() {
    const double t = ladder_element(1, -1) / ladder_element(1, +1);
    return t * t;
}

} // namespace jcsim::hilbert
