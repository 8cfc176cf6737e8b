#pragma once

#include <optional>
#include <vector>

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "jcsim/hilbert.hpp"
#include "jcsim/types.hpp"

// Vectorized master equation.
//
// Vectorization convention: vec(rho)(i*d + j) = rho(i,j), so that
//   vec(A rho B) = (A kron B^T) vec(rho),
//   u[H]  = -i (H kron 1 - 1 kron H^T),
//   l[L]  = L kron L* - (L^dag L)/2 kron 1 - 1 kron (L^dag L)^T / 2.
namespace jcsim::liouville {

using SuperOperator = CMatrix;
using LindbladOp = CMatrix;

struct DensityMatrix {
    CMatrix m;

    double trace_real() const { return m.trace().real(); }
    double expectation(const CMatrix& op) const { return (op * m).trace().real(); }
    Complex expectation_c(const CMatrix& op) const { return (op * m).trace(); }
    double min_eigenvalue() const {
        Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (m + m.adjoint()),
                                                  Eigen::EigenvaluesOnly);
        return es.eigenvalues().minCoeff();
    }
    // Fixed numerical slacks; see validate() callers for the rationale.
    bool is_valid(double herm_tol = 1e-10, double trace_tol = 1e-10,
                  double pos_slack = 1e-8) const {
        if (max_abs(m - m.adjoint()) >= herm_tol) return false;
        if (std::abs(trace_real() - 1.0) >= trace_tol) return false;
        return min_eigenvalue() >= -pos_slack;
    }
};

inline LindbladOp lindblad_kappa(const hilbert::FockBasis& b, const RateSet& r) {
    return std::sqrt(r.kappa) * hilbert::build_annihilation(b);
}

inline LindbladOp lindblad_gamma(const hilbert::FockBasis& b, const RateSet& r) {
    return std::sqrt(r.gamma) * hilbert::build_sigma_minus(b);
}

inline CVector vectorize(const CMatrix& rho) {
    const int d = int(rho.rows());
    if (rho.cols() != d) throw NumericalError("vectorize: matrix must be square");
    CVector v(d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) v(i * d + j) = rho(i, j);
    return v;
}

inline CMatrix devectorize(const CVector& v) {
    const int d = int(std::lround(std::sqrt(double(v.size()))));
    if (d * d != v.size()) throw NumericalError("devectorize: length is not a perfect square");
    CMatrix rho(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) rho(i, j) = v(i * d + j);
    return rho;
}

/// tr(op * devectorize(v)) without forming the matrix.
inline Complex trace_with(const CMatrix& op, const CVector& v) {
    const int d = int(op.rows());
    Complex s = 0.0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) s += op(i, j) * v(j * d + i);
    return s;
}

/// Coherent part u[H] = -i (H kron 1 - 1 kron H^T).
inline SuperOperator build_hamiltonian_part(const CMatrix& h) {
    if (h.rows() != h.cols()) throw NumericalError("build_hamiltonian_part: non-square H");
    const CMatrix id = CMatrix::Identity(h.rows(), h.cols());
    return -I * (Eigen::kroneckerProduct(h, id) - Eigen::kroneckerProduct(id, h.transpose())).eval();
}

/// Dissipator l[L] = L kron L* - (L^dag L)/2 kron 1 - 1 kron (L^dag L)^T / 2.
inline SuperOperator build_dissipator(const LindbladOp& l) {
    const CMatrix id = CMatrix::Identity(l.rows(), l.cols());
    const CMatrix ldl = l.adjoint() * l;
    return Eigen::kroneckerProduct(l, l.conjugate()).eval() -
           0.5 * Eigen::kroneckerProduct(ldl, id).eval() -
           0.5 * Eigen::kroneckerProduct(id, ldl.transpose()).eval();
}

inline SuperOperator build_liouvillian(const CMatrix& h, const std::vector<LindbladOp>& ls) {
    SuperOperator d = build_hamiltonian_part(h);
    for (const auto& l : ls) d += build_dissipator(l);
    return d;
}

/// Full rotating-frame Liouvillian of the driven Jaynes-Cummings system.
inline SuperOperator build_system_liouvillian(const hilbert::FockBasis& b, const RateSet& r,
                                              const DetuningSpec& det, double omega_rabi) {
    return build_liouvillian(hilbert::build_h_rotating(b, r, det, omega_rabi),
                             {lindblad_kappa(b, r), lindblad_gamma(b, r)});
}

/// Approximate the two eigenvalues of D closest to zero by shift-inverted
/// subspace iteration with Rayleigh-Ritz extraction. Returns |lambda| sorted
/// ascending; [0] is the (numerically zero) steady-state eigenvalue and [1]
/// the uniqueness gap.
inline std::vector<double> smallest_eigenvalues(const SuperOperator& d, int iters = 40) {
    const int n = int(d.rows());
    const int k = 3;
    const double scale = max_abs(d);
    const Complex sigma = 1e-4 * scale;
    Eigen::PartialPivLU<CMatrix> lu(d - sigma * CMatrix::Identity(n, n));

    CMatrix q(n, k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < n; ++i)
            q(i, j) = Complex(std::cos(0.7 * (i + 1) * (j + 1)), std::sin(1.3 * (i + 2) * (j + 1)));
    Eigen::HouseholderQR<CMatrix> qr0(q);
    q = qr0.householderQ() * CMatrix::Identity(n, k);

    for (int it = 0; it < iters; ++it) {
        CMatrix z = lu.solve(q);
        Eigen::HouseholderQR<CMatrix> qr(z);
        q = qr.householderQ() * CMatrix::Identity(n, k);
    }
    const CMatrix dk = q.adjoint() * (d * q);
    Eigen::ComplexEigenSolver<CMatrix> es(dk);
    std::vector<double> mags(k);
    for (int j = 0; j < k; ++j) mags[j] = std::abs(es.eigenvalues()(j));
    std::sort(mags.begin(), mags.end());
    mags.resize(2);
    return mags;
}

struct SteadyStateOptions {
    double residual_tol = 1e-10;
    bool check_uniqueness = true;
    double gap_tol_relative = 1e-6;  // gap threshold in units of max|D| entries
};

/// Steady state via a bordered linear solve: one row of D is replaced by the
/// trace functional and the result is verified against the unmodified D.
inline DensityMatrix steady_state(const SuperOperator& d,
                                  const SteadyStateOptions& opts = {}) {
    const int n = int(d.rows());
    const int dim = int(std::lround(std::sqrt(double(n))));
    if (dim * dim != n) throw NumericalError("steady_state: superoperator size is not dim^2");

    Eigen::RowVectorXcd trace_row = Eigen::RowVectorXcd::Zero(n);
    for (int i = 0; i < dim; ++i) trace_row(i * dim + i) = 1.0;

    const auto solve_with_row = [&](int row) {
        CMatrix dt = d;
        dt.row(row) = trace_row;
        CVector rhs = CVector::Zero(n);
        rhs(row) = 1.0;
        return CVector(Eigen::PartialPivLU<CMatrix>(dt).solve(rhs));
    };

    CVector v = solve_with_row(0);
    CMatrix rho = devectorize(v);
    rho = 0.5 * (rho + rho.adjoint()).eval();
    Complex tr = rho.trace();
    if (!v.allFinite() || std::abs(tr) < 1e-12) {
        v = solve_with_row(n - 1);
        rho = devectorize(v);
        rho = 0.5 * (rho + rho.adjoint()).eval();
        tr = rho.trace();
        if (!v.allFinite() || std::abs(tr) < 1e-12)
            throw NumericalError("steady_state: degenerate or ill-conditioned null space");
    }
    rho /= tr;

    const double residual = (d * vectorize(rho)).norm();
    if (!(residual < opts.residual_tol))
        throw NumericalError("steady_state: residual " + std::to_string(residual) +
                             " exceeds tolerance; null space may be degenerate");

    if (opts.check_uniqueness) {
        const auto mags = smallest_eigenvalues(d);
        if (mags[1] < opts.gap_tol_relative * max_abs(d))
            throw NumericalError("steady_state: near-degenerate null space (gap " +
                                 std::to_string(mags[1]) + ")");
    }
    return DensityMatrix{rho};
}

/// exp(D dt), cached by callers for uniform-grid evolution.
inline SuperOperator propagator(const SuperOperator& d, double dt) {
    if (!std::isfinite(dt) || dt < 0.0) throw NumericalError("propagator: bad time step");
    return (d * dt).exp();
}

inline DensityMatrix propagate(const SuperOperator& d, const DensityMatrix& rho0, double t) {
    return DensityMatrix{devectorize(propagator(d, t) * vectorize(rho0.m))};
}

} // namespace jcsim::liouville
