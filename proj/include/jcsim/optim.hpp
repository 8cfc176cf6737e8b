#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

// Small derivative-free / least-squares optimizers for spectrum fitting.
// The steady-state maps fitted here have no analytic gradients, so the primary
// path is a Nelder-Mead simplex with restart; a damped least-squares pass on a
// finite-difference Jacobian polishes the result.
namespace jcsim::optim {

using Objective = std::function<double(const std::vector<double>&)>;
using ResidualFn = std::function<Eigen::VectorXd(const std::vector<double>&)>;

struct SimplexResult {
    std::vector<double> x;
    double value = 0.0;
    int evaluations = 0;
    bool converged = false;
};

inline SimplexResult nelder_mead(const Objective& f, std::vector<double> x0,
                                 double initial_step = 0.1, double ftol = 1e-12,
                                 int max_eval = 20000, int restarts = 2) {
    const int n = int(x0.size());
    SimplexResult res;
    res.x = x0;

    auto run = [&](std::vector<double> start, double step) {
        std::vector<std::vector<double>> pts(n + 1, start);
        std::vector<double> vals(n + 1);
        for (int i = 0; i < n; ++i)
            pts[i + 1][i] += step * (std::abs(start[i]) > 1e-30 ? std::abs(start[i]) : 1.0);
        for (int i = 0; i <= n; ++i) {
            vals[i] = f(pts[i]);
            ++res.evaluations;
        }
        while (res.evaluations < max_eval) {
            std::vector<int> order(n + 1);
            for (int i = 0; i <= n; ++i) order[i] = i;
            std::sort(order.begin(), order.end(), [&](int a, int b) { return vals[a] < vals[b]; });
            std::vector<std::vector<double>> sp(n + 1);
            std::vector<double> sv(n + 1);
            for (int i = 0; i <= n; ++i) { sp[i] = pts[order[i]]; sv[i] = vals[order[i]]; }
            pts = sp; vals = sv;

            if (std::abs(vals[n] - vals[0]) <= ftol * (std::abs(vals[0]) + ftol)) {
                res.converged = true;
                break;
            }
            std::vector<double> cen(n, 0.0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) cen[j] += pts[i][j] / n;

            auto blend = [&](double t) {
                std::vector<double> p(n);
                for (int j = 0; j < n; ++j) p[j] = cen[j] + t * (pts[n][j] - cen[j]);
                return p;
            };
            auto xr = blend(-1.0);
            double fr = f(xr); ++res.evaluations;
            if (fr < vals[0]) {
                auto xe = blend(-2.0);
                double fe = f(xe); ++res.evaluations;
                if (fe < fr) { pts[n] = xe; vals[n] = fe; }
                else { pts[n] = xr; vals[n] = fr; }
            } else if (fr < vals[n - 1]) {
                pts[n] = xr; vals[n] = fr;
            } else {
                auto xc = blend(fr < vals[n] ? -0.5 : 0.5);
                double fc = f(xc); ++res.evaluations;
                if (fc < std::min(fr, vals[n])) { pts[n] = xc; vals[n] = fc; }
                else {  // shrink toward the best point
                    for (int i = 1; i <= n; ++i) {
                        for (int j = 0; j < n; ++j) pts[i][j] = 0.5 * (pts[i][j] + pts[0][j]);
                        vals[i] = f(pts[i]); ++res.evaluations;
                    }
                }
            }
        }
        return std::make_pair(pts[0], vals[0]);
    };

    auto [bx, bv] = run(x0, initial_step);
    for (int r = 0; r < restarts; ++r) {
        auto [nx, nv] = run(bx, initial_step * std::pow(0.3, r + 1));
        if (nv < bv) { bx = nx; bv = nv; }
    }
    res.x = bx;
    res.value = bv;
    return res;
}

struct LeastSquaresResult {
    std::vector<double> x;
    double residual_norm = 0.0;
    Eigen::MatrixXd curvature;  // J^T J at the solution (covariance proxy)
    int iterations = 0;
    bool converged = false;
};

/// Damped (Levenberg-Marquardt style) least squares on a finite-difference
/// Jacobian.
inline LeastSquaresResult damped_least_squares(const ResidualFn& rf, std::vector<double> x,
                                               int max_iter = 60, double xtol = 1e-10) {
    const int n = int(x.size());
    LeastSquaresResult out;
    Eigen::VectorXd r = rf(x);
    double cost = r.squaredNorm();
    double lambda = 1e-3;

    for (int it = 0; it < max_iter; ++it) {
        out.iterations = it + 1;
        Eigen::MatrixXd jac(r.size(), n);
        for (int j = 0; j < n; ++j) {
            const double h = 1e-6 * (std::abs(x[j]) > 1e-30 ? std::abs(x[j]) : 1.0);
            auto xp = x;
            xp[j] += h;
            jac.col(j) = (rf(xp) - r) / h;
        }
        const Eigen::MatrixXd jtj = jac.transpose() * jac;
        const Eigen::VectorXd jtr = jac.transpose() * r;
        bool stepped = false;
        for (int tries = 0; tries < 12; ++tries) {
            Eigen::MatrixXd a = jtj;
            a.diagonal() += lambda * jtj.diagonal().cwiseMax(1e-30);
            const Eigen::VectorXd dx = a.ldlt().solve(-jtr);
            auto xn = x;
            for (int j = 0; j < n; ++j) xn[j] += dx(j);
            const Eigen::VectorXd rn = rf(xn);
            if (rn.squaredNorm() < cost) {
                const double rel = dx.cwiseAbs().maxCoeff();
                x = xn; r = rn; cost = r.squaredNorm();
                lambda = std::max(lambda * 0.3, 1e-12);
                stepped = true;
                if (rel < xtol) { out.converged = true; }
                break;
            }
            lambda *= 10.0;
        }
        out.curvature = jtj;
        if (!stepped || out.converged) {
            out.converged = out.converged || !stepped;
            break;
        }
    }
    out.x = x;
    out.residual_norm = std::sqrt(cost);
    return out;
}

} // namespace jcsim::optim
