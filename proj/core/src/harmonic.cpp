#include "cantorh/harmonic.hpp"

#include <cmath>

#include "cantorh/cauchy.hpp"
#include "cantorh/errors.hpp"
#include "cantorh/threads.hpp"

namespace cantorh {

HarmonicData build_harmonic_data(const Operators& ops, double solver_tol,
                                 int solver_maxit) {
    const int m = ops.grid.m();
    const int n = ops.grid.n;
    const int mn = ops.grid.size();

    HarmonicData data;
    data.mu.resize(mn, m);
    data.nu.resize(m, m);
    data.gam.resize(mn, m);
    data.reports.resize(static_cast<size_t>(m));

    parallel_for(m, [&](int j) {
        Eigen::VectorXd gj(mn);
        const complexd cj(ops.grid.domain.centers[static_cast<size_t>(j)], 0.0);
        for (int q = 0; q < mn; ++q)
            gj[q] = std::log(std::abs(ops.grid.eta[q] - cj));
        data.gam.col(j) = gj;
        Eigen::VectorXd muj = solve_neumann(ops, -(ops.M * gj), solver_tol,
                                            solver_maxit,
                                            &data.reports[static_cast<size_t>(j)]);
        data.mu.col(j) = muj;
        const NuResult nu = nu_from(ops, muj, gj);
        data.nu.col(j) = nu.nu;
    });

    // Bordered system, one LU reused for the m right-hand sides.
    Eigen::MatrixXd S = Eigen::MatrixXd::Zero(m + 1, m + 1);
    S.topLeftCorner(m, m) = data.nu;
    S.block(0, m, m, 1).setOnes();
    S.block(m, 0, 1, m).setOnes();
    Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(m + 1, m);
    rhs.topLeftCorner(m, m).setIdentity();

    Eigen::PartialPivLU<Eigen::MatrixXd> lu(S);
    const Eigen::MatrixXd sol = lu.solve(rhs); // column k: [a_k; b_k]
    const double relerr = (S * sol - rhs).norm() / rhs.norm();
    if (!std::isfinite(relerr) || relerr > 1e-8)
        throw AccuracyError("harmonic coefficient system solved poorly", relerr);

    data.a = sol.topRows(m).transpose(); // a(k, j) = sol(j, k)
    data.b = sol.row(m).transpose();
    return data;
}

Eigen::VectorXd sigma_at(const Operators& ops, const HarmonicData& data,
                         complexd z) {
    const int m = ops.grid.m();
    const int n = ops.grid.n;
    const int mn = ops.grid.size();

    Eigen::VectorXcd Gz(m);
    Eigen::VectorXcd fv(mn);
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < m; ++i)
            for (int q = 0; q < n; ++q)
                fv[i * n + q] = complexd(data.gam(i * n + q, j) + data.nu(i, j),
                                         data.mu(i * n + q, j));
        Gz[j] = cauchy_eval(ops.grid, fv, z);
    }

    Eigen::VectorXd sigma(m);
    for (int k = 0; k < m; ++k) {
        double val = data.b[k];
        for (int j = 0; j < m; ++j) {
            val += data.a(k, j) * Gz[j].real();
            val -= data.a(k, j) *
                   std::log(std::abs(
                       z - complexd(ops.grid.domain.centers[static_cast<size_t>(j)], 0.0)));
        }
        sigma[k] = val;
    }
    return sigma;
}

} // namespace cantorh
