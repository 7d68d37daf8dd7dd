#include "cantorh/operators.hpp"

#include <cmath>
#include <string>

#include "cantorh/errors.hpp"

namespace cantorh {

Eigen::MatrixXd conjugation_matrix(int n) {
    if (n < 4 || !is_power_of_two(n))
        throw ArgumentError("conjugation_matrix: n must be a power of two >= 4");
    // Closed form of Re(idft(mult . dft(e_l))) with mult_k = -i sgn(k),
    // mult_0 = mult_{n/2} = 0:
    //   K[p][l] = (2/n) sum_{k=1}^{n/2-1} sin(2 pi k (p - l) / n).
    Eigen::MatrixXd K(n, n);
    std::vector<double> row(static_cast<size_t>(n));
    for (int d = 0; d < n; ++d) {
        double acc = 0.0;
        for (int k = 1; k < n / 2; ++k)
            acc += std::sin(2.0 * pi * k * d / n);
        row[static_cast<size_t>(d)] = 2.0 * acc / n;
    }
    for (int p = 0; p < n; ++p)
        for (int l = 0; l < n; ++l)
            K(p, l) = row[static_cast<size_t>(((p - l) % n + n) % n)];
    return K;
}

Operators make_operators(const CircularDomain& g, int n) {
    Operators ops;
    ops.grid = discretize(g, n);
    const int m = ops.grid.m();
    const int mn = ops.grid.size();
    ops.N.setZero(mn, mn);
    ops.M.setZero(mn, mn);

    const double w = 2.0 * pi / n;
    const auto& eta = ops.grid.eta;
    const auto& etap = ops.grid.etap;
    for (int p = 0; p < mn; ++p) {
        const int jp = p / n;
        for (int q = 0; q < mn; ++q) {
            if (q / n == jp)
                continue;
            const complexd ker = etap[q] / (eta[q] - eta[p]);
            ops.N(p, q) = w * ker.imag() / pi;
            ops.M(p, q) = w * ker.real() / pi;
        }
    }
    const Eigen::MatrixXd K = conjugation_matrix(n);
    for (int j = 0; j < m; ++j) {
        ops.N.block(j * n, j * n, n, n).setConstant(-1.0 / n);
        ops.M.block(j * n, j * n, n, n) = -K;
    }
    return ops;
}

Eigen::VectorXd gmres(const LinearOperator& apply, const Eigen::VectorXd& b,
                      double tol, int maxit, SolveReport* report) {
    if (!(tol > 0.0) || maxit < 1)
        throw ArgumentError("gmres: tol must be positive and maxit >= 1");
    const auto dim = b.size();
    SolveReport local;
    SolveReport& rep = report ? *report : local;
    rep = SolveReport{};

    const double bnorm = b.norm();
    if (bnorm == 0.0) {
        rep.converged = true;
        return Eigen::VectorXd::Zero(dim);
    }

    const int kmax = std::min<int>(maxit, static_cast<int>(dim));
    Eigen::MatrixXd V(dim, kmax + 1);
    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(kmax + 1, kmax);
    Eigen::VectorXd cs = Eigen::VectorXd::Zero(kmax);
    Eigen::VectorXd sn = Eigen::VectorXd::Zero(kmax);
    Eigen::VectorXd g = Eigen::VectorXd::Zero(kmax + 1);

    V.col(0) = b / bnorm;
    g[0] = bnorm;
    int k = 0;
    for (; k < kmax; ++k) {
        Eigen::VectorXd wvec = apply(V.col(k));
        // Modified Gram-Schmidt.
        for (int i = 0; i <= k; ++i) {
            H(i, k) = V.col(i).dot(wvec);
            wvec -= H(i, k) * V.col(i);
        }
        H(k + 1, k) = wvec.norm();
        if (H(k + 1, k) > 0.0)
            V.col(k + 1) = wvec / H(k + 1, k);

        // Apply the accumulated Givens rotations, then a new one.
        for (int i = 0; i < k; ++i) {
            const double t = cs[i] * H(i, k) + sn[i] * H(i + 1, k);
            H(i + 1, k) = -sn[i] * H(i, k) + cs[i] * H(i + 1, k);
            H(i, k) = t;
        }
        const double denom = std::hypot(H(k, k), H(k + 1, k));
        cs[k] = H(k, k) / denom;
        sn[k] = H(k + 1, k) / denom;
        H(k, k) = denom;
        H(k + 1, k) = 0.0;
        g[k + 1] = -sn[k] * g[k];
        g[k] = cs[k] * g[k];

        const double rel = std::abs(g[k + 1]) / bnorm;
        rep.history.push_back(rel);
        if (rel <= tol) {
            ++k;
            rep.converged = true;
            break;
        }
    }
    rep.iterations = static_cast<int>(rep.history.size());
    rep.residual = rep.history.empty() ? 1.0 : rep.history.back();
    if (!rep.converged)
        throw ConvergenceError("gmres: no convergence within " + std::to_string(maxit) +
                                   " iterations (relative residual " +
                                   std::to_string(rep.residual) + ")",
                               rep.history);

    // Back-substitute the triangular system and assemble the solution.
    Eigen::VectorXd y(k);
    for (int i = k - 1; i >= 0; --i) {
        double acc = g[i];
        for (int j = i + 1; j < k; ++j)
            acc -= H(i, j) * y[j];
        y[i] = acc / H(i, i);
    }
    return V.leftCols(k) * y;
}

Eigen::VectorXd solve_neumann(const Operators& ops, const Eigen::VectorXd& rhs,
                              double tol, int maxit, SolveReport* report) {
    if (rhs.size() != ops.size())
        throw ArgumentError("solve_neumann: rhs size mismatch");
    const Eigen::MatrixXd& N = ops.N;
    LinearOperator apply = [&N](const Eigen::VectorXd& x) -> Eigen::VectorXd {
        return x - N * x;
    };
    return gmres(apply, rhs, tol, maxit, report);
}

NuResult nu_from(const Operators& ops, const Eigen::VectorXd& mu,
                 const Eigen::VectorXd& gamma, double spread_tol) {
    if (mu.size() != ops.size() || gamma.size() != ops.size())
        throw ArgumentError("nu_from: density size mismatch");
    const int m = ops.grid.m();
    const int n = ops.grid.n;
    const Eigen::VectorXd nodes =
        (ops.M * mu - (gamma - ops.N * gamma)) / 2.0;

    NuResult out;
    out.nu.resize(m);
    out.spread = 0.0;
    for (int j = 0; j < m; ++j) {
        const auto seg = nodes.segment(j * n, n);
        out.nu[j] = seg.mean();
        out.spread = std::max(out.spread, seg.maxCoeff() - seg.minCoeff());
    }
    out.within_tol = out.spread <= spread_tol;
    return out;
}

} // namespace cantorh
