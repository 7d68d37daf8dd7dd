#pragma once

#include <functional>
#include <vector>

#include "cantorh/grid.hpp"
#include "cantorh/types.hpp"

namespace cantorh {

// Spectral conjugation matrix on n equispaced nodes: applies the Fourier
// multiplier -i*sgn(k) (zero on the mean and the Nyquist mode).  Acting on
// samples of a trigonometric polynomial it returns samples of the conjugate
// periodic function, which is how the cotangent-singular part of the
// companion kernel is applied on a circle.
Eigen::MatrixXd conjugation_matrix(int n);

// Dense Nystrom discretizations of the two boundary kernels on a grid.
//   N(s,t) = (1/pi) Im(eta'(t) / (eta(t) - eta(s)))   (continuous)
//   M(s,t) = (1/pi) Re(eta'(t) / (eta(t) - eta(s)))   (singular on s = t)
// Off-diagonal circle blocks carry the trapezoidal weight 2*pi/n.  On a
// circle the kernels are exactly constant resp. exactly the cotangent:
// the same-circle N block is the constant -1/n and the same-circle M block
// is minus the conjugation matrix (no quadrature weight; the smooth
// remainder of the split vanishes identically for circles).
struct Operators {
    BoundaryGrid grid;
    Eigen::MatrixXd N;
    Eigen::MatrixXd M;

    int size() const { return grid.size(); }
};

Operators make_operators(const CircularDomain& g, int n);

// Operator-application seam for the iterative solver, so the dense product
// can later be replaced by an accelerated one without touching callers.
using LinearOperator = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

struct SolveReport {
    int iterations = 0;
    double residual = 0.0;               // final relative residual
    std::vector<double> history;         // relative residual per iteration
    bool converged = false;
};

// Restart-free GMRES (Arnoldi with Givens rotations).  Returns x with
// ||A x - b|| <= tol * ||b||; throws ConvergenceError carrying the residual
// history when maxit is reached first.  report, when non-null, receives the
// iteration diagnostics either way (on throw, via the exception's history).
Eigen::VectorXd gmres(const LinearOperator& apply, const Eigen::VectorXd& b,
                      double tol, int maxit, SolveReport* report = nullptr);

// Solves (I - N) mu = rhs with the restart-free iteration.
Eigen::VectorXd solve_neumann(const Operators& ops, const Eigen::VectorXd& rhs,
                              double tol = 1e-13, int maxit = 100,
                              SolveReport* report = nullptr);

// Companion piecewise constant: nodewise candidate (M mu - (I - N) gamma)/2
// collapsed to its mean on each circle.  spread is the largest max-min node
// deviation on any circle (a discretization diagnostic; within_tol reflects
// the default 1e-8 contract).
struct NuResult {
    Eigen::VectorXd nu;      // one value per circle
    double spread = 0.0;
    bool within_tol = true;
};

NuResult nu_from(const Operators& ops, const Eigen::VectorXd& mu,
                 const Eigen::VectorXd& gamma, double spread_tol = 1e-8);

} // namespace cantorh
