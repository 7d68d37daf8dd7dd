#pragma once

#include <vector>

#include "cantorh/operators.hpp"

namespace cantorh {

// Data for the harmonic measures sigma_k of the m circles: per source circle
// j a density mu_j and per-circle constants nu(i,j) from the Neumann-kernel
// solve with gamma_j(t) = log|eta(t) - c_j|, plus the coefficients (a, b)
// from the bordered (m+1)x(m+1) system
//   [ nu  1 ] [a_k]   [delta_k]
//   [ 1^T 0 ] [b_k] = [   0   ],
// one factorization shared across the m right-hand sides.  Invariants:
// rows of a sum to zero; sum_k b_k = 1.
struct HarmonicData {
    Eigen::MatrixXd a;    // m x m, a(k, j)
    Eigen::VectorXd b;    // m
    Eigen::MatrixXd mu;   // (m*n) x m, column j
    Eigen::MatrixXd nu;   // m x m, nu(i, j)
    Eigen::MatrixXd gam;  // (m*n) x m, column j: log|eta - c_j|
    std::vector<SolveReport> reports; // one per source circle
};

// Builds the data; the m independent Neumann solves run in parallel.
HarmonicData build_harmonic_data(const Operators& ops, double solver_tol = 1e-13,
                                 int solver_maxit = 100);

// All m harmonic measures at an interior point:
//   sigma_k(z) = b_k + Re sum_j a(k,j) G_j(z) - sum_j a(k,j) log|z - c_j|,
// where G_j is the Cauchy integral of the boundary values
// gam_j + nu(., j) + i mu_j.  Near-boundary points are rejected by the
// Cauchy guard.
Eigen::VectorXd sigma_at(const Operators& ops, const HarmonicData& data,
                         complexd z);

} // namespace cantorh
