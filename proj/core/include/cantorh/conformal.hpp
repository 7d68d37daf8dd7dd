#pragma once

#include <vector>

#include "cantorh/operators.hpp"
#include "cantorh/trig.hpp"

namespace cantorh {

// Conformal map F(zeta) = zeta - i*f(zeta) from the complement of the circles
// onto a horizontal-slit domain, with f analytic in the complement and
// f(inf) = 0.  Boundary values: f(eta) = gamma + nu + i*mu with
// gamma(t) = Im eta(t); consequently on circle j
//   Re F(eta_j(s)) = c_j + r_j cos s + mu_j(s),   Im F(eta_j(s)) = -nu_j.
struct ConformalMap {
    BoundaryGrid grid;
    Eigen::VectorXd gamma;             // Im eta at the nodes
    Eigen::VectorXd mu;                // density solving (I-N) mu = -M gamma
    Eigen::VectorXd nu;                // per-circle constants
    double nu_spread = 0.0;            // node spread diagnostic of nu
    SolveReport solve_report;
    Eigen::VectorXcd f_boundary;       // gamma + nu + i mu at the nodes
    std::vector<TrigInterp> mu_interp; // per-circle interpolant of mu

    // f at an interior point by the Cauchy integral (near-boundary guarded).
    complexd f_interior(complexd zeta) const;
    // F at an interior point.
    complexd F(complexd zeta) const;
    // Boundary values via trigonometric interpolation on circle j (0-based).
    double boundary_re_F(int j, double s) const;
    complexd boundary_F(int j, double s) const;
};

// Builds the map for a circular domain: solves the Neumann-kernel equation
// for mu, forms nu, assembles boundary values and interpolants.
ConformalMap map_from_circular(const Operators& ops, double solver_tol = 1e-13,
                               int solver_maxit = 100);

// Per-circle image slit measured from the map: midpoint and length of the
// extremes of Re F over the circle, refined by golden-section search on the
// trigonometric interpolant (node extremes alone underestimate the length).
struct SlitImage {
    std::vector<double> centers;
    std::vector<double> lengths;
};

SlitImage slit_image(const ConformalMap& map);

// Result of the circular-preimage iteration for a slit family.
struct PreimageResult {
    CircularDomain domain;         // converged circles
    ConformalMap map;              // map built on the converged circles
    std::vector<double> history;   // stopping criterion per iteration
    int iterations = 0;
    double criterion = 0.0;        // final stopping-criterion value
    double max_slit_residual = 0.0; // max_j |w_img - w| + |L_img - L| of map
};

// Fixed-point iteration: start from circles at the slit centers with radius
// length/2; each step maps, measures the image slits, and corrects
// c -= (w_img - w), r -= (L_img - L)/4, until the mean image defect
// (1/(2m)) sum(|w_img - w| + |L_img - L|) drops below eps.  Throws
// ConvergenceError with the criterion history when max_iter is exceeded.
PreimageResult find_preimage(const SlitDomain& d, int n = 16, double eps = 1e-14,
                             int max_iter = 100, double solver_tol = 1e-13,
                             int solver_maxit = 100);

// Real preimage of a real basepoint: solves F(zeta0) = z0 on the real axis in
// the unbounded component by safeguarded bisection/secant (bracket sign
// checked, GeometryError if absent); |F(zeta0) - z0| <= 1e-12 on return.
// The Center basepoint returns 0 exactly (odd symmetry forces F(0) = 0).
double invert_on_axis(const ConformalMap& map, const Basepoint& b);

} // namespace cantorh
