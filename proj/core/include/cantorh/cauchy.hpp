#pragma once

#include "cantorh/grid.hpp"
#include "cantorh/types.hpp"

namespace cantorh {

// Minimum distance from an evaluation point to a circle of radius r for the
// n-node trapezoidal Cauchy integral to retain ~1e-6 accuracy: the quadrature
// error decays like (r/(r+d))^n, so d >= r*(10^(6/n) - 1).
double near_boundary_threshold(double radius, int n);

// Distance from z to the nearest circle boundary (negative inside a disk).
double boundary_distance(const CircularDomain& g, complexd z);

// Trapezoidal Cauchy integral of boundary values f over all circles, for f
// analytic in the unbounded complement with f(inf) = 0.  The grid's clockwise
// parametrization is the positive orientation for that region, so
//   f(z) = (2 pi / n) * sum f * eta' / (eta - z) / (2 pi i).
// Throws NearBoundaryError when z violates the distance threshold of any
// circle (callers needing boundary values should interpolate instead).
complexd cauchy_eval(const BoundaryGrid& grid, const Eigen::VectorXcd& fvals,
                     complexd z);

// Same quadrature without the distance guard (for far-field/decay tests).
complexd cauchy_eval_unguarded(const BoundaryGrid& grid,
                               const Eigen::VectorXcd& fvals, complexd z);

} // namespace cantorh
