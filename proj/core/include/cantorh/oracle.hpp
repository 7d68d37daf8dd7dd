#pragma once

#include <functional>
#include <vector>

#include "cantorh/hfun.hpp"

namespace cantorh {

// Exact distribution function for the single slit [-1/2, 1/2] seen from
// z0 = -3/2, as a function of the capture radius.  Clamped to [0, 1]
// outside the slit's radial span [1, 2].
double h_exact_single_slit(double r);

// Least-squares collocation solution of a Dirichlet problem in the exterior
// of a family of circles: a harmonic function built from logarithms and
// reflected power singularities, matched to the boundary data at oversampled
// collocation points.
class CollocationSolution {
  public:
    double operator()(complexd z) const;
    double residual() const { return residual_; }
    int order() const { return order_; }

  private:
    friend CollocationSolution
    collocation_solve(const CircularDomain&,
                      const std::vector<std::function<double(complexd)>>&, int,
                      int, double);
    CollocationSolution() = default;

    CircularDomain domain_;
    int order_ = 0;
    Eigen::VectorXd coef_;
    double residual_ = 0.0;
};

// Solves the exterior Dirichlet problem with the given per-circle boundary
// data.  Intended as an independent oracle for small families (at most four
// circles).  Throws AccuracyError when the collocation residual exceeds
// residual_tol.
CollocationSolution
collocation_solve(const CircularDomain& domain,
                  const std::vector<std::function<double(complexd)>>& data,
                  int order = 24, int oversample = 4,
                  double residual_tol = 1e-8);

// Exact arc-interior value of the distribution function for one- and
// two-circle families: the angular-measure fields absorb the discontinuous
// part of the data and a collocation solve supplies the smooth remainder.
struct MixedArcValue {
    double value = 0.0;
    double residual = 0.0; // collocation residual of the smooth remainder
};

MixedArcValue mixed_arc_solve(const Pipeline& p, int k, double s,
                              int order = 24);

// Boundary-measure weights sigma_k(z) computed by collocation instead of the
// integral-equation pipeline; z must be well separated from the circles.
std::vector<double> collocation_sigma(const CircularDomain& domain, complexd z,
                                      int order = 24);

} // namespace cantorh
