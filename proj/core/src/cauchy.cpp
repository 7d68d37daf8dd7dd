#include "cantorh/cauchy.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "cantorh/errors.hpp"

namespace cantorh {

double near_boundary_threshold(double radius, int n) {
    return radius * (std::pow(10.0, 6.0 / n) - 1.0);
}

double boundary_distance(const CircularDomain& g, complexd z) {
    double best = std::numeric_limits<double>::infinity();
    for (int j = 0; j < g.count(); ++j) {
        const double d = std::abs(z - complexd(g.centers[static_cast<size_t>(j)], 0.0)) -
                         g.radii[static_cast<size_t>(j)];
        best = std::min(best, d);
    }
    return best;
}

complexd cauchy_eval_unguarded(const BoundaryGrid& grid,
                               const Eigen::VectorXcd& fvals, complexd z) {
    if (fvals.size() != grid.size())
        throw ArgumentError("cauchy_eval: boundary value size mismatch");
    complexd acc(0.0, 0.0);
    for (int q = 0; q < grid.size(); ++q)
        acc += fvals[q] * grid.etap[q] / (grid.eta[q] - z);
    // (2 pi / n) * acc / (2 pi i) = acc / (i n)
    return acc / complexd(0.0, static_cast<double>(grid.n));
}

complexd cauchy_eval(const BoundaryGrid& grid, const Eigen::VectorXcd& fvals,
                     complexd z) {
    for (int j = 0; j < grid.m(); ++j) {
        const double r = grid.domain.radii[static_cast<size_t>(j)];
        const double d =
            std::abs(z - complexd(grid.domain.centers[static_cast<size_t>(j)], 0.0)) - r;
        if (d < near_boundary_threshold(r, grid.n))
            throw NearBoundaryError(
                "cauchy_eval: point within the accuracy guard of circle " +
                std::to_string(j + 1) + " (distance " + std::to_string(d) +
                "); increase n or evaluate on the boundary by interpolation");
    }
    return cauchy_eval_unguarded(grid, fvals, z);
}

} // namespace cantorh
