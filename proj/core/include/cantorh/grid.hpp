#pragma once

#include "cantorh/geometry.hpp"
#include "cantorh/types.hpp"

namespace cantorh {

// Equispaced nodes s_i = 2*pi*i/n on each circle, parametrized clockwise:
// eta_j(s) = c_j + r_j e^{-is}, eta_j'(s) = -i r_j e^{-is}.  The clockwise
// orientation keeps the unbounded complement on the left, which fixes the
// signs of the kernel diagonal and of the Cauchy integral downstream.
// Node index i on circle j is flattened to j*n + i.
struct BoundaryGrid {
    CircularDomain domain;
    int n = 0;              // nodes per circle, power of two, >= 4
    Eigen::VectorXcd eta;   // m*n boundary points
    Eigen::VectorXcd etap;  // m*n tangents

    int m() const { return domain.count(); }
    int size() const { return m() * n; }
    double node(int i) const { return 2.0 * pi * i / n; }
};

// Builds the grid; n must be a power of two >= 4 (ArgumentError otherwise).
BoundaryGrid discretize(const CircularDomain& g, int n);

bool is_power_of_two(int n);

} // namespace cantorh
