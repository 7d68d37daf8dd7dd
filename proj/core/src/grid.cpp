#include "cantorh/grid.hpp"

#include <cmath>

namespace cantorh {

bool is_power_of_two(int n) {
    return n > 0 && (n & (n - 1)) == 0;
}

BoundaryGrid discretize(const CircularDomain& g, int n) {
    if (n < 4 || !is_power_of_two(n))
        throw ArgumentError("discretize: n must be a power of two >= 4");
    g.validate();

    BoundaryGrid grid;
    grid.domain = g;
    grid.n = n;
    const int m = g.count();
    grid.eta.resize(m * n);
    grid.etap.resize(m * n);
    for (int j = 0; j < m; ++j) {
        const double c = g.centers[static_cast<size_t>(j)];
        const double r = g.radii[static_cast<size_t>(j)];
        for (int i = 0; i < n; ++i) {
            const double s = 2.0 * pi * i / n;
            const complexd e(std::cos(s), -std::sin(s)); // e^{-is}
            grid.eta[j * n + i] = c + r * e;
            grid.etap[j * n + i] = complexd(0.0, -1.0) * r * e;
        }
    }
    return grid;
}

} // namespace cantorh
