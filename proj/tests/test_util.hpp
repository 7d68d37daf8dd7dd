#pragma once

#include <random>
#include <vector>

#include "cantorh/geometry.hpp"
#include "cantorh/types.hpp"

namespace testutil {

// Deterministic points in [lo, hi]^2 at least margin*r_j away from every
// circle center (well outside the circles and the quadrature guard).
inline std::vector<cantorh::complexd>
exterior_points(const cantorh::CircularDomain& d, int count, double lo,
                double hi, unsigned seed = 7, double margin = 4.0) {
    std::mt19937_64 rng(seed);
    auto uniform = [&]() {
        return lo + (hi - lo) * ((rng() >> 11) * 0x1.0p-53);
    };
    std::vector<cantorh::complexd> pts;
    while (static_cast<int>(pts.size()) < count) {
        const cantorh::complexd z(uniform(), uniform());
        bool ok = true;
        for (int j = 0; j < d.count(); ++j)
            if (std::abs(z - cantorh::complexd(d.centers[static_cast<size_t>(j)],
                                               0.0)) <
                margin * d.radii[static_cast<size_t>(j)])
                ok = false;
        if (ok)
            pts.push_back(z);
    }
    return pts;
}

} // namespace testutil
