#pragma once

#include <cstdint>
#include <vector>

#include "cantorh/errors.hpp"

namespace cantorh {

// Family of m equal-length collinear slits on the real axis.  The Cantor
// construction keeps exact integer coordinates (numerators over 3^level), so
// deep levels carry no accumulated rounding; centers/length are the rounded
// doubles used by the numerics.
struct SlitDomain {
    int level = 0;                        // -1 for custom (non-Cantor) families
    std::vector<std::int64_t> numerators; // empty for custom families
    std::int64_t denominator = 1;
    std::vector<double> centers;          // ascending
    double length = 1.0;

    int count() const { return static_cast<int>(centers.size()); }

    // Explicit family for tests; validates ascending order and disjointness.
    static SlitDomain custom(std::vector<double> centers, double length);
};

// Level-l middle-thirds slit family: m = 2^l slits of length 3^-l whose union
// lies in [-1/2, 1/2].  Throws CapacityError when 2^l exceeds max_slits.
SlitDomain cantor_level(int level, int max_slits = 4096);

enum class BasepointMode { LeftExterior, Center };

// Observation point of the capture circles.  z0 = -3/2 for LeftExterior,
// 0 for Center; in Center mode the basepoint must fall in the central gap,
// which requires level >= 1.
struct Basepoint {
    BasepointMode mode = BasepointMode::LeftExterior;
    double z0 = -1.5;

    static Basepoint left() { return {BasepointMode::LeftExterior, -1.5}; }
    static Basepoint center() { return {BasepointMode::Center, 0.0}; }
};

const char* to_string(BasepointMode mode); // "left" / "center"

// Radius intervals on which the distribution is constant: a leading interval
// with value 0, the between-slit gaps with the step values, and a trailing
// threshold past which the value is 1.  All bounds from exact integer
// arithmetic on the slit coordinates.
struct GapSchedule {
    struct Gap {
        double r_lo = 0.0;
        double r_hi = 0.0;
        int k = 0; // 1-based step index
    };
    double lead_hi = 0.0;  // value 0 on [0, lead_hi]
    double trail_lo = 0.0; // value 1 on [trail_lo, inf)
    std::vector<Gap> gaps; // m-1 gaps (LeftExterior) or m/2-1 (Center)
};

GapSchedule gap_schedule(const SlitDomain& d, const Basepoint& b);

// Disjoint circles centered on the real axis.
struct CircularDomain {
    std::vector<double> centers;
    std::vector<double> radii;

    int count() const { return static_cast<int>(centers.size()); }
    // Throws GeometryError unless all circles are pairwise disjoint with
    // positive separation and radii are positive.
    void validate() const;
};

// Starting circles of the preimage iteration: centered at the slit centers
// with radius length/2.
CircularDomain initial_circles(const SlitDomain& d);

} // namespace cantorh
