#pragma once

#include <vector>

#include "cantorh/config.hpp"
#include "cantorh/conformal.hpp"
#include "cantorh/harmonic.hpp"
#include "cantorh/mobius.hpp"

namespace cantorh {

// Everything needed to evaluate the distribution function of one slit family
// at one basepoint: converged circular preimage, conformal map, harmonic
// measures, and the basepoint preimage with the measures evaluated there.
struct Pipeline {
    SlitDomain slits;
    Basepoint basepoint;
    RunConfig config;
    PreimageResult pre;      // converged circles + map + diagnostics
    Operators ops;           // operators on the converged circles
    HarmonicData harm;
    double zeta0 = 0.0;      // preimage of the basepoint
    Eigen::VectorXd sigma0;  // sigma_k(zeta0)

    int m() const { return slits.count(); }
    // Number of slit crossings the capture circle makes as r grows:
    // m for LeftExterior, m/2 for Center (symmetric pairs cross together).
    int crossings() const {
        return basepoint.mode == BasepointMode::LeftExterior ? m() : m() / 2;
    }
    // 0-based index of the circle sampled for crossing k (1-based).
    int circle_of(int k) const {
        return basepoint.mode == BasepointMode::LeftExterior ? k - 1
                                                             : m() / 2 + k - 1;
    }
};

// Builds the full pipeline (preimage iteration, map, harmonic data, sigma at
// the basepoint preimage).
Pipeline build_pipeline(const SlitDomain& d, const Basepoint& b,
                        const RunConfig& cfg);

// Same, but starting from known converged circles (snapshot reuse): verifies
// the circles reproduce the slits to 100*map_tol*m per slit, then skips the
// iteration.
Pipeline build_pipeline_from_circles(const SlitDomain& d, const Basepoint& b,
                                     const RunConfig& cfg,
                                     const CircularDomain& circles);

// Constant values of the distribution over the between-slit gaps:
// LeftExterior: omega_k = sum_{j<=k} sigma_j(zeta0), k = 1..m-1;
// Center: omega_k = sum_{j<=k} (sigma_{m/2-j+1} + sigma_{m/2+j})(zeta0),
// k = 1..m/2-1 (1-based circle labels).
std::vector<double> step_heights(const Pipeline& p);

// Capture radius for the crossing-k arc point at angle s (upper half of the
// circle is s in (pi, 2*pi)): the boundary image Re F(eta(s)) measured from
// the basepoint.  Monotone in s on (pi, 2*pi) by boundary correspondence.
double capture_radius(const Pipeline& p, int k, double s);

// Arc frame for crossing k at angle s; xi1 is the real circle point on the
// captured side (left point for LeftExterior; inner point for Center).
MobiusFrame make_frame(const Pipeline& p, int k, double s);

// Distribution value where the capture circle crosses slit k: the harmonic
// measure of the captured boundary, with the crossing circle handled by the
// psi/phi fields and the remaining circles by the piecewise-constant
// approximation through sigma_k (see intercept formulas in the .cpp).
double intercept_value(const Pipeline& p, int k, double s);

// Both at once (shares the frame construction).
struct ArcPoint {
    double r = 0.0;
    double h = 0.0;
};
ArcPoint intercept(const Pipeline& p, int k, double s);

// Size of the approximation committed by replacing the psi/phi fields with
// their values at the other circles' centers: max over the nodes of every
// other circle of |field(eta) - field(c_j)| for the crossing-k frame at s.
double constant_approx_spread(const Pipeline& p, int k, double s);

// Assembled distribution curve: constant steps over the gaps plus sampled
// arcs across each crossing.
struct StepSegment {
    double r_lo = 0.0;
    double r_hi = 0.0;
    double omega = 0.0;
    int k = 0; // 0 = leading zero segment, crossings() = trailing one segment
};

struct HCurve {
    BasepointMode mode = BasepointMode::LeftExterior;
    double lead_hi = 0.0;
    double trail_lo = 0.0;
    std::vector<StepSegment> steps;              // including lead/trail
    std::vector<std::vector<ArcPoint>> arcs;     // arcs[k-1] for crossing k
};

// Samples samples_per_slit points per crossing at angles offset half a
// spacing from the arc ends, merges with the gap steps, and audits global
// monotonicity (ConsistencyError beyond 1e-6 backward drift).
HCurve build_curve(const Pipeline& p, int samples_per_slit = 31);

// All curve samples plus step endpoints merged and sorted by radius.
std::vector<ArcPoint> merged_samples(const HCurve& c);

// Continuity of the curve at the slit ends: probes each arc at angle
// delta from its endpoints and compares with the adjacent step values.
struct ContinuityReport {
    double max_gap = 0.0;
    int worst_crossing = 0;
};
ContinuityReport continuity_audit(const Pipeline& p, double angle_delta = 1e-5);

} // namespace cantorh
