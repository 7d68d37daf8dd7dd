#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "cantorh/asymfit.hpp"
#include "cantorh/hfun.hpp"

namespace cantorh {

// Formats a double with the given number of significant digits (shortest
// round-trip style, locale independent).
std::string format_sig(double value, int digits = 12);

// Step-height table, one row per plateau including the leading zero and
// trailing unit segments:
//   level,mode,k,r_lo,r_hi,omega
void write_steps_csv(std::ostream& os, int level, BasepointMode mode,
                     const HCurve& curve);

// Full curve samples, merged and sorted by radius:
//   r,h,segment_type,slit_index
// segment_type is "step" for plateau endpoints and "arc" for interior arc
// samples.
void write_curve_csv(std::ostream& os, const HCurve& curve);

// Converged circle family for one (level, nodes, tolerance) configuration,
// reusable to skip the preimage iteration on later runs.
struct PremapSnapshot {
    int level = 0;
    int nodes = 0;
    double tol = 0.0;
    std::vector<double> centers;
    std::vector<double> radii;
    double criterion = 0.0;
    int iterations = 0;
};

PremapSnapshot make_snapshot(int level, const RunConfig& cfg,
                             const PreimageResult& pre);

nlohmann::json snapshot_to_json(const PremapSnapshot& snap);
PremapSnapshot snapshot_from_json(const nlohmann::json& j);

// Loads a snapshot and checks it matches the requested configuration key
// (level, nodes, tolerance); throws ConsistencyError on mismatch.
CircularDomain snapshot_circles(const PremapSnapshot& snap, int level,
                                const RunConfig& cfg);

nlohmann::json domain_to_json(const SlitDomain& d);
nlohmann::json schedule_to_json(const GapSchedule& g);
nlohmann::json fit_to_json(const FitResult& fit);
nlohmann::json growth_to_json(const GrowthFit& fit);

} // namespace cantorh
