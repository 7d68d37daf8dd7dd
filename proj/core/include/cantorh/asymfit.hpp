#pragma once

#include <utility>
#include <vector>

#include "cantorh/hfun.hpp"

namespace cantorh {

// One sample of the distribution function just above the capture threshold.
struct ThresholdSample {
    double r = 0.0; // capture radius
    double h = 0.0; // distribution value at that radius
};

// Power-law model h(r) ~ C * (r - rstar)^beta fitted near the threshold.
struct FitResult {
    double C = 0.0;
    double beta = 0.0;
    double E = 0.0;     // sum of squared residuals in original variables
    double rstar = 0.0; // capture threshold the samples approach
    std::vector<ThresholdSample> samples;
};

// Exponential growth model C_l ~ A * exp(b * l) across refinement levels.
struct GrowthFit {
    double A = 0.0;
    double b = 0.0;
    double E = 0.0; // sum of squared residuals in original variables
};

// Samples the first arc of the curve at radii rstar + eps * 10^{-3..0},
// locating each radius by bisection in the arc parameter.  rstar is the
// capture radius of the first crossing at the bottom of its arc.
std::vector<ThresholdSample> sample_near_threshold(const Pipeline& p,
                                                   double eps = 1e-6,
                                                   int count = 20);

// Capture threshold used by sample_near_threshold.
double capture_threshold(const Pipeline& p);

// Least-squares fit of log h against log(r - rstar).
FitResult fit_power_law(const std::vector<ThresholdSample>& samples,
                        double rstar);

// Convenience: sample near the threshold and fit in one call.
FitResult fit_threshold_law(const Pipeline& p, double eps = 1e-6,
                            int count = 20);

// Least-squares fit of log C against the refinement level.
GrowthFit fit_exp_growth(const std::vector<int>& levels,
                         const std::vector<double>& amplitudes);

// Closed-form amplitude and exponent for the single-slit left basepoint:
// C = 2*sqrt(2)/pi, beta = 1/2.
std::pair<double, double> exact_C0();

} // namespace cantorh
