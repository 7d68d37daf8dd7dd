#include "cantorh/asymfit.hpp"

#include <cmath>
#include <string>

namespace cantorh {

double capture_threshold(const Pipeline& p) { return capture_radius(p, 1, pi); }

std::vector<ThresholdSample> sample_near_threshold(const Pipeline& p, double eps,
                                                   int count) {
    if (eps <= 0.0)
        throw ArgumentError("sample_near_threshold: eps must be positive");
    if (count < 3)
        throw ArgumentError("sample_near_threshold: need at least three samples");
    const double rstar = capture_threshold(p);
    std::vector<ThresholdSample> out;
    out.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) {
        // Radii rstar + eps * 10^t with t sweeping -3..0.
        const double t = -3.0 + 3.0 * i / (count - 1);
        const double target = rstar + eps * std::pow(10.0, t);
        double lo = pi;
        double hi = pi + 0.5;
        const double f_lo = capture_radius(p, 1, lo) - target;
        const double f_hi = capture_radius(p, 1, hi) - target;
        if (!(f_lo < 0.0) || !(f_hi > 0.0))
            throw SamplingError(
                "sample_near_threshold: radius target not bracketed by the arc");
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (capture_radius(p, 1, mid) - target < 0.0)
                lo = mid;
            else
                hi = mid;
        }
        const double s = 0.5 * (lo + hi);
        out.push_back({capture_radius(p, 1, s), intercept_value(p, 1, s)});
    }
    return out;
}

FitResult fit_power_law(const std::vector<ThresholdSample>& samples,
                        double rstar) {
    if (samples.size() < 3)
        throw ArgumentError("fit_power_law: need at least three samples");
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const auto& pt : samples) {
        const double dr = pt.r - rstar;
        if (dr <= 0.0)
            throw ArgumentError("fit_power_law: sample radius at or below rstar");
        if (pt.h <= 0.0)
            throw ArgumentError("fit_power_law: nonpositive distribution value");
        const double x = std::log(dr);
        const double y = std::log(pt.h);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(samples.size());
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0)
        throw ArgumentError("fit_power_law: degenerate abscissae");
    FitResult fit;
    fit.beta = (n * sxy - sx * sy) / denom;
    fit.C = std::exp((sy - fit.beta * sx) / n);
    fit.rstar = rstar;
    fit.samples = samples;
    for (const auto& pt : samples) {
        const double model = fit.C * std::pow(pt.r - rstar, fit.beta);
        fit.E += (pt.h - model) * (pt.h - model);
    }
    return fit;
}

FitResult fit_threshold_law(const Pipeline& p, double eps, int count) {
    return fit_power_law(sample_near_threshold(p, eps, count),
                         capture_threshold(p));
}

GrowthFit fit_exp_growth(const std::vector<int>& levels,
                         const std::vector<double>& amplitudes) {
    if (levels.size() != amplitudes.size())
        throw ArgumentError("fit_exp_growth: level/amplitude size mismatch");
    if (levels.size() < 2)
        throw ArgumentError("fit_exp_growth: need at least two levels");
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (size_t i = 0; i < levels.size(); ++i) {
        if (amplitudes[i] <= 0.0)
            throw ArgumentError("fit_exp_growth: nonpositive amplitude");
        const double x = static_cast<double>(levels[i]);
        const double y = std::log(amplitudes[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(levels.size());
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0)
        throw ArgumentError("fit_exp_growth: degenerate levels");
    GrowthFit fit;
    fit.b = (n * sxy - sx * sy) / denom;
    fit.A = std::exp((sy - fit.b * sx) / n);
    for (size_t i = 0; i < levels.size(); ++i) {
        const double model = fit.A * std::exp(fit.b * levels[i]);
        fit.E += (amplitudes[i] - model) * (amplitudes[i] - model);
    }
    return fit;
}

std::pair<double, double> exact_C0() {
    return {2.0 * std::sqrt(2.0) / pi, 0.5};
}

} // namespace cantorh
