#include "cantorh/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cantorh {

SlitDomain SlitDomain::custom(std::vector<double> centers, double length) {
    if (centers.empty() || length <= 0.0)
        throw ArgumentError("custom slit family needs at least one center and positive length");
    for (size_t j = 0; j + 1 < centers.size(); ++j)
        if (!(centers[j + 1] - centers[j] > length))
            throw GeometryError("custom slit family has overlapping or unordered slits");
    SlitDomain d;
    d.level = -1;
    d.denominator = 1;
    d.centers = std::move(centers);
    d.length = length;
    return d;
}

SlitDomain cantor_level(int level, int max_slits) {
    if (level < 0)
        throw ArgumentError("cantor_level: level must be nonnegative");
    if (level >= 31 || (1LL << level) > max_slits)
        throw CapacityError("cantor_level: 2^level exceeds the configured slit maximum (" +
                            std::to_string(max_slits) + ")");

    // Numerators over 3^level: start from {0}; each refinement shifts the
    // previous set by -3^(i) and +3^(i) around its own scale.  Equivalent to
    // scaling the level-(l-1) set by 1/3 and translating by -1/3 and +1/3.
    std::vector<std::int64_t> num{0};
    std::int64_t power = 1; // 3^i
    for (int i = 0; i < level; ++i) {
        std::vector<std::int64_t> next;
        next.reserve(num.size() * 2);
        for (std::int64_t x : num)
            next.push_back(x - power);
        for (std::int64_t x : num)
            next.push_back(x + power);
        num.swap(next);
        power *= 3;
    }
    std::sort(num.begin(), num.end());

    SlitDomain d;
    d.level = level;
    d.numerators = std::move(num);
    d.denominator = power; // 3^level
    d.centers.reserve(d.numerators.size());
    for (std::int64_t x : d.numerators)
        d.centers.push_back(static_cast<double>(x) / static_cast<double>(d.denominator));
    d.length = 1.0 / static_cast<double>(d.denominator);
    return d;
}

const char* to_string(BasepointMode mode) {
    return mode == BasepointMode::LeftExterior ? "left" : "center";
}

GapSchedule gap_schedule(const SlitDomain& d, const Basepoint& b) {
    const int m = d.count();
    GapSchedule g;

    // Exact rational endpoints when the Cantor numerators are available:
    // slit j spans [(2 num_j - 1) / (2 den), (2 num_j + 1) / (2 den)].
    auto left_end = [&](int j) {
        if (d.level >= 0)
            return static_cast<double>(2 * d.numerators[static_cast<size_t>(j)] - 1) /
                   static_cast<double>(2 * d.denominator);
        return d.centers[static_cast<size_t>(j)] - d.length / 2;
    };
    auto right_end = [&](int j) {
        if (d.level >= 0)
            return static_cast<double>(2 * d.numerators[static_cast<size_t>(j)] + 1) /
                   static_cast<double>(2 * d.denominator);
        return d.centers[static_cast<size_t>(j)] + d.length / 2;
    };

    if (b.mode == BasepointMode::LeftExterior) {
        g.lead_hi = left_end(0) - b.z0;
        g.trail_lo = right_end(m - 1) - b.z0;
        for (int k = 1; k < m; ++k)
            g.gaps.push_back({right_end(k - 1) - b.z0, left_end(k) - b.z0, k});
    } else {
        if (m < 2 || m % 2 != 0)
            throw GeometryError("center basepoint requires an even slit count >= 2");
        if (!(left_end(m / 2) > 0.0))
            throw GeometryError("center basepoint lies on or touches a slit");
        g.lead_hi = left_end(m / 2);
        g.trail_lo = right_end(m - 1);
        for (int k = 1; k < m / 2; ++k)
            g.gaps.push_back({right_end(m / 2 + k - 1), left_end(m / 2 + k), k});
    }
    return g;
}

void CircularDomain::validate() const {
    if (centers.size() != radii.size() || centers.empty())
        throw GeometryError("circular domain: centers/radii size mismatch or empty");
    for (double r : radii)
        if (!(r > 0.0) || !std::isfinite(r))
            throw GeometryError("circular domain: radii must be positive and finite");
    for (size_t i = 0; i < centers.size(); ++i)
        for (size_t j = i + 1; j < centers.size(); ++j) {
            double dist = std::abs(centers[i] - centers[j]);
            if (!(dist > radii[i] + radii[j]))
                throw GeometryError("circular domain: circles overlap or touch");
        }
}

CircularDomain initial_circles(const SlitDomain& d) {
    CircularDomain g;
    g.centers = d.centers;
    g.radii.assign(d.centers.size(), d.length / 2);
    return g;
}

} // namespace cantorh
