#include "cantorh/hfun.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

namespace cantorh {

namespace {

Pipeline finish_pipeline(Pipeline p) {
    p.ops = make_operators(p.pre.domain, p.config.nodes);
    p.harm = build_harmonic_data(p.ops, p.config.solver_tol, p.config.solver_maxit);
    p.zeta0 = invert_on_axis(p.pre.map, p.basepoint);
    p.sigma0 = sigma_at(p.ops, p.harm, complexd(p.zeta0, 0.0));
    return p;
}

} // namespace

Pipeline build_pipeline(const SlitDomain& d, const Basepoint& b,
                        const RunConfig& cfg) {
    cfg.validate();
    if (b.mode == BasepointMode::Center && d.count() < 2)
        throw GeometryError("center basepoint requires at least two slits");
    Pipeline p;
    p.slits = d;
    p.basepoint = b;
    p.config = cfg;
    p.pre = find_preimage(d, cfg.nodes, cfg.map_tol, cfg.max_iter, cfg.solver_tol,
                          cfg.solver_maxit);
    return finish_pipeline(std::move(p));
}

Pipeline build_pipeline_from_circles(const SlitDomain& d, const Basepoint& b,
                                     const RunConfig& cfg,
                                     const CircularDomain& circles) {
    cfg.validate();
    if (circles.count() != d.count())
        throw ArgumentError("snapshot circles do not match the slit count");
    Pipeline p;
    p.slits = d;
    p.basepoint = b;
    p.config = cfg;
    p.pre.domain = circles;
    const Operators ops = make_operators(circles, cfg.nodes);
    p.pre.map = map_from_circular(ops, cfg.solver_tol, cfg.solver_maxit);
    const SlitImage img = slit_image(p.pre.map);
    double crit = 0.0;
    for (int j = 0; j < d.count(); ++j) {
        const double res = std::abs(img.centers[static_cast<size_t>(j)] -
                                    d.centers[static_cast<size_t>(j)]) +
                           std::abs(img.lengths[static_cast<size_t>(j)] - d.length);
        p.pre.max_slit_residual = std::max(p.pre.max_slit_residual, res);
        crit += res;
    }
    p.pre.criterion = crit / (2.0 * d.count());
    p.pre.iterations = 0;
    if (p.pre.max_slit_residual > 100.0 * cfg.map_tol * d.count()) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.3e", p.pre.max_slit_residual);
        throw ConsistencyError(
            std::string("snapshot circles do not reproduce the slit family "
                        "(residual ") +
            buf + ")");
    }
    return finish_pipeline(std::move(p));
}

std::vector<double> step_heights(const Pipeline& p) {
    const int m = p.m();
    std::vector<double> omega;
    if (p.basepoint.mode == BasepointMode::LeftExterior) {
        double acc = 0.0;
        for (int k = 1; k < m; ++k) {
            acc += p.sigma0[k - 1];
            omega.push_back(acc);
        }
    } else {
        double acc = 0.0;
        for (int k = 1; k < m / 2; ++k) {
            acc += p.sigma0[m / 2 - k] + p.sigma0[m / 2 + k - 1];
            omega.push_back(acc);
        }
    }
    return omega;
}

double capture_radius(const Pipeline& p, int k, double s) {
    if (k < 1 || k > p.crossings())
        throw ArgumentError("capture_radius: crossing index out of range");
    const double base = p.pre.map.boundary_re_F(p.circle_of(k), s);
    return p.basepoint.mode == BasepointMode::LeftExterior ? base - p.basepoint.z0
                                                           : base;
}

MobiusFrame make_frame(const Pipeline& p, int k, double s) {
    if (k < 1 || k > p.crossings())
        throw ArgumentError("make_frame: crossing index out of range");
    const int j = p.circle_of(k);
    const double c = p.pre.domain.centers[static_cast<size_t>(j)];
    const double r = p.pre.domain.radii[static_cast<size_t>(j)];
    return MobiusFrame{complexd(c + r * std::cos(s), -r * std::sin(s)), c - r};
}

double intercept_value(const Pipeline& p, int k, double s) {
    const int m = p.m();
    const MobiusFrame frame = make_frame(p, k, s);
    const complexd z0(p.zeta0, 0.0);
    auto center = [&](int j) {
        return complexd(p.pre.domain.centers[static_cast<size_t>(j)], 0.0);
    };

    if (p.basepoint.mode == BasepointMode::LeftExterior) {
        const int kk = k - 1; // 0-based crossing circle
        double val = psi_field(z0, frame);
        for (int j = 0; j < kk; ++j)
            val += p.sigma0[j];
        for (int j = 0; j < m; ++j) {
            if (j == kk)
                continue;
            val -= psi_field(center(j), frame) * p.sigma0[j];
        }
        return val;
    }

    const int jr = m / 2 + k - 1; // crossing circle (right of the pair)
    const int jl = m / 2 - k;     // mirrored circle (left of the pair)
    double val = psi_field(z0, frame) + phi_field(z0, frame);
    for (int j = 1; j < k; ++j)
        val += p.sigma0[m / 2 - j] + p.sigma0[m / 2 + j - 1];
    for (int j = 1; j <= m / 2; ++j) {
        if (j == k)
            continue;
        const int left = m / 2 - j;
        const int right = m / 2 + j - 1;
        val -= (psi_field(center(left), frame) + phi_field(center(left), frame)) *
               p.sigma0[left];
        val -= (psi_field(center(right), frame) + phi_field(center(right), frame)) *
               p.sigma0[right];
    }
    val -= psi_field(center(jl), frame) * p.sigma0[jl];
    val -= phi_field(center(jr), frame) * p.sigma0[jr];
    return val;
}

ArcPoint intercept(const Pipeline& p, int k, double s) {
    return ArcPoint{capture_radius(p, k, s), intercept_value(p, k, s)};
}

double constant_approx_spread(const Pipeline& p, int k, double s) {
    const int m = p.m();
    const int n = p.config.nodes;
    const MobiusFrame frame = make_frame(p, k, s);
    auto center = [&](int j) {
        return complexd(p.pre.domain.centers[static_cast<size_t>(j)], 0.0);
    };
    const int crossing = p.circle_of(k);
    const int mirror =
        p.basepoint.mode == BasepointMode::Center ? m / 2 - k : -1;

    double worst = 0.0;
    for (int j = 0; j < m; ++j) {
        // Field whose value at circle j is replaced by its center value.
        std::function<double(complexd)> field;
        if (p.basepoint.mode == BasepointMode::LeftExterior) {
            if (j == crossing)
                continue;
            field = [&](complexd z) { return psi_field(z, frame); };
        } else if (j == crossing) {
            field = [&](complexd z) { return phi_field(z, frame); };
        } else if (j == mirror) {
            field = [&](complexd z) { return psi_field(z, frame); };
        } else {
            field = [&](complexd z) {
                return psi_field(z, frame) + phi_field(z, frame);
            };
        }
        const double at_center = field(center(j));
        for (int i = 0; i < n; ++i)
            worst = std::max(worst,
                             std::abs(field(p.ops.grid.eta[j * n + i]) - at_center));
    }
    return worst;
}

HCurve build_curve(const Pipeline& p, int samples_per_slit) {
    if (samples_per_slit < 1)
        throw ArgumentError("build_curve: samples_per_slit must be positive");
    const GapSchedule gaps = gap_schedule(p.slits, p.basepoint);
    const std::vector<double> omega = step_heights(p);

    HCurve curve;
    curve.mode = p.basepoint.mode;
    curve.lead_hi = gaps.lead_hi;
    curve.trail_lo = gaps.trail_lo;
    curve.steps.push_back({0.0, gaps.lead_hi, 0.0, 0});
    for (const auto& gap : gaps.gaps)
        curve.steps.push_back(
            {gap.r_lo, gap.r_hi, omega[static_cast<size_t>(gap.k - 1)], gap.k});
    curve.steps.push_back({gaps.trail_lo, gaps.trail_lo * 1.25, 1.0, p.crossings()});

    curve.arcs.resize(static_cast<size_t>(p.crossings()));
    for (int k = 1; k <= p.crossings(); ++k) {
        auto& arc = curve.arcs[static_cast<size_t>(k - 1)];
        arc.reserve(static_cast<size_t>(samples_per_slit));
        for (int j = 1; j <= samples_per_slit; ++j) {
            const double s = pi + (j - 0.5) * pi / samples_per_slit;
            arc.push_back(intercept(p, k, s));
        }
    }

    const auto merged = merged_samples(curve);
    for (size_t i = 0; i + 1 < merged.size(); ++i)
        if (merged[i + 1].h < merged[i].h - 1e-6)
            throw ConsistencyError(
                "build_curve: merged curve loses monotonicity near r = " +
                std::to_string(merged[i + 1].r));
    for (const auto& pt : merged)
        if (pt.h < -1e-8 || pt.h > 1.0 + 1e-8)
            throw ConsistencyError("build_curve: value outside [0, 1] at r = " +
                                   std::to_string(pt.r));
    return curve;
}

std::vector<ArcPoint> merged_samples(const HCurve& c) {
    std::vector<ArcPoint> all;
    for (const auto& st : c.steps) {
        all.push_back({st.r_lo, st.omega});
        all.push_back({st.r_hi, st.omega});
    }
    for (const auto& arc : c.arcs)
        all.insert(all.end(), arc.begin(), arc.end());
    std::sort(all.begin(), all.end(), [](const ArcPoint& a, const ArcPoint& b) {
        return a.r < b.r || (a.r == b.r && a.h < b.h);
    });
    return all;
}

ContinuityReport continuity_audit(const Pipeline& p, double angle_delta) {
    const std::vector<double> omega = step_heights(p);
    ContinuityReport report;
    for (int k = 1; k <= p.crossings(); ++k) {
        const double below = k == 1 ? 0.0 : omega[static_cast<size_t>(k - 2)];
        const double above =
            k == p.crossings() ? 1.0 : omega[static_cast<size_t>(k - 1)];
        const double gap_lo =
            std::abs(intercept_value(p, k, pi + angle_delta) - below);
        const double gap_hi =
            std::abs(intercept_value(p, k, 2.0 * pi - angle_delta) - above);
        const double worst = std::max(gap_lo, gap_hi);
        if (worst > report.max_gap) {
            report.max_gap = worst;
            report.worst_crossing = k;
        }
    }
    return report;
}

} // namespace cantorh
