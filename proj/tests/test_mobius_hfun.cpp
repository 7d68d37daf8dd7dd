#include <doctest.h>

#include <cmath>

#include "cantorh/hfun.hpp"
#include "cantorh/reference.hpp"

using namespace cantorh;

namespace {

Pipeline left_pipeline(int level) {
    RunConfig cfg;
    cfg.level = level;
    return build_pipeline(cantor_level(level), Basepoint::left(), cfg);
}

Pipeline center_pipeline(int level) {
    RunConfig cfg;
    cfg.level = level;
    cfg.basepoint = BasepointMode::Center;
    return build_pipeline(cantor_level(level), Basepoint::center(), cfg);
}

} // namespace

TEST_CASE("mobius anchor images") {
    const complexd xi(0.3, 0.4);
    const double xi1 = -0.1; // circle center 0.3, radius 0.4
    CHECK(std::abs(mobius_psi(std::conj(xi), xi, xi1) - complexd(0.0, -1.0)) <
          1e-13);
    CHECK(std::abs(mobius_psi(xi1, xi, xi1) - complexd(1.0, 0.0)) < 1e-13);
    CHECK(std::abs(mobius_psi(xi, xi, xi1) - complexd(0.0, 1.0)) < 1e-13);

    CHECK(std::isinf(std::abs(mobius_phi(complexd(0.0, -1.0)))));
    CHECK(std::abs(mobius_phi(complexd(1.0, 0.0)) - complexd(-1.0, 0.0)) <
          1e-13);
    CHECK(std::abs(mobius_phi(complexd(0.0, 1.0))) < 1e-13);
}

TEST_CASE("angular-measure field takes indicator boundary values") {
    // Circle center 0.3, radius 0.4; xi at angle s = 3 pi / 2.
    const MobiusFrame frame{complexd(0.3, 0.4), -0.1};
    auto on_circle = [&](double t) {
        return complexd(0.3, 0.0) + 0.4 * std::exp(complexd(0.0, -t));
    };
    // Arc through xi1 (t = pi) between t = pi/2 and 3 pi/2: value 1.
    CHECK(psi_field(on_circle(pi), frame) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(psi_field(on_circle(2.0), frame) == doctest::Approx(1.0).epsilon(1e-12));
    // Complementary arc: value 0.
    CHECK(std::abs(psi_field(on_circle(0.0), frame)) < 1e-12);
    CHECK(std::abs(psi_field(on_circle(0.5), frame)) < 1e-12);
    // Interior values lie strictly between.
    for (complexd z : {complexd(2.0, 1.0), complexd(-1.0, 0.5),
                       complexd(0.3, 2.0)}) {
        const double v = psi_field(z, frame);
        CHECK(v > 0.0);
        CHECK(v < 1.0);
    }
    CHECK_THROWS_AS(psi_field(frame.xi, frame), EndpointError);
    CHECK_THROWS_AS(psi_field(std::conj(frame.xi), frame), EndpointError);
}

TEST_CASE("mirror companion equals the field reflected through the origin") {
    const MobiusFrame frame{complexd(0.3, 0.4), -0.1};
    for (double x : {-2.0, -0.9, 0.0, 1.4, 3.0}) {
        CHECK(phi_field(complexd(x, 0.0), frame) ==
              doctest::Approx(psi_field(complexd(-x, 0.0), frame))
                  .epsilon(1e-12));
    }
}

TEST_CASE("left pipeline structure at level 2") {
    const Pipeline p = left_pipeline(2);
    CHECK(p.m() == 4);
    CHECK(p.crossings() == 4);
    CHECK(p.circle_of(1) == 0);
    CHECK(p.circle_of(4) == 3);
    CHECK(p.zeta0 == doctest::Approx(-1.49777061301).epsilon(1e-9));

    const std::vector<double> omega = step_heights(p);
    const std::vector<double>& ref = reference_steps_left(4);
    REQUIRE(omega.size() == ref.size());
    for (size_t i = 0; i < ref.size(); ++i)
        CHECK(std::abs(omega[i] - ref[i]) <= 1e-7);
    // Heights increase strictly inside (0, 1).
    double prev = 0.0;
    for (double w : omega) {
        CHECK(w > prev);
        CHECK(w < 1.0);
        prev = w;
    }
}

TEST_CASE("center pipeline structure at levels 2 and 3") {
    const Pipeline p2 = center_pipeline(2);
    CHECK(p2.m() == 4);
    CHECK(p2.crossings() == 2);
    CHECK(p2.circle_of(1) == 2);
    CHECK(p2.circle_of(2) == 3);
    CHECK(p2.zeta0 == 0.0);
    const std::vector<double> omega2 = step_heights(p2);
    REQUIRE(omega2.size() == 1);
    CHECK(std::abs(omega2[0] - reference_steps_center(4)[0]) <= 1e-7);

    const Pipeline p3 = center_pipeline(3);
    const std::vector<double> omega3 = step_heights(p3);
    const std::vector<double>& ref3 = reference_steps_center(8);
    REQUIRE(omega3.size() == ref3.size());
    for (size_t i = 0; i < ref3.size(); ++i)
        CHECK(std::abs(omega3[i] - ref3[i]) <= 1e-7);
}

TEST_CASE("capture radius spans each crossing monotonically") {
    const Pipeline p = left_pipeline(1);
    CHECK(capture_radius(p, 1, pi) == doctest::Approx(1.0).epsilon(1e-10));
    double prev = capture_radius(p, 1, pi);
    for (int j = 1; j <= 12; ++j) {
        const double r = capture_radius(p, 1, pi + j * (pi - 0.05) / 12);
        CHECK(r > prev);
        prev = r;
    }
    // Top of the first crossing approaches the far tip distance 4/3.
    CHECK(capture_radius(p, 1, 2.0 * pi - 1e-6) ==
          doctest::Approx(4.0 / 3).epsilon(1e-5));
    // Second crossing spans (5/3, 2).
    CHECK(capture_radius(p, 2, pi) == doctest::Approx(5.0 / 3).epsilon(1e-10));
    CHECK(capture_radius(p, 2, 2.0 * pi - 1e-6) ==
          doctest::Approx(2.0).epsilon(1e-5));
    CHECK_THROWS_AS(capture_radius(p, 0, pi), ArgumentError);
    CHECK_THROWS_AS(capture_radius(p, 3, pi), ArgumentError);
}

TEST_CASE("arc frame geometry") {
    const Pipeline p = left_pipeline(1);
    const double s = pi + 0.7;
    const MobiusFrame f = make_frame(p, 1, s);
    const double c = p.pre.domain.centers[0];
    const double r = p.pre.domain.radii[0];
    CHECK(std::abs(f.xi - (complexd(c, 0.0) +
                           r * std::exp(complexd(0.0, -s)))) < 1e-15);
    CHECK(f.xi1 == doctest::Approx(c - r).epsilon(1e-15));
    CHECK(f.xi.imag() > 0.0); // upper half for s in (pi, 2 pi)
}

TEST_CASE("intercept values rise from one plateau to the next") {
    const Pipeline p = left_pipeline(2);
    const std::vector<double> omega = step_heights(p);
    for (int k = 1; k <= p.crossings(); ++k) {
        const double below = k == 1 ? 0.0 : omega[k - 2];
        const double above =
            k == p.crossings() ? 1.0 : omega[k - 1];
        double prev = below - 1e-9;
        for (int j = 1; j <= 9; ++j) {
            const double s = pi + j * pi / 10.0;
            const double u = intercept_value(p, k, s);
            CHECK(u > prev);
            prev = u;
        }
        CHECK(std::abs(intercept_value(p, k, pi + 1e-5) - below) < 1e-4);
        CHECK(std::abs(intercept_value(p, k, 2.0 * pi - 1e-5) - above) < 1e-4);
    }
}

TEST_CASE("curve assembly counts and ordering") {
    const Pipeline p = left_pipeline(2);
    const HCurve c = build_curve(p, 31);
    CHECK(c.steps.size() == 5); // lead + 3 gaps + trail
    CHECK(c.steps.front().k == 0);
    CHECK(c.steps.front().omega == 0.0);
    CHECK(c.steps.back().k == 4);
    CHECK(c.steps.back().omega == 1.0);
    REQUIRE(c.arcs.size() == 4);
    for (const auto& arc : c.arcs)
        CHECK(arc.size() == 31);

    const auto merged = merged_samples(c);
    CHECK(merged.size() == 10 + 4 * 31);
    for (size_t i = 0; i + 1 < merged.size(); ++i) {
        CHECK(merged[i].r <= merged[i + 1].r);
        CHECK(merged[i + 1].h >= merged[i].h - 1e-6);
    }
    for (const auto& pt : merged) {
        CHECK(pt.h >= -1e-8);
        CHECK(pt.h <= 1.0 + 1e-8);
    }

    // Deterministic: a second assembly is bitwise identical.
    const HCurve c2 = build_curve(p, 31);
    for (size_t k = 0; k < c.arcs.size(); ++k)
        for (size_t i = 0; i < c.arcs[k].size(); ++i) {
            CHECK(c.arcs[k][i].r == c2.arcs[k][i].r);
            CHECK(c.arcs[k][i].h == c2.arcs[k][i].h);
        }

    CHECK_THROWS_AS(build_curve(p, 0), ArgumentError);
}

TEST_CASE("center curve assembly at level 2") {
    const Pipeline p = center_pipeline(2);
    const HCurve c = build_curve(p, 31);
    CHECK(c.steps.size() == 3); // lead + 1 gap + trail
    REQUIRE(c.arcs.size() == 2);
    const auto merged = merged_samples(c);
    for (size_t i = 0; i + 1 < merged.size(); ++i)
        CHECK(merged[i + 1].h >= merged[i].h - 1e-6);
}

TEST_CASE("arc ends meet the plateaus") {
    for (int level : {1, 2}) {
        const ContinuityReport rep = continuity_audit(left_pipeline(level));
        CHECK(rep.max_gap <= 1e-4);
        CHECK(rep.worst_crossing >= 1);
    }
    CHECK(continuity_audit(center_pipeline(2)).max_gap <= 1e-4);
}

TEST_CASE("snapshot circles are verified before reuse") {
    const Pipeline p = left_pipeline(1);
    RunConfig cfg;
    cfg.level = 1;

    // The converged family round-trips.
    const Pipeline q = build_pipeline_from_circles(
        cantor_level(1), Basepoint::left(), cfg, p.pre.domain);
    CHECK(q.pre.iterations == 0);
    CHECK(std::abs(q.zeta0 - p.zeta0) < 1e-13);

    // A tampered radius is rejected.
    CircularDomain bad = p.pre.domain;
    bad.radii[0] *= 1.0 + 1e-6;
    CHECK_THROWS_AS(build_pipeline_from_circles(cantor_level(1),
                                                Basepoint::left(), cfg, bad),
                    ConsistencyError);
    // A wrong circle count is rejected up front.
    CHECK_THROWS_AS(build_pipeline_from_circles(cantor_level(2),
                                                Basepoint::left(), cfg,
                                                p.pre.domain),
                    ArgumentError);
}

TEST_CASE("center mode needs at least one slit pair") {
    RunConfig cfg;
    cfg.level = 0;
    cfg.basepoint = BasepointMode::Center;
    CHECK_THROWS_AS(
        build_pipeline(cantor_level(0), Basepoint::center(), cfg),
        GeometryError);
}

TEST_CASE("run configuration validation") {
    RunConfig cfg;
    cfg.level = -1;
    CHECK_THROWS_AS(cfg.validate(), ArgumentError);
    cfg.level = 1;
    cfg.map_tol = 0.0;
    CHECK_THROWS_AS(cfg.validate(), ArgumentError);
    cfg.map_tol = 1e-14;
    cfg.asym_count = 2;
    CHECK_THROWS_AS(cfg.validate(), ArgumentError);
    cfg.asym_count = 20;
    CHECK_NOTHROW(cfg.validate());
}
