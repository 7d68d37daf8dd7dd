#include <doctest.h>

#include <cmath>

#include "cantorh/conformal.hpp"

using namespace cantorh;

TEST_CASE("single-circle map is the classical slit map") {
    // The circle |zeta| = 1/4 maps to the slit [-1/2, 1/2] under
    // F(zeta) = zeta + 1/(16 zeta).
    CircularDomain d;
    d.centers = {0.0};
    d.radii = {0.25};
    const Operators ops = make_operators(d, 16);
    const ConformalMap map = map_from_circular(ops);

    CHECK(std::abs(map.nu[0]) < 1e-12);
    CHECK(map.nu_spread < 1e-12);

    // Interior evaluation is Cauchy quadrature whose error decays like
    // (r/|z|)^n, so points near the circle need the finer grid to reach
    // 1e-12; the coarse grid must still obey its own bound.
    auto exact_F = [](complexd z) { return z + 1.0 / (16.0 * z); };
    const ConformalMap fine = map_from_circular(make_operators(d, 64));
    for (complexd z : {complexd(1.0, 0.0), complexd(0.0, 0.7),
                       complexd(-2.0, 0.5), complexd(0.5, -0.6)}) {
        CHECK(std::abs(fine.F(z) - exact_F(z)) < 1e-12);
        const double bound = 4.0 * std::pow(0.25 / std::abs(z), 16);
        CHECK(std::abs(map.F(z) - exact_F(z)) < bound + 1e-13);
    }

    // Boundary values: Re F(eta(s)) = 2 r cos s, so mu(s) = r cos s.
    for (double s : {0.0, 0.7, pi, 4.0}) {
        CHECK(map.boundary_re_F(0, s) ==
              doctest::Approx(0.5 * std::cos(s)).epsilon(1e-13));
        CHECK(std::abs(map.boundary_F(0, s).imag()) < 1e-12);
    }

    const SlitImage img = slit_image(map);
    CHECK(img.centers[0] == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(img.lengths[0] == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("far-field decay of the correction term") {
    CircularDomain d;
    d.centers = {0.0};
    d.radii = {0.25};
    const ConformalMap map = map_from_circular(make_operators(d, 16));
    // f = i/(16 zeta) here, so |f| ~ 1/(16 R).
    const double f3 = std::abs(map.f_interior(complexd(1e3, 0.0)));
    const double f4 = std::abs(map.f_interior(complexd(1e4, 0.0)));
    CHECK(f3 < 1e-3);
    CHECK(f4 < 1e-4);
    CHECK(f3 / f4 == doctest::Approx(10.0).epsilon(1e-3));
}

TEST_CASE("preimage iteration converges to the mirrored circle family") {
    const SlitDomain slits = cantor_level(1);
    const PreimageResult pre = find_preimage(slits);

    CHECK(pre.iterations <= 30);
    CHECK(pre.criterion <= 1e-14);
    REQUIRE(pre.domain.count() == 2);
    // Frozen converged values for level 1 at 16 nodes.
    CHECK(pre.domain.centers[0] ==
          doctest::Approx(-0.321971670350429).epsilon(1e-12));
    CHECK(pre.domain.centers[1] ==
          doctest::Approx(0.321971670350429).epsilon(1e-12));
    CHECK(pre.domain.radii[0] ==
          doctest::Approx(0.08480364894938).epsilon(1e-11));
    // Mirror symmetry of the converged family.
    CHECK(pre.domain.centers[0] + pre.domain.centers[1] ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(pre.domain.radii[0] ==
          doctest::Approx(pre.domain.radii[1]).epsilon(1e-12));
    // The criterion history is non-increasing over its last five entries.
    const auto& h = pre.history;
    REQUIRE(h.size() >= 5);
    for (size_t i = h.size() - 5; i + 1 < h.size(); ++i)
        CHECK(h[i + 1] <= h[i] * (1.0 + 1e-9));
}

TEST_CASE("converged maps reproduce the slit family across levels") {
    for (int level = 0; level <= 4; ++level) {
        const SlitDomain slits = cantor_level(level);
        const PreimageResult pre = find_preimage(slits);
        const SlitImage img = slit_image(pre.map);
        for (int j = 0; j < slits.count(); ++j) {
            const double res = std::abs(img.centers[j] - slits.centers[j]) +
                               std::abs(img.lengths[j] - slits.length);
            CHECK(res <= 10.0 * 1e-14 * slits.count());
        }
        // Mirror symmetry at every level.
        const int m = slits.count();
        for (int j = 0; j < m; ++j) {
            CHECK(pre.domain.centers[j] + pre.domain.centers[m - 1 - j] ==
                  doctest::Approx(0.0).epsilon(1e-12));
        }
        double numax = 0.0;
        for (int j = 0; j < m; ++j)
            numax = std::max(numax, std::abs(pre.map.nu[j]));
        CHECK(numax <= 1e-8);
    }
}

TEST_CASE("preimage iteration cap raises with its history") {
    try {
        find_preimage(cantor_level(2), 16, 1e-14, 2);
        FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
        CHECK(e.history().size() == 2);
        CHECK(e.history()[0] > 1e-14);
    }
}

TEST_CASE("basepoint preimage on the real axis") {
    // Level 0: F(zeta) = zeta + 1/(16 zeta) gives
    // zeta0 = (z0 + sqrt(z0^2 - 1/4))/2 = -(3 + 2 sqrt 2)/4 at z0 = -3/2.
    const PreimageResult pre0 = find_preimage(cantor_level(0));
    const double zeta0 = invert_on_axis(pre0.map, Basepoint::left());
    CHECK(zeta0 ==
          doctest::Approx(-(3.0 + 2.0 * std::sqrt(2.0)) / 4).epsilon(1e-12));
    CHECK(std::abs(pre0.map.F(complexd(zeta0, 0.0)).real() + 1.5) <= 1e-12);

    const PreimageResult pre1 = find_preimage(cantor_level(1));
    const double z1 = invert_on_axis(pre1.map, Basepoint::left());
    CHECK(z1 == doctest::Approx(-1.490046225079418).epsilon(1e-11));
    CHECK(std::abs(pre1.map.F(complexd(z1, 0.0)).real() + 1.5) <= 1e-12);

    // Center basepoint is pinned to 0 by odd symmetry.
    CHECK(invert_on_axis(pre1.map, Basepoint::center()) == 0.0);

    // A basepoint outside the bracket's range is rejected.
    CHECK_THROWS_AS(invert_on_axis(pre0.map,
                                   Basepoint{BasepointMode::LeftExterior, -5.0}),
                    GeometryError);
}

TEST_CASE("interior evaluation is guarded near the circles") {
    const PreimageResult pre = find_preimage(cantor_level(1));
    const double c = pre.domain.centers[0];
    const double r = pre.domain.radii[0];
    CHECK_THROWS_AS(pre.map.f_interior(complexd(c + 1.1 * r, 0.0)),
                    NearBoundaryError);
    CHECK_NOTHROW(pre.map.f_interior(complexd(c + 4.0 * r, 0.0)));
}
