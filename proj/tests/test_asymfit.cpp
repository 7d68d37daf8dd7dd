#include <doctest.h>

#include <cmath>
#include <vector>

#include "cantorh/asymfit.hpp"
#include "cantorh/reference.hpp"

using namespace cantorh;

namespace {

Pipeline make_pipeline(int level, BasepointMode mode) {
    RunConfig cfg;
    cfg.level = level;
    cfg.basepoint = mode;
    const Basepoint b = mode == BasepointMode::LeftExterior
                            ? Basepoint::left()
                            : Basepoint::center();
    return build_pipeline(cantor_level(level), b, cfg);
}

} // namespace

TEST_CASE("power-law fit recovers a synthetic law exactly") {
    const double C = 0.8371;
    const double beta = 0.5;
    const double rstar = 1.25;
    // Dyadic offsets keep r - rstar exactly representable, so the samples
    // carry the law to roundoff.
    std::vector<ThresholdSample> samples;
    for (int i = 39; i >= 20; --i) {
        const double dr = std::ldexp(1.0, -i);
        samples.push_back({rstar + dr, C * std::pow(dr, beta)});
    }
    const FitResult fit = fit_power_law(samples, rstar);
    CHECK(std::abs(fit.C - C) < 1e-11);
    CHECK(std::abs(fit.beta - beta) < 1e-12);
    CHECK(fit.E < 1e-12);

    // Rescaling h scales C and leaves beta alone.
    for (auto& s : samples)
        s.h *= 3.0;
    const FitResult scaled = fit_power_law(samples, rstar);
    CHECK(std::abs(scaled.C - 3.0 * C) < 1e-10);
    CHECK(std::abs(scaled.beta - beta) < 1e-12);
}

TEST_CASE("power-law fit rejects unusable input") {
    const double rstar = 1.0;
    std::vector<ThresholdSample> two = {{1.001, 0.03}, {1.002, 0.04}};
    CHECK_THROWS_AS(fit_power_law(two, rstar), ArgumentError);
    std::vector<ThresholdSample> bad = {{0.999, 0.03}, {1.002, 0.04},
                                        {1.003, 0.05}};
    CHECK_THROWS_AS(fit_power_law(bad, rstar), ArgumentError); // r below rstar
    std::vector<ThresholdSample> neg = {{1.001, -0.03}, {1.002, 0.04},
                                        {1.003, 0.05}};
    CHECK_THROWS_AS(fit_power_law(neg, rstar), ArgumentError); // h <= 0
}

TEST_CASE("threshold sampling brackets and refines") {
    const Pipeline p = make_pipeline(1, BasepointMode::LeftExterior);
    const std::vector<ThresholdSample> samples = sample_near_threshold(p);
    REQUIRE(samples.size() == 20);
    const double rstar = capture_threshold(p);
    CHECK(rstar == doctest::Approx(1.0).epsilon(1e-10));
    double prev_r = rstar;
    double prev_h = 0.0;
    for (const auto& s : samples) {
        CHECK(s.r > prev_r);
        CHECK(s.h > prev_h);
        prev_r = s.r;
        prev_h = s.h;
    }
    CHECK(samples.front().r - rstar == doctest::Approx(1e-9).epsilon(1e-3));
    CHECK(samples.back().r - rstar == doctest::Approx(1e-6).epsilon(1e-3));

    // A target beyond the first plateau cannot be bracketed on the arc.
    CHECK_THROWS_AS(sample_near_threshold(p, 1.0, 20), SamplingError);
}

TEST_CASE("left threshold law at level 1") {
    const Pipeline p = make_pipeline(1, BasepointMode::LeftExterior);
    const FitResult fit = fit_threshold_law(p);
    CHECK(fit.rstar == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::abs(fit.C - 0.937958608862) < 1e-8);
    CHECK(fit.beta > 0.4999);
    CHECK(fit.beta < 0.5001);
    CHECK(fit.E < 1e-15);
    CHECK(fit.samples.size() == 20);
}

TEST_CASE("center threshold law at level 1") {
    const Pipeline p = make_pipeline(1, BasepointMode::Center);
    const FitResult fit = fit_threshold_law(p);
    CHECK(fit.rstar == doctest::Approx(1.0 / 6).epsilon(1e-10));
    CHECK(std::abs(fit.C - 2.35985607797) < 1e-8);
    CHECK(fit.beta > 0.4999);
    CHECK(fit.beta < 0.5001);
    CHECK(fit.E < 1e-14);
}

TEST_CASE("amplitude grows with refinement level") {
    double prev = 0.0;
    for (int level : {1, 2, 3}) {
        const Pipeline p = make_pipeline(level, BasepointMode::LeftExterior);
        const FitResult fit = fit_threshold_law(p);
        CHECK(fit.C > prev);
        prev = fit.C;
    }
}

TEST_CASE("exponential growth fit") {
    // Exact geometric data round-trips.
    std::vector<int> levels = {0, 1, 2, 3};
    std::vector<double> C;
    for (int l : levels)
        C.push_back(0.9 * std::exp(0.041 * l));
    const GrowthFit g = fit_exp_growth(levels, C);
    CHECK(std::abs(g.A - 0.9) < 1e-12);
    CHECK(std::abs(g.b - 0.041) < 1e-12);
    CHECK(g.E < 1e-12);

    CHECK_THROWS_AS(fit_exp_growth({0}, {0.9}), ArgumentError);
    CHECK_THROWS_AS(fit_exp_growth({2, 2}, {0.9, 0.95}), ArgumentError);
    CHECK_THROWS_AS(fit_exp_growth({0, 1}, {0.9}), ArgumentError);
    CHECK_THROWS_AS(fit_exp_growth({0, 1}, {0.9, -0.95}), ArgumentError);
}

TEST_CASE("bundled reference amplitudes follow the published growth law") {
    const std::vector<double>& amps = reference_amplitudes_left();
    REQUIRE(amps.size() == 9);
    std::vector<int> levels;
    for (int l = 0; l <= 8; ++l)
        levels.push_back(l);
    const GrowthFit g = fit_exp_growth(levels, amps);
    const GrowthFit ref = reference_growth_left();
    CHECK(std::abs(g.A - ref.A) < 1e-6);
    CHECK(std::abs(g.b - ref.b) < 1e-6);
    CHECK(g.E < 1e-5);

    const std::vector<double>& center = reference_amplitudes_center();
    REQUIRE(center.size() == 8);
    for (size_t i = 0; i + 1 < center.size(); ++i)
        CHECK(center[i] < center[i + 1]);
}

TEST_CASE("closed-form single-slit amplitude") {
    const auto [C0, beta0] = exact_C0();
    CHECK(C0 == doctest::Approx(2.0 * std::sqrt(2.0) / pi).epsilon(1e-15));
    CHECK(beta0 == 0.5);

    // The measured level-0 law matches the closed form.
    const Pipeline p = make_pipeline(0, BasepointMode::LeftExterior);
    const FitResult fit = fit_threshold_law(p);
    CHECK(std::abs(fit.C - C0) < 1e-6);
    CHECK(std::abs(fit.beta - 0.5) < 1e-4);
}
