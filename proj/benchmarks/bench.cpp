#include <benchmark/benchmark.h>

#include "cantorh/cantorh.hpp"

using namespace cantorh;

namespace {

Pipeline left_pipeline(int level) {
    RunConfig cfg;
    cfg.level = level;
    return build_pipeline(cantor_level(level), Basepoint::left(), cfg);
}

void BM_preimage(benchmark::State& state) {
    const SlitDomain d = cantor_level(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        PreimageResult pre = find_preimage(d);
        benchmark::DoNotOptimize(pre.domain.centers.data());
    }
}
BENCHMARK(BM_preimage)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_neumann_solve(benchmark::State& state) {
    const CircularDomain d =
        initial_circles(cantor_level(static_cast<int>(state.range(0))));
    const Operators ops = make_operators(d, 16);
    Eigen::VectorXd gamma(ops.size());
    for (int i = 0; i < ops.size(); ++i)
        gamma[i] = ops.grid.eta[i].imag();
    const Eigen::VectorXd rhs = -(ops.M * gamma);
    for (auto _ : state) {
        Eigen::VectorXd mu = solve_neumann(ops, rhs);
        benchmark::DoNotOptimize(mu.data());
    }
}
BENCHMARK(BM_neumann_solve)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_harmonic(benchmark::State& state) {
    const int level = static_cast<int>(state.range(0));
    const PreimageResult pre = find_preimage(cantor_level(level));
    const Operators ops = make_operators(pre.domain, 16);
    for (auto _ : state) {
        HarmonicData harm = build_harmonic_data(ops);
        benchmark::DoNotOptimize(harm.b.data());
    }
}
BENCHMARK(BM_harmonic)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_curve(benchmark::State& state) {
    const Pipeline p = left_pipeline(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        HCurve curve = build_curve(p, 31);
        benchmark::DoNotOptimize(curve.steps.data());
    }
}
BENCHMARK(BM_curve)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
