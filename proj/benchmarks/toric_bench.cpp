#include <benchmark/benchmark.h>

#include "toric/blowup.hpp"
#include "toric/divisor.hpp"
#include "toric/fan.hpp"
#include "toric/gcd_bound.hpp"
#include "toric/heights.hpp"
#include "toric/polytope.hpp"
#include "toric/volume_beta.hpp"

using namespace toric;

namespace {

Polytope pentagon() {
    const BlowupMap map = star_subdivision(standard_fan(Surface::P1xP1), Cone{{1, 2}});
    return polytope_of_divisor(anticanonical_divisor(map.source));
}

void BM_VertexEnumeration(benchmark::State& state) {
    const auto hs = pentagon().halfspaces();
    for (auto _ : state) {
        Polytope p(2, hs);
        benchmark::DoNotOptimize(p.vertices().size());
    }
}
BENCHMARK(BM_VertexEnumeration);

void BM_Volume(benchmark::State& state) {
    const auto hs = pentagon().halfspaces();
    for (auto _ : state) {
        Polytope p(2, hs);
        benchmark::DoNotOptimize(p.volume());
    }
}
BENCHMARK(BM_Volume);

void BM_LatticePoints(benchmark::State& state) {
    const Polytope p = pentagon().scale(Int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(p.lattice_points().size());
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LatticePoints)->Arg(10)->Arg(30)->Arg(60)->Complexity();

void BM_BetaDelPezzo(benchmark::State& state) {
    const BlowupMap map = star_subdivision(standard_fan(Surface::P1xP1), Cone{{1, 2}});
    const ToricDivisor L = anticanonical_divisor(map.source);
    const ToricDivisor F = pullback(map, prime_divisor(map.target, 3));
    for (auto _ : state) benchmark::DoNotOptimize(beta(L, F).beta);
}
BENCHMARK(BM_BetaDelPezzo);

void BM_GcdBoundReport(benchmark::State& state) {
    const BlowupMap map = star_subdivision(standard_fan(Surface::P1xP1), Cone{{1, 2}});
    std::vector<ToricDivisor> ds;
    for (int i = 0; i < 4; ++i) ds.push_back(prime_divisor(map.target, i));
    const auto decomp = make_decomposition(map.target, std::move(ds));
    for (auto _ : state)
        benchmark::DoNotOptimize(bound_report(map, decomp, Rat(1, 100)).coeff_height);
}
BENCHMARK(BM_GcdBoundReport);

void BM_SweepPairs(benchmark::State& state) {
    const BlowupMap map = star_subdivision(standard_fan(Surface::P1xP1), Cone{{1, 2}});
    std::vector<ToricDivisor> ds;
    for (int i = 0; i < 4; ++i) ds.push_back(prime_divisor(map.target, i));
    const GcdBoundReport rep =
        bound_report(map, make_decomposition(map.target, std::move(ds)), Rat(1, 100));
    heights::SweepParams params;
    params.grid = static_cast<int>(state.range(0));
    params.excluded = {heights::Place::inf()};
    for (auto _ : state)
        benchmark::DoNotOptimize(heights::sweep_inequality(rep, params).samples);
    state.SetComplexityN(state.range(0) * state.range(0));
}
BENCHMARK(BM_SweepPairs)->Arg(20)->Arg(40)->Arg(80)->Complexity();

}  // namespace

BENCHMARK_MAIN();
