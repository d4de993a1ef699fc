#include <benchmark/benchmark.h>

#include "vacpol/constants.hpp"
#include "vacpol/dirac_algebra.hpp"
#include "vacpol/radial_dirac.hpp"
#include "vacpol/shift_engine.hpp"
#include "vacpol/spectral_lab.hpp"

namespace
{
void BM_SolveChannel(benchmark::State& state)
{
    auto const grid = vacpol::RadialGrid::log(1e-6, 500, static_cast<std::size_t>(state.range(0)));
    auto const pot = vacpol::coulomb_potential_energy(0.5);
    vacpol::SolveOptions opts;
    opts.gap_only = true;
    for (auto _ : state)
        benchmark::DoNotOptimize(vacpol::solve_channel(pot, -1, grid, 1.0, opts));
}
BENCHMARK(BM_SolveChannel)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

void BM_SpectralProjector(benchmark::State& state)
{
    vacpol::Constants const c;
    auto const grid = vacpol::RadialGrid::uniform(20, static_cast<std::size_t>(state.range(0)));
    auto const model = vacpol::NuclearModel::gaussian(0.5 / c.alpha(), 1.0);
    auto const M = vacpol::operator_matrix(model, c, -1, grid);
    for (auto _ : state)
        benchmark::DoNotOptimize(vacpol::spectral_projector(M));
}
BENCHMARK(BM_SpectralProjector)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_Q1Quadrature(benchmark::State& state)
{
    vacpol::Vec3 const p(0.4, -1.0, 2.0), q(1.5, 0.3, -0.7);
    for (auto _ : state)
        benchmark::DoNotOptimize(vacpol::q1_trace_quadrature(p, q, 1.0));
}
BENCHMARK(BM_Q1Quadrature)->Unit(benchmark::kMicrosecond);

void BM_ShiftReport(benchmark::State& state)
{
    vacpol::Constants const c;
    auto const model = vacpol::NuclearModel::point(1);
    for (auto _ : state)
        benchmark::DoNotOptimize(vacpol::shift_report(model, {{1, 0}, {2, 0}, {2, 1}}, c));
}
BENCHMARK(BM_ShiftReport)->Unit(benchmark::kMillisecond);
}  // namespace
