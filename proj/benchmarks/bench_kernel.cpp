#include <cmath>

#include <benchmark/benchmark.h>

#include "vacpol/nuclear_model.hpp"
#include "vacpol/polarization_kernel.hpp"
#include "vacpol/uehling_potential.hpp"

namespace
{
void BM_CClosed(benchmark::State& state)
{
    double k = 1e-3;
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(vacpol::c_closed(k));
        k = k < 1e4 ? k * 1.1 : 1e-3;
    }
}
BENCHMARK(BM_CClosed);

void BM_CIntegral(benchmark::State& state)
{
    double const k = static_cast<double>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(vacpol::c_integral(k));
}
BENCHMARK(BM_CIntegral)->Arg(1)->Arg(100)->Arg(10000);

void BM_UehlingPoint(benchmark::State& state)
{
    double const r = std::pow(10.0, -static_cast<double>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(vacpol::uehling_point_position(1, r));
}
BENCHMARK(BM_UehlingPoint)->DenseRange(0, 4, 2);

void BM_UehlingGaussian(benchmark::State& state)
{
    auto const g = vacpol::NuclearModel::gaussian(1, 0.5);
    vacpol::UehlingOptions opts;
    opts.route = state.range(0) == 0 ? vacpol::UehlingRoute::fourier
                                     : vacpol::UehlingRoute::convolution;
    for (auto _ : state)
        benchmark::DoNotOptimize(vacpol::uehling_position_value(g, 0.8, opts));
}
BENCHMARK(BM_UehlingGaussian)->Arg(0)->Arg(1);
}  // namespace
