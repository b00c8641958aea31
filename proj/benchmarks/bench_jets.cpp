#include "curvess/jets.hpp"
#include "curvess/plane.hpp"
#include "test_support.hpp"

#include <benchmark/benchmark.h>

using namespace curvess;
using namespace curvess::testing;

namespace {

const char* const kGerms[] = {"u^3+v^5", "u^5+v^5+u^3*v^3", "v^4-2*u^3*v^2-4*u^5*v+u^6-u^7"};

void BM_MilnorAlgebra(benchmark::State& state)
{
    const Poly f = P(kGerms[state.range(0)]);
    for (auto _ : state)
        benchmark::DoNotOptimize(JetAlgebra::build_adaptive({diff(f, 0), diff(f, 1)}).colength());
    state.SetLabel(kGerms[state.range(0)]);
}
BENCHMARK(BM_MilnorAlgebra)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_JetTruncation(benchmark::State& state)
{
    const Poly f = P("u^5+v^5+u^3*v^3");
    const auto T = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(JetAlgebra::build({diff(f, 0), diff(f, 1)}, T).colength());
}
BENCHMARK(BM_JetTruncation)->RangeMultiplier(2)->Range(16, 64)->Unit(benchmark::kMillisecond);

void BM_TailMapGeneral(benchmark::State& state)
{
    const PlaneSingularity s = plane(kGerms[state.range(0)]);
    for (auto _ : state)
        benchmark::DoNotOptimize(tail_map_general(s).rank);
    state.SetLabel(kGerms[state.range(0)]);
}
BENCHMARK(BM_TailMapGeneral)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_TailMapScalar(benchmark::State& state)
{
    const PlaneSingularity s = plane("u^3+v^5");
    for (auto _ : state)
        benchmark::DoNotOptimize(tail_map_wh_scalar(s).rank);
}
BENCHMARK(BM_TailMapScalar)->Unit(benchmark::kMillisecond);

} // namespace
