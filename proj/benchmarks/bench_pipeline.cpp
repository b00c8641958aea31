#include "curvess/branch.hpp"
#include "curvess/report.hpp"
#include "test_support.hpp"

#include <benchmark/benchmark.h>

using namespace curvess;
using namespace curvess::testing;

namespace {

void BM_DeltaOneBranch(benchmark::State& state)
{
    const BranchParam b = branch({"t^8", "t^12", "t^18", "t^27"});
    for (auto _ : state)
        benchmark::DoNotOptimize(delta_one_branch(b, 216));
}
BENCHMARK(BM_DeltaOneBranch)->Unit(benchmark::kMillisecond);

void BM_AnalyzeDocument(benchmark::State& state)
{
    const char* names[] = {"nodal-rational.json", "three-points.json", "two-pair.json"};
    const ParsedCurve c = load_embedded(names[state.range(0)]);
    ReportOptions o;
    o.stabilization = false;
    for (auto _ : state)
        benchmark::DoNotOptimize(analyze(c, o).any_failed());
    state.SetLabel(names[state.range(0)]);
}
BENCHMARK(BM_AnalyzeDocument)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_Corpus(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(run_corpus().any_failed);
}
BENCHMARK(BM_Corpus)->Unit(benchmark::kSecond)->Iterations(1);

} // namespace
