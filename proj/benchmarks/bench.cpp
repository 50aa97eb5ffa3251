#include <benchmark/benchmark.h>

#include "knotthin/badness.hpp"
#include "knotthin/oracles.hpp"
#include "knotthin/states.hpp"
#include "knotthin/surgery.hpp"
#include "knotthin/tangle.hpp"

namespace kt = knotthin;

namespace {

kt::Diagram p355() { return kt::build_pretzel({-3, 5, 5}); }

kt::Diagram k2() {
    kt::Diagram p = p355();
    std::vector<kt::SumPlan> plan{{&p, 0}, {&p, 0}};
    return kt::iterated_sum(plan).diagram;
}

void BM_ParseRoundTrip(benchmark::State& state) {
    std::string pd = p355().to_pd();
    for (auto _ : state) benchmark::DoNotOptimize(kt::Diagram::parse_pd(pd));
}
BENCHMARK(BM_ParseRoundTrip);

void BM_Badness(benchmark::State& state) {
    kt::Diagram d = k2();
    for (auto _ : state) benchmark::DoNotOptimize(kt::badness(d));
}
BENCHMARK(BM_Badness);

void BM_EnumerateP355(benchmark::State& state) {
    kt::Diagram d = p355();
    kt::GradingTable t = kt::GradingTable::standard();
    kt::BadnessReport b = kt::badness(d);
    kt::MarkedDiagram md = kt::mark(d, kt::select_bad_edge_marking(d, b).edge);
    for (auto _ : state) benchmark::DoNotOptimize(kt::summarize_complex(md, t));
}
BENCHMARK(BM_EnumerateP355);

void BM_EnumerateK2(benchmark::State& state) {
    kt::Diagram d = k2();
    kt::GradingTable t = kt::GradingTable::standard();
    kt::BadnessReport b = kt::badness(d);
    kt::MarkedDiagram md = kt::mark(d, kt::select_bad_edge_marking(d, b).edge);
    for (auto _ : state) benchmark::DoNotOptimize(kt::summarize_complex(md, t));
}
BENCHMARK(BM_EnumerateK2);

void BM_MatrixTree(benchmark::State& state) {
    kt::Diagram d = k2();
    for (auto _ : state) benchmark::DoNotOptimize(kt::spanning_tree_count(d));
}
BENCHMARK(BM_MatrixTree);

void BM_FoxAlexander(benchmark::State& state) {
    kt::Diagram d = k2();
    for (auto _ : state) benchmark::DoNotOptimize(kt::fox_alexander(d));
}
BENCHMARK(BM_FoxAlexander);

void BM_MontesinosBuild(benchmark::State& state) {
    std::vector<kt::Frac> params{{-1, 3}, {2, 5}, {1, 7}, {5, 11}};
    for (auto _ : state)
        benchmark::DoNotOptimize(kt::build_montesinos(params, kt::CfForm::Alternating));
}
BENCHMARK(BM_MontesinosBuild);

void BM_NormalizeMontesinos(benchmark::State& state) {
    std::vector<kt::Frac> params{{-1, 3}, {2, 5}, {-1, 7}, {5, 11}};
    for (auto _ : state) benchmark::DoNotOptimize(kt::normalize_montesinos(params));
}
BENCHMARK(BM_NormalizeMontesinos);

}  // namespace

BENCHMARK_MAIN();
