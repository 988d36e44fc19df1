#include <benchmark/benchmark.h>

#include "matchpoly/barrier.hpp"
#include "matchpoly/suite.hpp"

using namespace matchpoly;

namespace {

Graph seeded_graph(int n, double p = 0.5) {
    return LabeledGraphStream::random(n, p, 1, 0xbeef).at(0);
}

}  // namespace

static void BM_ThetaDeficiency(benchmark::State& state) {
    Graph g = seeded_graph(static_cast<int>(state.range(0)));
    MatchingTable t(g);
    for (auto _ : state) {
        BarrierLab lab(t, ThetaSpec::zero());
        benchmark::DoNotOptimize(lab.theta_deficiency());
    }
}
BENCHMARK(BM_ThetaDeficiency)->DenseRange(8, 14, 2);

static void BM_BarrierFamilyPruned(benchmark::State& state) {
    Graph g = seeded_graph(static_cast<int>(state.range(0)));
    MatchingTable t(g);
    for (auto _ : state) {
        BarrierLab lab(t, ThetaSpec::zero());
        benchmark::DoNotOptimize(lab.enumerate_barrier_sets(BarrierLab::EnumMode::Pruned));
    }
}
BENCHMARK(BM_BarrierFamilyPruned)->DenseRange(8, 12, 2);

static void BM_Decompose(benchmark::State& state) {
    Graph g = seeded_graph(static_cast<int>(state.range(0)));
    MatchingTable t(g);
    for (auto _ : state) {
        ThetaAnalyzer an(t, ThetaSpec::zero());
        benchmark::DoNotOptimize(an.decompose());
    }
}
BENCHMARK(BM_Decompose)->DenseRange(8, 16, 4);

static void BM_SuitePerGraph(benchmark::State& state) {
    // the full per-graph check load of the theorem suite at n = 6
    Corpus one = graph6_corpus(emit_graph6(seeded_graph(6)));
    SuiteOptions opt;
    opt.policy = ThetaPolicy::CandidatesDeg2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_suite(one, opt));
    }
}
BENCHMARK(BM_SuitePerGraph);

static void BM_HuntStep(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            hunt_counterexamples(HuntTarget::BarrierNotZeroBarrier, 3, 1, 1));
    }
}
BENCHMARK(BM_HuntStep);
