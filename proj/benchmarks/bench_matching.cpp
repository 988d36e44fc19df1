#include <benchmark/benchmark.h>

#include "matchpoly/matching.hpp"
#include "matchpoly/suite.hpp"
#include "matchpoly/theta.hpp"

using namespace matchpoly;

namespace {

Graph seeded_graph(int n, double p = 0.5) {
    return LabeledGraphStream::random(n, p, 1, 0xbeef).at(0);
}

}  // namespace

static void BM_MatchingPolynomial(benchmark::State& state) {
    Graph g = seeded_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(matching_polynomial(g));
    }
}
BENCHMARK(BM_MatchingPolynomial)->DenseRange(8, 16, 2);

static void BM_TablePrecompute(benchmark::State& state) {
    Graph g = seeded_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        MatchingTable t(g, MatchingTable::Policy::PrecomputeAll);
        benchmark::DoNotOptimize(t.mu());
    }
}
BENCHMARK(BM_TablePrecompute)->DenseRange(8, 14, 2);

static void BM_MuBruteForce(benchmark::State& state) {
    Graph g = seeded_graph(static_cast<int>(state.range(0)), 0.3);
    if (g.edge_count() > 24) state.SkipWithError("too many edges");
    for (auto _ : state) {
        benchmark::DoNotOptimize(mu_brute_force(g));
    }
}
BENCHMARK(BM_MuBruteForce)->DenseRange(6, 10, 2);

static void BM_VerifyIdentities(benchmark::State& state) {
    Graph g = seeded_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_identities(g));
    }
}
BENCHMARK(BM_VerifyIdentities)->DenseRange(8, 12, 2);

static void BM_FindThetaCandidates(benchmark::State& state) {
    Graph g = seeded_graph(static_cast<int>(state.range(0)));
    IntPoly mu = matching_polynomial(g);
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_theta_candidates(mu, 2));
    }
}
BENCHMARK(BM_FindThetaCandidates)->DenseRange(8, 16, 4);
