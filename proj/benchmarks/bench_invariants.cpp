#include <benchmark/benchmark.h>

#include <random>

#include "surfpoly/embedded_graph.hpp"
#include "surfpoly/enumerate.hpp"
#include "surfpoly/invariants.hpp"
#include "surfpoly/matroid.hpp"

using namespace surfpoly;

namespace {

RibbonGraph theta_torus() { return RibbonGraph::from_sigma({2, 3, 4, 5, 0, 1}); }

RibbonGraph random_map(std::mt19937& rng, int edges) {
    std::vector<int> sigma(static_cast<std::size_t>(2 * edges));
    for (std::size_t i = 0; i < sigma.size(); ++i) sigma[i] = static_cast<int>(i);
    for (std::size_t i = sigma.size(); i > 1; --i) std::swap(sigma[i - 1], sigma[rng() % i]);
    return RibbonGraph::from_sigma(std::move(sigma));
}

void BM_Krushkal(benchmark::State& state) {
    std::mt19937 rng(1);
    const RibbonGraph g = random_map(rng, static_cast<int>(state.range(0)));
    const EmbeddedGraph cell = EmbeddedGraph::cellular(g);
    for (auto _ : state) benchmark::DoNotOptimize(krushkal(cell));
}

void BM_LasVergnas(benchmark::State& state) {
    std::mt19937 rng(2);
    const RibbonGraph g = random_map(rng, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(las_vergnas(g));
}

void BM_BollobasRiordan(benchmark::State& state) {
    std::mt19937 rng(3);
    const RibbonGraph g = random_map(rng, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(bollobas_riordan(g));
}

void BM_CanonicalForm(benchmark::State& state) {
    std::mt19937 rng(4);
    const RibbonGraph g = random_map(rng, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(g.canonical_form());
}

void BM_VerifyAll(benchmark::State& state) {
    const RibbonGraph g = theta_torus();
    for (auto _ : state) benchmark::DoNotOptimize(verify_all(g));
}

void BM_SweepVerify(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(sweep_verify(static_cast<int>(state.range(0))));
}

void BM_AllMaps(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(all_maps(static_cast<int>(state.range(0))));
}

BENCHMARK(BM_Krushkal)->Arg(4)->Arg(6);
BENCHMARK(BM_LasVergnas)->Arg(4)->Arg(6);
BENCHMARK(BM_BollobasRiordan)->Arg(4)->Arg(6);
BENCHMARK(BM_CanonicalForm)->Arg(4)->Arg(6);
BENCHMARK(BM_VerifyAll);
BENCHMARK(BM_SweepVerify)->Arg(3)->Arg(4);
BENCHMARK(BM_AllMaps)->Arg(4)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
