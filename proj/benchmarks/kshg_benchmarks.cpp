#include "kshg/kshg.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace kshg;

void BM_Eigensystem(benchmark::State& state)
{
    std::mt19937_64 rng(1);
    std::normal_distribution<double> normal;
    std::vector<Hermitian3> inputs;
    for (int i = 0; i < 256; ++i) {
        Hermitian3::Entries m{};
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = r; c < 3; ++c) {
                m[r][c] = r == c ? Complex(normal(rng)) : Complex(normal(rng), normal(rng));
                m[c][r] = std::conj(m[r][c]);
            }
        inputs.emplace_back(m);
    }
    std::size_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(eigensystem(inputs[i++ % inputs.size()]));
}
BENCHMARK(BM_Eigensystem);

void BM_ExpandCyclic(benchmark::State& state)
{
    FamilySpec spec{Family::Cyclic, int(state.range(0))};
    spec.uniform_weight = 2;
    const auto h = generate(spec);
    for (auto _ : state)
        benchmark::DoNotOptimize(expand(h));
}
BENCHMARK(BM_ExpandCyclic)->Arg(4)->Arg(16)->Arg(64);

void BM_BruteForceGadget(benchmark::State& state)
{
    const auto g = expand_hyper_edge(0, int(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(brute_force_max(g));
    state.SetLabel(std::to_string(g.vertex_count()) + " vertices");
}
BENCHMARK(BM_BruteForceGadget)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_MisLattice(benchmark::State& state)
{
    const int side = int(state.range(0));
    const auto h = generate(FamilySpec{Family::SquareLattice, 0, side, side});
    for (auto _ : state)
        benchmark::DoNotOptimize(max_independent_set(h));
}
BENCHMARK(BM_MisLattice)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMicrosecond);

void BM_MisOracleExpanded(benchmark::State& state)
{
    FamilySpec spec{Family::Complete, int(state.range(0))};
    const auto g = expand(generate(spec));
    MisOptions wide;
    wide.max_vertices = 512;
    for (auto _ : state)
        benchmark::DoNotOptimize(mis_oracle(g, wide));
    state.SetLabel(std::to_string(g.vertex_count()) + " vertices");
}
BENCHMARK(BM_MisOracleExpanded)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_ClassifyWheel7(benchmark::State& state)
{
    FamilySpec spec{Family::Wheel7};
    spec.rays = wheel7_demo_rays();
    const auto h = generate(spec);
    for (auto _ : state)
        benchmark::DoNotOptimize(classify(h));
}
BENCHMARK(BM_ClassifyWheel7);

} // namespace

BENCHMARK_MAIN();
