#include "qp/lab.hpp"

#include <benchmark/benchmark.h>

namespace {

qp::Triangulation seed_for(int a, int b, int c)
{
    return qp::seed_triangulation(qp::GroupData(a, b, c));
}

void BM_FlipGraphSerial(benchmark::State& state)
{
    auto t = seed_for(1, static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    for (auto _ : state)
        benchmark::DoNotOptimize(qp::flip_graph_serial(t).nodes.size());
}

void BM_FlipGraphParallel(benchmark::State& state)
{
    auto t = seed_for(1, static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    for (auto _ : state)
        benchmark::DoNotOptimize(qp::flip_graph(t).nodes.size());
}

qp::SamplingConfig sampling(long n)
{
    qp::SamplingConfig cfg;
    cfg.samples = static_cast<std::size_t>(n);
    cfg.seed = 7;
    return cfg;
}

void BM_SampleSerial(benchmark::State& state)
{
    auto q = qp::curve_quiver(qp::craw_reid(qp::GroupData(1, 2, 3))).quiver;
    auto cfg = sampling(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(qp::sample_potentials_serial(q, cfg).samples);
}

void BM_SampleParallel(benchmark::State& state)
{
    auto q = qp::curve_quiver(qp::craw_reid(qp::GroupData(1, 2, 3))).quiver;
    auto cfg = sampling(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(qp::sample_potentials(q, cfg).samples);
}

} // namespace

BENCHMARK(BM_FlipGraphSerial)->Args({3, 8})->Args({4, 9})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FlipGraphParallel)->Args({3, 8})->Args({4, 9})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SampleSerial)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampleParallel)->Arg(400)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
