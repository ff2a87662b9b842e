#include <benchmark/benchmark.h>

#include "disco/datasets.hpp"
#include "disco/dc_core.hpp"
#include "disco/score.hpp"

using namespace disco;

namespace {

Dataset make_input(std::size_t n) {
    BallsSpec spec;
    spec.balls = 4;
    spec.points_per_ball = n / 4;
    spec.center_distance = 20.0;
    spec.noise = n - 4 * (n / 4);
    spec.seed = 1;
    return gen_uniform_balls(spec);
}

void BM_core_distances(benchmark::State& state) {
    const Dataset d = make_input(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(core_distances(d.points, 5));
    }
    state.SetComplexityN(state.range(0));
}

void BM_build_mst(benchmark::State& state) {
    const Dataset d = make_input(static_cast<std::size_t>(state.range(0)));
    const CoreDistances cd = core_distances(d.points, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_mst(d.points, cd));
    }
    state.SetComplexityN(state.range(0));
}

void BM_dc_rows(benchmark::State& state) {
    const Dataset d = make_input(static_cast<std::size_t>(state.range(0)));
    const DcDistIndex idx(build_mst(d.points, core_distances(d.points, 5)));
    std::vector<double> row;
    std::size_t source = 0;
    for (auto _ : state) {
        idx.row_from(source, row);
        benchmark::DoNotOptimize(row.data());
        source = (source + 1) % idx.size();
    }
    state.SetComplexityN(state.range(0));
}

void BM_score(benchmark::State& state) {
    const Dataset d = make_input(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(score(d.points, d.clustering, 5));
    }
    state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(BM_core_distances)->Arg(500)->Arg(2000)->Arg(8000)->Complexity();
BENCHMARK(BM_build_mst)->Arg(500)->Arg(2000)->Arg(8000)->Complexity();
BENCHMARK(BM_dc_rows)->Arg(500)->Arg(2000)->Arg(8000)->Complexity();
BENCHMARK(BM_score)->Arg(500)->Arg(2000)->Complexity();

BENCHMARK_MAIN();
