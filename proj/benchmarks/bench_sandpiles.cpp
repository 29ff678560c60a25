#include <benchmark/benchmark.h>

#include "sandpiles/sandpiles.hpp"

using namespace sandpiles;

namespace {

void BM_parallel_right_transient(benchmark::State& state) {
    const Height n = state.range(0);
    for (auto _ : state) {
        Configuration c = single_column(n);
        for (;;) {
            Configuration next = pspm_step(c);
            if (next == c) break;
            c = std::move(next);
        }
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_parallel_right_transient)->Arg(1'000)->Arg(10'000)->Arg(100'000);

void BM_coded_right_transient(benchmark::State& state) {
    const Height n = state.range(0);
    for (auto _ : state) {
        DifferenceCoding c = difference_coding(Heights{n});
        for (;;) {
            DifferenceCoding next = pspm_step_coded(c);
            if (next == c) break;
            c = std::move(next);
        }
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_coded_right_transient)->Arg(1'000)->Arg(10'000)->Arg(100'000);

void BM_right_greedy_fixation(benchmark::State& state) {
    const Height n = state.range(0);
    for (auto _ : state) {
        Configuration c = single_column(n);
        for (;;) {
            Configuration next = psspm_step_policy(c, GreedyPolicy::RightGreedy);
            if (next == c) break;
            c = std::move(next);
        }
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_right_greedy_fixation)->Arg(144)->Arg(1'296)->Arg(4'624);

void BM_explore_forms(benchmark::State& state) {
    const Height n = state.range(0);
    ExploreOptions opts;
    opts.mode = ExploreMode::Forms;
    for (auto _ : state) {
        const SpaceGraph g = explore(n, Model::Sspm, opts);
        benchmark::DoNotOptimize(g.nodes.size());
    }
}
BENCHMARK(BM_explore_forms)->Arg(10)->Arg(12)->Arg(14);

void BM_enumerate_forms(benchmark::State& state) {
    const Height n = state.range(0);
    for (auto _ : state) {
        const auto forms = enumerate_fixed_point_forms(n);
        benchmark::DoNotOptimize(forms.size());
    }
}
BENCHMARK(BM_enumerate_forms)->Arg(100)->Arg(10'000);

void BM_construct_path(benchmark::State& state) {
    const Height n = state.range(0);
    const Form target = *enumerate_fixed_point_forms(n).begin();
    for (auto _ : state) {
        const ProcedureTrace tr = construct_path(n, target);
        benchmark::DoNotOptimize(tr.length());
    }
}
BENCHMARK(BM_construct_path)->Arg(50)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
