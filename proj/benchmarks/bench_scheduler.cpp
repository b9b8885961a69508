#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "vanetsig/scheduler.hpp"

using namespace vanetsig;

namespace {

// clustered releases give a dense start-time grid, the DP's worst case
std::vector<Job> dense_instance(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> r_d(0, 6), w_d(1, 9);
    std::vector<Job> jobs;
    for (int i = 0; i < n; ++i) {
        Job j;
        j.id = i + 1;
        j.r = r_d(rng);
        j.p = 2;
        j.d = j.r + 2 + 15;
        j.w = w_d(rng);
        jobs.push_back(j);
    }
    return jobs;
}

void BM_dp_max_weight(benchmark::State& state) {
    auto jobs = dense_instance(int(state.range(0)), 17);
    std::uint64_t ops = 0;
    for (auto _ : state) {
        DpResult res = dp_max_weight(jobs);
        ops = res.ops;
        benchmark::DoNotOptimize(res);
    }
    state.counters["dp_ops"] = double(ops);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_dp_max_weight)->DenseRange(4, 14, 2)->Complexity();

void BM_brute_force_oracle(benchmark::State& state) {
    auto jobs = dense_instance(int(state.range(0)), 17);
    for (auto _ : state) {
        benchmark::DoNotOptimize(brute_force_oracle(jobs));
    }
}
BENCHMARK(BM_brute_force_oracle)->DenseRange(4, 10, 2);

void BM_schedule_metrics(benchmark::State& state) {
    auto jobs = dense_instance(int(state.range(0)), 23);
    std::vector<int> order;
    for (const Job& j : jobs) order.push_back(j.id);
    for (auto _ : state) {
        benchmark::DoNotOptimize(schedule_metrics(jobs, order));
    }
}
BENCHMARK(BM_schedule_metrics)->Arg(16)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
