#include <benchmark/benchmark.h>

#include <random>

#include "dmqc/discord_oracle.hpp"
#include "dmqc/trajectory.hpp"
#include "dmqc/verify.hpp"

using namespace dmqc;

static void BM_TrajectorySerial(benchmark::State& state) {
    const auto init = InitialState::mems(1.0 / 3.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(trajectory_serial(init, {Axis::Z, 0.2}, 10.0, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_TrajectorySerial)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_TrajectoryParallel(benchmark::State& state) {
    const auto init = InitialState::mems(1.0 / 3.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(trajectory(init, {Axis::Z, 0.2}, 10.0, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_TrajectoryParallel)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_DiscordOracleSerial(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const CMatrix rho = random_xstate(rng).to_matrix();
    for (auto _ : state) {
        benchmark::DoNotOptimize(discord_oracle_serial(rho));
    }
}
BENCHMARK(BM_DiscordOracleSerial)->Unit(benchmark::kMillisecond);

static void BM_DiscordOracleParallel(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const CMatrix rho = random_xstate(rng).to_matrix();
    for (auto _ : state) {
        benchmark::DoNotOptimize(discord_oracle(rho));
    }
}
BENCHMARK(BM_DiscordOracleParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
