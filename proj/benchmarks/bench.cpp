#include <benchmark/benchmark.h>

#include <random>

#include "convcodes/conversion.hpp"
#include "convcodes/linear_code.hpp"
#include "convcodes/oracle.hpp"
#include "convcodes/reed_muller.hpp"

using namespace convcodes;

namespace {

BitMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint32_t seed) {
    std::mt19937 rng(seed);
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng() & 1U);
    return m;
}

void BM_Rank(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const BitMatrix m = random_matrix(n, n, 1);
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Arg(64)->Arg(256)->Arg(1024);

void BM_MinDistance(benchmark::State& state) {
    // Fresh code each time: LinearCode caches its distance.
    const BitMatrix g = rm_generator(static_cast<unsigned>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(exact_min_distance(LinearCode::from_generator(g)));
}
BENCHMARK(BM_MinDistance)->Arg(1)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_RmGenerator(benchmark::State& state) {
    const auto m = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(rm_generator(m / 2, m));
}
BENCHMARK(BM_RmGenerator)->DenseRange(6, 12, 3);

void BM_RmMerge(benchmark::State& state) {
    const auto m = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(rm_merge_procedure(m - 2, m));
}
BENCHMARK(BM_RmMerge)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_OracleExample(benchmark::State& state) {
    const auto inst = make_instance(
        {LinearCode::from_generator(BitMatrix::from_strings({"101", "011"})),
         LinearCode::from_generator(BitMatrix::from_strings({"110", "011"}))},
        LinearCode::from_generator(BitMatrix::from_strings({"10001", "01001", "00101", "00011"})));
    SearchLimits lim;
    lim.threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(min_access_cost(inst, lim));
}
BENCHMARK(BM_OracleExample)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
