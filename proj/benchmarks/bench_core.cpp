#include <benchmark/benchmark.h>

#include "majolab/delta.hpp"
#include "majolab/eig.hpp"
#include "majolab/majorization.hpp"
#include "majolab/random.hpp"
#include "majolab/search.hpp"

namespace {

using namespace majolab;

void BM_Eigh(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const HermitianMatrix h = random_hermitian(7, n);
    for (auto _ : state) benchmark::DoNotOptimize(eigh(h));
}
BENCHMARK(BM_Eigh)->Arg(2)->Arg(4)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_DeltaVector(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const HermitianMatrix a = random_psd_degenerate(3, n, {n / 2, n - n / 2});
    const HermitianMatrix b = random_hermitian(11, n);
    for (auto _ : state) benchmark::DoNotOptimize(delta_vector(b, a));
}
BENCHMARK(BM_DeltaVector)->Arg(4)->Arg(8)->Arg(16);

void BM_KyFan(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const HermitianMatrix h = random_hermitian(13, n);
    for (auto _ : state) benchmark::DoNotOptimize(kyfan_norm(h, n / 2));
}
BENCHMARK(BM_KyFan)->Arg(4)->Arg(16)->Arg(64);

void BM_SearchTrialQ2(benchmark::State& state) {
    SearchConfig config;
    config.question_id = "q2";
    config.dim = 3;
    config.n_trials = 64;
    config.base_seed = 21;
    for (auto _ : state) benchmark::DoNotOptimize(search(config));
}
BENCHMARK(BM_SearchTrialQ2)->Unit(benchmark::kMillisecond);

void BM_CheckerTrial(benchmark::State& state) {
    std::uint64_t seed = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(run_checker_trial("ineq1.concave", 4, seed++, 1e-9));
}
BENCHMARK(BM_CheckerTrial);

}  // namespace

BENCHMARK_MAIN();
