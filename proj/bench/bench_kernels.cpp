#include <benchmark/benchmark.h>

#include "fermat/parallel.hpp"
#include "fermat/primality.hpp"

using namespace fermat;

namespace {

void BM_ClassifySerial(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(classify_fermat_range_serial(1, static_cast<unsigned>(state.range(0))));
}

void BM_ClassifyParallel(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(classify_fermat_range(1, static_cast<unsigned>(state.range(0))));
}

void BM_CongruenceSerial(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(congruence_sweep_serial(LucasParams::standard(), state.range(0)));
}

void BM_CongruenceParallel(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(congruence_sweep(LucasParams::standard(), state.range(0)));
}

void BM_CrossCheckSerial(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(reduction_crosscheck_serial(static_cast<unsigned>(state.range(0)), 2000, 1));
}

void BM_CrossCheckParallel(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(reduction_crosscheck(static_cast<unsigned>(state.range(0)), 2000, 1));
}

void BM_RankSweepSerial(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(rank_divisibility_sweep_serial(LucasParams::standard(), state.range(0), 2000, 5000));
}

void BM_RankSweepParallel(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(rank_divisibility_sweep(LucasParams::standard(), state.range(0), 2000, 5000));
}

// The squaring chain itself, with the fold reduction and with mpz_mod.
template <bool Special>
void BM_SquaringChain(benchmark::State& state)
{
    const unsigned n = static_cast<unsigned>(state.range(0));
    const Modulus f = Modulus::fermat(n);
    const std::uint64_t steps = (std::uint64_t(1) << n) - 2;
    for (auto _ : state) {
        BigInt s = 5;
        for (std::uint64_t i = 0; i < steps; ++i) {
            s *= s;
            s -= 2;
            if constexpr (Special)
                f.reduce(s);
            else
                reduce_generic(s, f.value());
        }
        benchmark::DoNotOptimize(s);
    }
}

} // namespace

BENCHMARK(BM_ClassifySerial)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassifyParallel)->Arg(12)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CongruenceSerial)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CongruenceParallel)->Arg(2000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CrossCheckSerial)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CrossCheckParallel)->Arg(10)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_RankSweepSerial)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankSweepParallel)->Arg(200)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SquaringChain<true>)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SquaringChain<false>)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
