#include <benchmark/benchmark.h>

#include "lureduce/kernels.hpp"
#include "lureduce/reduction.hpp"

using namespace lureduce;

namespace {

template <void (*Kernel)(std::span<Complex>, const kernels::PairLayout&, const Mat2&)>
void BM_RotatePairs(benchmark::State& st) {
    const int l = static_cast<int>(st.range(0));
    PureState s = random_state(2, l, 1);
    const Mat2 rot = random_unitary2(2);
    const kernels::PairLayout layout{s.stride(l / 2), 2, 0, 1};
    for (auto _ : st) {
        Kernel(s.amplitudes(), layout, rot);
        benchmark::DoNotOptimize(s.amplitudes().data());
    }
    st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(s.size()));
}

template <double (*Kernel)(std::span<const Complex>)>
void BM_NormSquared(benchmark::State& st) {
    const PureState s = random_state(2, static_cast<int>(st.range(0)), 1);
    for (auto _ : st) benchmark::DoNotOptimize(Kernel(s.amplitudes()));
    st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(s.size()));
}

void BM_Reduce(benchmark::State& st) {
    const PureState s = random_state(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)), 3);
    for (auto _ : st) benchmark::DoNotOptimize(reduce(s));
}

}  // namespace

BENCHMARK(BM_RotatePairs<kernels::serial::rotate_pairs>)->Name("rotate_pairs/serial")->DenseRange(10, 22, 4);
BENCHMARK(BM_RotatePairs<kernels::omp::rotate_pairs>)->Name("rotate_pairs/omp")->DenseRange(10, 22, 4);
BENCHMARK(BM_NormSquared<kernels::serial::norm_squared>)->Name("norm_squared/serial")->DenseRange(10, 22, 4);
BENCHMARK(BM_NormSquared<kernels::omp::norm_squared>)->Name("norm_squared/omp")->DenseRange(10, 22, 4);
BENCHMARK(BM_Reduce)->Args({2, 10})->Args({3, 3})->Args({4, 3})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
