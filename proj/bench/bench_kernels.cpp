#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "qwalk/figures.hpp"
#include "qwalk/kernels.hpp"

using namespace qwalk;

namespace {

std::vector<Complex> ramp(std::size_t n) {
    std::vector<Complex> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = Complex(std::sin(0.1 * i), std::cos(0.3 * i)) / std::sqrt(double(n));
    return v;
}

const kernels::Coin2 kCoin{std::cos(0.5), Complex(0, std::sin(0.5)), Complex(0, std::sin(0.5)), std::cos(0.5)};

template <bool Parallel>
void BM_CoinShift(benchmark::State& state) {
    const std::size_t L = state.range(0);
    auto in = ramp(2 * L);
    std::vector<Complex> out(2 * L);
    for (auto _ : state) {
        if constexpr (Parallel)
            kernels::coin_shift(in, out, L, kCoin);
        else
            kernels::serial::coin_shift(in, out, L, kCoin);
        benchmark::DoNotOptimize(out.data());
        std::swap(in, out);
    }
    state.SetItemsProcessed(state.iterations() * 2 * L);
}

template <bool Parallel>
void BM_NormSquared(benchmark::State& state) {
    const auto v = ramp(2 * state.range(0));
    for (auto _ : state) {
        double n = Parallel ? kernels::norm_squared(v) : kernels::serial::norm_squared(v);
        benchmark::DoNotOptimize(n);
    }
    state.SetItemsProcessed(state.iterations() * v.size());
}

template <bool Parallel>
void BM_CoinBlock(benchmark::State& state) {
    const std::size_t L = state.range(0);
    const auto v = ramp(2 * L);
    Complex out[4];
    for (auto _ : state) {
        if constexpr (Parallel)
            kernels::coin_block(v, L, out);
        else
            kernels::serial::coin_block(v, L, out);
        benchmark::DoNotOptimize(out);
    }
    state.SetItemsProcessed(state.iterations() * 2 * L);
}

void BM_BlpVersusPeriod(benchmark::State& state) {
    for (auto _ : state) {
        auto r = blp_versus_period("pi/6", 50, 2, 2 + state.range(0));
        benchmark::DoNotOptimize(r.ico.data());
    }
}

} // namespace

BENCHMARK(BM_CoinShift<false>)->Arg(1025)->Arg(16385)->Arg(262145);
BENCHMARK(BM_CoinShift<true>)->Arg(1025)->Arg(16385)->Arg(262145);
BENCHMARK(BM_NormSquared<false>)->Arg(1025)->Arg(16385)->Arg(262145);
BENCHMARK(BM_NormSquared<true>)->Arg(1025)->Arg(16385)->Arg(262145);
BENCHMARK(BM_CoinBlock<false>)->Arg(1025)->Arg(16385)->Arg(262145);
BENCHMARK(BM_CoinBlock<true>)->Arg(1025)->Arg(16385)->Arg(262145);
BENCHMARK(BM_BlpVersusPeriod)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
