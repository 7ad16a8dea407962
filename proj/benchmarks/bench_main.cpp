#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "trinil/canon.hpp"
#include "trinil/engine.hpp"
#include "trinil/lab.hpp"
#include "trinil/lift.hpp"

using namespace trinil;

namespace {

MatZ random_matz(std::mt19937_64& rng, std::size_t n, const Modulus& mod) {
    std::vector<std::int64_t> v(n * n);
    for (auto& x : v) x = static_cast<std::int64_t>(rng() % mod.m());
    return MatZ::from_entries(n, mod, v);
}

MatGF random_matgf(std::mt19937_64& rng, std::size_t n, std::uint8_t p) {
    std::vector<std::uint8_t> v(n * n);
    for (auto& x : v) x = static_cast<std::uint8_t>(rng() % p);
    return MatGF::from_entries(n, p, v);
}

void BM_MatZMultiply(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto mod = Modulus::make(72);
    const auto a = random_matz(rng, n, mod);
    const auto b = random_matz(rng, n, mod);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_MatZMultiply)->RangeMultiplier(2)->Range(4, 64);

void BM_CharPoly(benchmark::State& state) {
    std::mt19937_64 rng(2);
    const auto a = random_matgf(rng, static_cast<std::size_t>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(char_poly(a));
}
BENCHMARK(BM_CharPoly)->RangeMultiplier(2)->Range(4, 64);

void BM_FrobeniusForm(benchmark::State& state) {
    std::mt19937_64 rng(3);
    const auto p = static_cast<std::uint8_t>(state.range(1));
    const auto a = random_matgf(rng, static_cast<std::size_t>(state.range(0)), p);
    for (auto _ : state) benchmark::DoNotOptimize(frobenius_form(a));
}
BENCHMARK(BM_FrobeniusForm)->ArgsProduct({{4, 8, 16, 32}, {2, 3}});

// Arguments: n, m.
void BM_Decompose(benchmark::State& state) {
    std::mt19937_64 rng(4);
    const auto mod = Modulus::make(static_cast<std::uint64_t>(state.range(1)));
    std::vector<MatZ> inputs;
    for (int i = 0; i < 32; ++i) inputs.push_back(random_matz(rng, static_cast<std::size_t>(state.range(0)), mod));
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(decompose(inputs[i++ % inputs.size()], 7));
}
BENCHMARK(BM_Decompose)
    ->Args({4, 12})
    ->Args({5, 24})
    ->Args({6, 36})
    ->Args({8, 72})
    ->Args({16, 72})
    ->Args({32, 1024})
    ->Args({32, 729});

void BM_DecomposeBatch(benchmark::State& state) {
    std::mt19937_64 rng(5);
    const auto mod = Modulus::make(72);
    std::vector<MatZ> inputs;
    for (int i = 0; i < 256; ++i) inputs.push_back(random_matz(rng, 8, mod));
    const auto threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(decompose_batch(inputs, 0, kDefaultFallbackBudget, threads));
}
BENCHMARK(BM_DecomposeBatch)->Arg(1)->Arg(4)->UseRealTime();

void BM_NewtonLift(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto mod = Modulus::make(std::uint64_t{1} << 20);
    // rank-one projection plus 2 * noise
    std::mt19937_64 rng(6);
    auto x = MatZ::zero(n, mod);
    x.set(0, 0, 1);
    x = x + 2 * random_matz(rng, n, mod);
    for (auto _ : state) benchmark::DoNotOptimize(newton_idempotent_lift(x));
}
BENCHMARK(BM_NewtonLift)->RangeMultiplier(2)->Range(4, 32);

void BM_ClassifyZm(benchmark::State& state) {
    const auto m = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(lab::classify_zm(m));
}
BENCHMARK(BM_ClassifyZm)->Arg(72)->Arg(1000)->Arg(3888);

}  // namespace

BENCHMARK_MAIN();
