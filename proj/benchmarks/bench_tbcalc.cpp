#include <benchmark/benchmark.h>

#include "oracles.hpp"
#include "tbcalc/lattice.hpp"
#include "tbcalc/open_book.hpp"

using namespace tbcalc;

static void BM_SmithNormalForm(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    testing::Generator gen(42);
    const IntegerMatrix m = gen.matrix(n, n, 9);
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

static OpenBookPresentation dense_open_book(std::size_t twists) {
    testing::Generator gen(7);
    std::vector<DehnTwist> ts;
    for (std::size_t k = 0; k < twists; ++k) ts.push_back({k % 2 ? -1 : 1, gen.vector(6, 2)});
    IntegerMatrix pairings(twists, twists);
    for (std::size_t k = 0; k < twists; ++k)
        for (std::size_t m = k + 1; m < twists; ++m) {
            pairings(k, m) = gen.uniform(-2, 2);
            pairings(m, k) = -pairings(k, m);
        }
    return {PageSurface(2, 3), std::move(ts), std::move(pairings)};
}

static void BM_MonodromyIterative(benchmark::State& state) {
    const auto ob = dense_open_book(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(monodromy_matrix(ob));
}
BENCHMARK(BM_MonodromyIterative)->DenseRange(4, 16, 4);

static void BM_MonodromyReference(benchmark::State& state) {
    const auto ob = dense_open_book(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(monodromy_matrix_reference(ob));
}
BENCHMARK(BM_MonodromyReference)->DenseRange(4, 16, 4);
BENCHMARK_MAIN();
