#include <benchmark/benchmark.h>

#include <random>

#include "nilfibre/invariant.hpp"
#include "nilfibre/verify.hpp"

using namespace nilfibre;

static void BM_EnumerateExample1(benchmark::State& state) {
    auto d = make_diagram(Composition::of({1, 2, 3, 1, 1, 3, 2}));
    for (auto _ : state) {
        auto en = enumerate_component_tableaux(d);
        benchmark::DoNotOptimize(en.tableaux.size());
    }
}
BENCHMARK(BM_EnumerateExample1);

static void BM_BlackboxInvariantN20(benchmark::State& state) {
    auto d = make_diagram(Composition::of({3, 4, 2, 1, 2, 4, 3, 1}));
    BsInvariant inv(d, {1, 7, 3});  // degree 14 across 19 boxes
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<std::uint64_t> dist(0, Fp::P - 1);
    std::map<Coord, std::uint64_t> point;
    for (const Coord& c : inv.support()) point[c] = dist(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(inv.evaluate_fp([&](Coord c) { return point.at(c); }));
    }
}
BENCHMARK(BM_BlackboxInvariantN20);

static void BM_SymbolicInvariant1212(benchmark::State& state) {
    auto d = make_diagram(Composition::of({1, 2, 1, 2}));
    for (auto _ : state) {
        BsInvariant inv(d, {2, 4, 2});
        benchmark::DoNotOptimize(inv.symbolic().term_count());
    }
}
BENCHMARK(BM_SymbolicInvariant1212);

static void BM_VerifySuiteN5(benchmark::State& state) {
    SuiteOptions opt;
    for (auto _ : state) {
        auto r = verify_all_up_to(5, opt);
        benchmark::DoNotOptimize(r.checks_run);
    }
}
BENCHMARK(BM_VerifySuiteN5);

BENCHMARK_MAIN();
