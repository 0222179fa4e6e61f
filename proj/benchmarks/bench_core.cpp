#include <benchmark/benchmark.h>

#include "blockscope/blocks.hpp"
#include "blockscope/groups.hpp"

using namespace blockscope;

static void BM_stabilizer_chain(benchmark::State& state) {
    auto gens = groups::symmetric(6).generators();
    for (auto _ : state) {
        PermGroup g = PermGroup::from_generators(6, gens);
        benchmark::DoNotOptimize(g.order());
    }
}
BENCHMARK(BM_stabilizer_chain);

static void BM_conjugacy_classes(benchmark::State& state) {
    auto gens = groups::symmetric(6).generators();
    for (auto _ : state) {
        PermGroup g = PermGroup::from_generators(6, gens);
        benchmark::DoNotOptimize(g.conjugacy_classes().size());
    }
}
BENCHMARK(BM_conjugacy_classes);

static void BM_character_table(benchmark::State& state) {
    PermGroup g = groups::symmetric(5);
    for (auto _ : state) {
        CharacterTable t = compute_table(g, "S5");
        benchmark::DoNotOptimize(t.row_count());
    }
}
BENCHMARK(BM_character_table);

static void BM_block_partition(benchmark::State& state) {
    PermGroup g = groups::symmetric(5);
    CharacterTable t = compute_table(g, "S5");
    for (auto _ : state) {
        BlockDecomposition d = block_partition(t, 2);
        benchmark::DoNotOptimize(d.blocks.size());
    }
}
BENCHMARK(BM_block_partition);

static void BM_cyclotomic_inverse(benchmark::State& state) {
    Cyclotomic v = Cyclotomic::zeta(12, 1) + Cyclotomic(Rational(3, 7));
    for (auto _ : state) {
        Cyclotomic w = v.inverse();
        benchmark::DoNotOptimize(w.is_zero());
    }
}
BENCHMARK(BM_cyclotomic_inverse);

static void BM_brauer_identity(benchmark::State& state) {
    PermGroup g = groups::symmetric(4);
    for (auto _ : state) {
        BrauerIdentityResult r = brauer_count_identity(g, 2);
        benchmark::DoNotOptimize(r.holds);
    }
}
BENCHMARK(BM_brauer_identity);

BENCHMARK_MAIN();
