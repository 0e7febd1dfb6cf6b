#include <benchmark/benchmark.h>

#include <homext/extalg.hpp>
#include <homext/fuzz.hpp>

using namespace homext;

namespace {

IntMatrix dense_matrix(std::size_t n, long seed) {
    IntMatrix A(n, n);
    std::uint64_t s = static_cast<std::uint64_t>(seed) * 0x9E3779B97F4A7C15ull + 1;
    for (auto& e : A.a) {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        e = static_cast<long>((s >> 40) % 19) - 9;
    }
    return A;
}

void BM_snf(benchmark::State& state) {
    IntMatrix A = dense_matrix(static_cast<std::size_t>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(snf(A).D);
}
BENCHMARK(BM_snf)->Arg(4)->Arg(8)->Arg(16);

void BM_hom_group(benchmark::State& state) {
    Ring r = Ring::make(8);
    Module A = Module::make(r, {2, 4, 8}), B = Module::make(r, {2, 2, 8});
    for (auto _ : state) benchmark::DoNotOptimize(hom_group(A, B).order());
}
BENCHMARK(BM_hom_group);

void BM_ext_group(benchmark::State& state) {
    Ring r = Ring::make(8);
    Module C = Module::make(r, {2, 4}), D = Module::make(r, {2, 4});
    for (auto _ : state) benchmark::DoNotOptimize(ext_group(1, C, D).order());
}
BENCHMARK(BM_ext_group);

void BM_baer_sum(benchmark::State& state) {
    Ring r = Ring::make(4);
    Module Z2 = Module::make(r, {2});
    ExtGroup G = ext_group(1, Z2, Z2);
    Extension S = psi(G, {1});
    for (auto _ : state) benchmark::DoNotOptimize(baer_sum(S, S).middle());
}
BENCHMARK(BM_baer_sum);

void BM_chain_map_group(benchmark::State& state) {
    FuzzStream fs(5, 0);
    Ring r = Ring::make(8);
    ChainComplex X = fuzz_complex(fs, r, 0, 4, 2);
    ChainComplex Y = fuzz_complex(fs, r, 0, 4, 2);
    for (auto _ : state) benchmark::DoNotOptimize(chain_map_group(X, Y).order());
}
BENCHMARK(BM_chain_map_group);

void BM_enumerate_classes(benchmark::State& state) {
    Ring r = Ring::make(4);
    Module Z2 = Module::make(r, {2});
    Module V = Module::make(r, {2, 2});
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_extension_classes(Z2, V).size());
}
BENCHMARK(BM_enumerate_classes);

void BM_verify_adjunction(benchmark::State& state) {
    FuzzStream fs(5, 1);
    Ring r = Ring::make(4);
    ChainComplex X = fuzz_complex(fs, r, -1, 3, 2);
    Module C = Module::make(r, {2});
    for (auto _ : state) benchmark::DoNotOptimize(verify_adjunction(1, X, C, 0).ok);
}
BENCHMARK(BM_verify_adjunction);

}  // namespace

BENCHMARK_MAIN();
