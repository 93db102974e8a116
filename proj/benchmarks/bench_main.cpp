// Microbenchmarks for the exact linear algebra that everything else sits on.

#include <benchmark/benchmark.h>

#include <random>

#include "moorediag/duality.hpp"

using namespace moorediag;

namespace {

Mat random_matrix(size_t rows, size_t cols, int lo, int hi, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> d(lo, hi);
    Mat m(rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) m.at(i, j) = Int(d(rng));
    return m;
}

void bm_snf_generic(benchmark::State& state) {
    size_t n = static_cast<size_t>(state.range(0));
    Mat a = random_matrix(n, n, -10, 10, 42);
    for (auto _ : state) benchmark::DoNotOptimize(snf(a));
}
BENCHMARK(bm_snf_generic)->Arg(4)->Arg(8)->Arg(12);

void bm_snf_bounded(benchmark::State& state) {
    size_t n = static_cast<size_t>(state.range(0));
    Mat a = random_matrix(n, 2 * n, 0, 3, 42);
    for (auto _ : state) benchmark::DoNotOptimize(snf_mod(a, Int(4)));
}
BENCHMARK(bm_snf_bounded)->Arg(8)->Arg(16)->Arg(32);

void bm_kernel(benchmark::State& state) {
    FgGroup big = FgGroup::parse("Z/2+Z/4+Z/8");
    HomGroup hg(big, big);
    Hom doubling = Hom::scalar(hg.group(), Int(2));
    for (auto _ : state) benchmark::DoNotOptimize(kernel(doubling));
}
BENCHMARK(bm_kernel);

void bm_realize_phi(benchmark::State& state) {
    FgGroup e8 = FgGroup::parse("Z/2+Z/2+Z/2");
    ExtGroup eg(e8, e8);
    auto classes = eg.all_classes();
    size_t i = 0;
    for (auto _ : state) {
        Extension e = realize(classes[i++ % classes.size()]);
        benchmark::DoNotOptimize(phi(e, false));
    }
}
BENCHMARK(bm_realize_phi);

void bm_diagram_hom_group(benchmark::State& state) {
    ExtEtaDiagram fb = representable(CjObject::b);
    ExtEtaDiagram h = spp_H(SppObject{FgGroup::parse("Z/2+Z/2"), FgGroup::parse("Z/4")});
    for (auto _ : state) benchmark::DoNotOptimize(DiagramHomGroup(fb, h).group());
}
BENCHMARK(bm_diagram_hom_group);

void bm_delta_dual(benchmark::State& state) {
    ExtEtaDiagram fb = representable(CjObject::b);
    for (auto _ : state) benchmark::DoNotOptimize(delta_dual_explicit(fb));
}
BENCHMARK(bm_delta_dual);

}  // namespace

BENCHMARK_MAIN();
