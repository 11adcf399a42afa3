#include "nsmp/classifier.hpp"
#include "nsmp/engine.hpp"
#include "nsmp/fixtures.hpp"
#include "nsmp/transform.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace nsmp;

void bm_check_order5(benchmark::State& state) {
    RationalMatrix a = fixtures::spectrally_arbitrary_matrix(2);
    for (auto _ : state) benchmark::DoNotOptimize(check(a, Property::Nsmp));
}
BENCHMARK(bm_check_order5);

void bm_check_dense_order6(benchmark::State& state) {
    SignPattern p(6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            if (i != j) p.at(i, j) = (i + j) % 2 ? Sign::Plus : Sign::Minus;
    RationalMatrix a = sample_realization(p, 7, 10);
    for (auto _ : state) benchmark::DoNotOptimize(check(a, Property::Nsmp));
}
BENCHMARK(bm_check_dense_order6);

void bm_canonical_form_order4(benchmark::State& state) {
    SignPattern p = parse_pattern("0 + 0 0\n+ 0 - 0\n0 + 0 +\n+ 0 0 0");
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(p));
}
BENCHMARK(bm_canonical_form_order4);

void bm_max_composite_cycle_order8(benchmark::State& state) {
    SignPattern p(8);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j)
            if ((i * 5 + j * 3) % 4 != 0) p.at(i, j) = Sign::Plus;
    for (auto _ : state) benchmark::DoNotOptimize(max_composite_cycle(p));
}
BENCHMARK(bm_max_composite_cycle_order8);

void bm_classify_order3(benchmark::State& state) {
    SignPattern p = parse_pattern("+ + 0\n- - 0\n0 0 0");
    for (auto _ : state) benchmark::DoNotOptimize(requires_nsmp(p));
}
BENCHMARK(bm_classify_order3);

}  // namespace

BENCHMARK_MAIN();
