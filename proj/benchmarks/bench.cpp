#include "fm18/flag_sextic.hpp"
#include "fm18/ledger.hpp"
#include "fm18/pipeline.hpp"

#include <benchmark/benchmark.h>

namespace {

void bm_char_poly_14(benchmark::State& state)
{
    const auto& lie = fm18::g2();
    fm18::G2Element g = lie.cartan_element(fm18::Rat(2), fm18::Rat(3)) + lie.root_vector(1) +
                        lie.root_vector(8).scaled(fm18::Rat(5, 2));
    fm18::RatMatrix ad = lie.ad_matrix(g);
    for (auto _ : state) benchmark::DoNotOptimize(fm18::char_poly(ad));
}
BENCHMARK(bm_char_poly_14);

void bm_jordan_decomposition(benchmark::State& state)
{
    const auto& lie = fm18::g2();
    fm18::G2Element g = lie.cartan_element(fm18::Rat(0), fm18::Rat(1)) + lie.root_vector(0);
    for (auto _ : state) benchmark::DoNotOptimize(lie.jordan_decomposition(g));
}
BENCHMARK(bm_jordan_decomposition);

void bm_classify_fourfold(benchmark::State& state)
{
    fm18::G2Element g = fm18::sample_v18a();
    for (auto _ : state) benchmark::DoNotOptimize(fm18::classify_fourfold(g));
}
BENCHMARK(bm_classify_fourfold);

void bm_classify_section(benchmark::State& state)
{
    auto c = fm18::c1_normal_form();
    for (auto _ : state) benchmark::DoNotOptimize(fm18::classify_section(c));
}
BENCHMARK(bm_classify_section);

void bm_ledger_identities(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(fm18::verify_ledger_identities());
}
BENCHMARK(bm_ledger_identities);

} // namespace

BENCHMARK_MAIN();
