#include "monocomp/blowup.hpp"
#include "monocomp/colorgraph.hpp"
#include "monocomp/hypergraph.hpp"
#include "monocomp/lp.hpp"
#include "monocomp/search.hpp"

#include <benchmark/benchmark.h>

using namespace monocomp;

namespace {

void BM_nu_star_top_level(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    const Hypergraph top = top_level(build_hr(r), WeightAssignment::uniform(r * r - r));
    for (auto _ : state) benchmark::DoNotOptimize(nu_star(top).first);
}
BENCHMARK(BM_nu_star_top_level)->Arg(3)->Arg(4)->Arg(5);

void BM_pfm_feasibility(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    const Hypergraph h = build_hr(r);
    for (auto _ : state) benchmark::DoNotOptimize(perfect_fractional_matching(h).matching);
}
BENCHMARK(BM_pfm_feasibility)->Arg(3)->Arg(5);

void BM_perturbed_graph(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    const long long n = r == 3 ? 18 : 260;
    for (auto _ : state) {
        const ColoredGraph g = perturbed_graph(r, 1, n);
        benchmark::DoNotOptimize(g.n);
    }
}
BENCHMARK(BM_perturbed_graph)->Arg(3)->Arg(5);

void BM_analyze_materialized(benchmark::State& state) {
    const ColoredGraph g = gys_construction(3, 1998);
    for (auto _ : state) benchmark::DoNotOptimize(analyze(g).max_component);
}
BENCHMARK(BM_analyze_materialized);

void BM_mc_oracle_k4(benchmark::State& state) {
    const SimpleGraph k4 = complete_graph(4);
    for (auto _ : state) benchmark::DoNotOptimize(mc_oracle(k4, 3));
}
BENCHMARK(BM_mc_oracle_k4);

void BM_deletion_search_r3(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_s_choices(3).orbits.count);
}
BENCHMARK(BM_deletion_search_r3);

void BM_kirkman_coloring(benchmark::State& state) {
    const RbibdDesign d = kirkman_15();
    for (auto _ : state) benchmark::DoNotOptimize(design_coloring(d, 105).n);
}
BENCHMARK(BM_kirkman_coloring);

} // namespace

BENCHMARK_MAIN();
