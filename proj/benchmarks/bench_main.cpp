#include <benchmark/benchmark.h>

#include "thetakit/coeffs.hpp"
#include "thetakit/graph.hpp"
#include "thetakit/graph6.hpp"
#include "thetakit/minrank.hpp"
#include "thetakit/set_family.hpp"
#include "thetakit/theta.hpp"

using namespace thetakit;

namespace {

Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle(int n) {
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

void bm_theta_cycle_complement(benchmark::State& state) {
    const Graph g = cycle(static_cast<int>(state.range(0))).complement();
    const LSpec L = LSpec::finite({0, 1});
    for (auto _ : state) {
        ThetaResult res = theta_exact(g, L);
        benchmark::DoNotOptimize(res.value);
    }
}
BENCHMARK(bm_theta_cycle_complement)->Arg(4)->Arg(5)->Arg(6);

void bm_theta_odd(benchmark::State& state) {
    const Graph g = cycle(static_cast<int>(state.range(0)));
    const LSpec L = LSpec::modular(2, {1});
    for (auto _ : state) {
        ThetaResult res = theta_exact(g, L);
        benchmark::DoNotOptimize(res.value);
    }
}
BENCHMARK(bm_theta_odd)->Arg(5)->Arg(6)->Arg(7);

void bm_minrank_gf3(benchmark::State& state) {
    const Graph g = cycle(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        MinrankResult res = minrank_gfp(g, 3);
        benchmark::DoNotOptimize(res.value);
    }
}
BENCHMARK(bm_minrank_gf3)->Arg(4)->Arg(5)->Arg(6);

void bm_bipartite_minrank_gf2(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    BipartiteGraph g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if ((i + j) % 3 != 0) g.add_edge(i, j);
    for (auto _ : state) {
        MinrankResult res = bipartite_minrank_gfp(g, 2);
        benchmark::DoNotOptimize(res.value);
    }
}
BENCHMARK(bm_bipartite_minrank_gf2)->Arg(4)->Arg(6)->Arg(8);

void bm_witness_matrix(benchmark::State& state) {
    const int l = static_cast<int>(state.range(0));
    SetFamily F;
    F.ground = l;
    F.sets = subsets_of_size(l, 3);
    for (auto _ : state) {
        ExactMatrix m = witness_matrix_modular(F, F, {1, 2}, 3, WitnessVariant::Product);
        benchmark::DoNotOptimize(m.rank());
    }
}
BENCHMARK(bm_witness_matrix)->Arg(5)->Arg(6);

void bm_coefficients(benchmark::State& state) {
    for (auto _ : state) {
        CoeffVector a = binomial_basis_coeffs({1, 2, 3}, 7);
        benchmark::DoNotOptimize(a.values);
    }
}
BENCHMARK(bm_coefficients);

void bm_graph6_round_trip(benchmark::State& state) {
    const Graph g = cycle(20).complement();
    for (auto _ : state) {
        Graph back = parse_graph6(to_graph6(g));
        benchmark::DoNotOptimize(back.n());
    }
}
BENCHMARK(bm_graph6_round_trip);

}  // namespace

BENCHMARK_MAIN();
