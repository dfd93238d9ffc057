#include <weylbranch/admissibility.hpp>
#include <weylbranch/character.hpp>
#include <weylbranch/levi.hpp>
#include <weylbranch/weyl_module.hpp>

#include <benchmark/benchmark.h>

using namespace weylbranch;

namespace {

void BM_BuildRootSystem(benchmark::State& state) {
    for (auto _ : state) {
        RootSystem rs(Family::B, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(rs.positive_roots().size());
    }
}
BENCHMARK(BM_BuildRootSystem)->Arg(4)->Arg(8);

void BM_DominantMultiplicities(benchmark::State& state) {
    const RootSystem& rs = RootSystem::get(Family::B, static_cast<int>(state.range(0)));
    const Weight two_rho = rs.scaled(rs.rho(), 2);
    for (auto _ : state) {
        auto table = dominant_multiplicities(rs, two_rho);
        benchmark::DoNotOptimize(table.size());
    }
}
BENCHMARK(BM_DominantMultiplicities)->Arg(3)->Arg(4);

void BM_FreudenthalMass(benchmark::State& state) {
    const RootSystem& rs = RootSystem::get(Family::D, 4);
    const Weight lam = rs.from_fundamental(std::vector<Int>{1, 1, 1, 1});
    for (auto _ : state) {
        benchmark::DoNotOptimize(freudenthal_mass(rs, lam));
    }
}
BENCHMARK(BM_FreudenthalMass);

void BM_WeylOrbit(benchmark::State& state) {
    const RootSystem& rs = RootSystem::get(Family::B, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto orbit = rs.weyl_orbit(rs.rho());
        benchmark::DoNotOptimize(orbit.size());
    }
}
BENCHMARK(BM_WeylOrbit)->Arg(3)->Arg(4);

void BM_EnumerateSimpleLevis(benchmark::State& state) {
    const RootSystem& rs = RootSystem::get(Family::B, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto levis = enumerate_simple_levis(rs);
        benchmark::DoNotOptimize(levis.size());
    }
}
BENCHMARK(BM_EnumerateSimpleLevis)->Arg(3)->Arg(4);

void BM_RestrictAndDecompose(benchmark::State& state) {
    const RootSystem& rs = RootSystem::get(Family::B, 3);
    const LeviSubalgebra levi = LeviSubalgebra::from_simple_roots(
        rs, {rs.simple_root(1), rs.simple_root(2)});
    const Character& c = irreducible_character(rs, rs.from_fundamental(std::vector<Int>{1, 1, 0}));
    for (auto _ : state) {
        auto parts = decompose(restrict_character(c, levi));
        benchmark::DoNotOptimize(parts.size());
    }
}
BENCHMARK(BM_RestrictAndDecompose);

void BM_SurjectivityOracle(benchmark::State& state) {
    const RootSystem& rs = RootSystem::get(Family::B, 3);
    const LeviSubalgebra levi = LeviSubalgebra::from_simple_roots(
        rs, {rs.sub(Weight::eps(3, 1), Weight::eps(3, 2)), rs.canonical(Weight::eps(3, 2))});
    const std::vector<Int> lambda{0, 1, 1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(surjectivity_oracle(levi, lambda));
    }
}
BENCHMARK(BM_SurjectivityOracle);

} // namespace

BENCHMARK_MAIN();
