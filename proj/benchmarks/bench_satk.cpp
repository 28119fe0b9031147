#include <benchmark/benchmark.h>

#include <memory>

#include "satk/lattice_oracle.hpp"
#include "satk/satake.hpp"

namespace {

void BM_StrataBelow(benchmark::State& state) {
  const satk::RootDatum d = satk::parse_group("SC:G2");
  const satk::Coweight mu = d.dominate(satk::Coweight{state.range(0), state.range(0)}).first;
  for (auto _ : state) benchmark::DoNotOptimize(d.strata_below(mu));
}
BENCHMARK(BM_StrataBelow)->Arg(1)->Arg(2)->Arg(4);

void BM_HeckeMul(benchmark::State& state) {
  const satk::SatakeAlgebra a(std::make_shared<satk::RootDatum>(satk::parse_group("GL3")));
  const satk::Int k = state.range(0);
  const auto f = a.tau(satk::Coweight{k, 0, -k}, 5) + a.tau(satk::Coweight{1, 0, 0}, 5);
  const auto g = a.tau(satk::Coweight{k, k, 0}, 5);
  for (auto _ : state) benchmark::DoNotOptimize(a.hecke_mul(f, g));
}
BENCHMARK(BM_HeckeMul)->Arg(1)->Arg(2)->Arg(3);

void BM_HeckeMulViaK0(benchmark::State& state) {
  const satk::SatakeAlgebra a(std::make_shared<satk::RootDatum>(satk::parse_group("GL3")));
  const satk::Int k = state.range(0);
  const auto f = a.tau(satk::Coweight{k, 0, -k}, 5) + a.tau(satk::Coweight{1, 0, 0}, 5);
  const auto g = a.tau(satk::Coweight{k, k, 0}, 5);
  for (auto _ : state) benchmark::DoNotOptimize(a.hecke_mul_via_k0(f, g));
}
BENCHMARK(BM_HeckeMulViaK0)->Arg(1)->Arg(2)->Arg(3);

void BM_EnumerateLattices(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(satk::enumerate_lattices(2, 3, q));
}
BENCHMARK(BM_EnumerateLattices)->Arg(2)->Arg(3)->Arg(5);

void BM_OracleStructureConstants(benchmark::State& state) {
  const satk::Coweight mu{2, 1, 0}, lambda{1, 1, 0};
  for (auto _ : state) {
    const satk::LatticeOracle oracle(3, 2);  // fresh cache each iteration
    benchmark::DoNotOptimize(oracle.structure_constants(mu, lambda));
  }
}
BENCHMARK(BM_OracleStructureConstants);

}  // namespace
BENCHMARK_MAIN();
