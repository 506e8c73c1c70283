#include <benchmark/benchmark.h>

#include "pgm/cipher.hpp"
#include "pgm/experiment.hpp"
#include "pgm/witness.hpp"

namespace {

void bench_make_group(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(pgm::make_group("cyclic:2xcyclic:4"));
}
BENCHMARK(bench_make_group);

void bench_eh_generating_set(benchmark::State& state) {
  const pgm::GroupTable g = pgm::make_group("cyclic:12");
  const pgm::EhConfig cfg = pgm::make_eh_config(g, true);
  for (auto _ : state)
    benchmark::DoNotOptimize(pgm::eh_generating_set(cfg));
}
BENCHMARK(bench_eh_generating_set);

void bench_breve_map(benchmark::State& state) {
  const pgm::GroupTable g = pgm::make_group("cyclic:60");
  const pgm::SubgroupChain chain = pgm::choose_chains(g).primary;
  const pgm::Etls etls = pgm::random_etls(g, chain, 42);
  for (auto _ : state) benchmark::DoNotOptimize(pgm::breve_map(etls.sig));
}
BENCHMARK(bench_breve_map);

void bench_schreier_sims_cyclic12(benchmark::State& state) {
  const pgm::GroupTable g = pgm::make_group("cyclic:12");
  const auto perms =
      pgm::generator_perms(pgm::eh_generating_set(pgm::make_eh_config(g, true)));
  for (auto _ : state) {
    pgm::Bsgs b = pgm::schreier_sims(perms);
    benchmark::DoNotOptimize(b.order);
  }
}
BENCHMARK(bench_schreier_sims_cyclic12);

void bench_brute_force_closure_wreath8(benchmark::State& state) {
  const pgm::GroupTable g = pgm::make_group("cyclic:8");
  const auto perms =
      pgm::generator_perms(pgm::eh_generating_set(pgm::make_eh_config(g, false)));
  for (auto _ : state)
    benchmark::DoNotOptimize(pgm::brute_force_closure(perms));
}
BENCHMARK(bench_brute_force_closure_wreath8);

void bench_mover(benchmark::State& state) {
  const pgm::GroupTable g = pgm::make_group("cyclic:12");
  const pgm::ProofContext ctx = pgm::make_proof_context(g);
  int x = 0;
  for (auto _ : state) {
    x = (x + 1) % 11;
    benchmark::DoNotOptimize(
        pgm::mover_two_transitive(ctx, x, x + 1, 11 - x, x));
  }
}
BENCHMARK(bench_mover);

void bench_keygen(benchmark::State& state) {
  const pgm::GroupTable g = pgm::make_group("quaternion");
  const pgm::SubgroupChain chain = pgm::choose_chains(g).primary;
  std::uint64_t seed = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(pgm::keygen(g, chain, ++seed));
}
BENCHMARK(bench_keygen);

}  // namespace

BENCHMARK_MAIN();
