#include <benchmark/benchmark.h>

#include <random>

#include "hallcx/hallcore/hall.hpp"
#include "hallcx/suites/suites.hpp"

using namespace hallcx;

namespace {

PathAlgebra a2(std::uint32_t p) { return {Quiver::acyclic(2, {{0, 1}}), PrimeField(p)}; }
PathAlgebra a3(std::uint32_t p) { return {Quiver::acyclic(3, {{0, 1}, {1, 2}}), PrimeField(p)}; }

void BM_Rank(benchmark::State& state) {
  const PrimeField F(3);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  Matrix m(n, n);
  for (auto& x : m.data()) x = static_cast<Elem>(rng() % 3);
  for (auto _ : state) benchmark::DoNotOptimize(rank(F, m));
}
BENCHMARK(BM_Rank)->Arg(16)->Arg(64)->Arg(256);

void BM_Catalog(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    RepCatalog cat(a3(p));
    benchmark::DoNotOptimize(cat.classes_up_to({2, 2, 2}).size());
  }
}
BENCHMARK(BM_Catalog)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_ModuleProducts(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    RepCatalog cat(a3(p));
    ModuleCategory C(cat);
    HallAlgebra H(C);
    const auto classes = cat.classes_up_to({1, 1, 1});
    std::size_t terms = 0;
    for (const auto& a : classes)
      for (const auto& b : classes) terms += H.basis_product(a, b).size();
    benchmark::DoNotOptimize(terms);
  }
}
BENCHMARK(BM_ModuleProducts)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_WindowProducts(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    CxContext ctx(a2(2));
    ComplexCategory C(ctx, CxKind::window, m);
    HallAlgebra H(C);
    const auto keys = key_grid(ctx, CxKind::window, m, {1, 1}, 1);
    std::size_t terms = 0;
    for (const auto& a : keys)
      for (const auto& b : keys) terms += H.basis_product(a, b).size();
    benchmark::DoNotOptimize(terms);
  }
}
BENCHMARK(BM_WindowProducts)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Decompose(benchmark::State& state) {
  CxContext ctx(a3(3));
  const auto keys = key_grid(ctx, CxKind::window, 3, {1, 1, 1}, 2);
  std::mt19937_64 rng(7);
  std::vector<Cx> scrambled;
  for (const auto& k : keys) scrambled.push_back(scramble(ctx, realize(ctx, k), rng));
  for (auto _ : state)
    for (const auto& X : scrambled) benchmark::DoNotOptimize(decompose(ctx, X, false));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * scrambled.size()));
}
BENCHMARK(BM_Decompose)->Unit(benchmark::kMillisecond);

void BM_Suite(benchmark::State& state, const char* name) {
  for (auto _ : state) {
    SuiteConfig cfg{a2(2), {1, 1}};
    cfg.ms = {2};
    benchmark::DoNotOptimize(run_suite(name, cfg).passed());
  }
}
BENCHMARK_CAPTURE(BM_Suite, rel_5_5, "rel-5-5")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Suite, integration_7, "integration-7")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
