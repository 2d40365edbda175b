#include <benchmark/benchmark.h>

#include <random>

#include "mp2/sl2.hpp"

using namespace mp2;

namespace {
struct Fixture {
  FieldConfig cfg = FieldConfig::make(5);
  CycContextPtr ctx = std::make_shared<CycContext>(cfg.cyclotomic_order());
};
Fixture& fixture() {
  static Fixture f;
  return f;
}
}  // namespace

static void BM_KubotaCocycle(benchmark::State& state) {
  auto& f = fixture();
  std::mt19937_64 rng(1);
  SL2Elem g1 = random_compact_element(f.cfg, CompactSubgroupSpec{0, 0}, rng);
  SL2Elem g2 = random_compact_element(f.cfg, CompactSubgroupSpec{0, 0}, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kubota_cocycle(f.cfg, g1, g2));
  }
}
BENCHMARK(BM_KubotaCocycle);

static void BM_SplittingSign(benchmark::State& state) {
  auto& f = fixture();
  std::mt19937_64 rng(2);
  SL2Elem k = random_compact_element(f.cfg, CompactSubgroupSpec{(int)state.range(0), 0},
                                     rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(splitting_s(f.cfg, f.ctx, (int)state.range(0), k));
  }
}
BENCHMARK(BM_SplittingSign)->Arg(0)->Arg(1);

static void BM_CosetOrbits(benchmark::State& state) {
  FieldConfig cfg = FieldConfig::make(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(coset_oracle(cfg, (int)state.range(0)));
  }
}
BENCHMARK(BM_CosetOrbits)->Arg(2)->Arg(3);

BENCHMARK_MAIN();
