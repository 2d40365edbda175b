#include <benchmark/benchmark.h>

#include "mp2/weil_oracle.hpp"

using namespace mp2;

namespace {
struct Fixture {
  FieldConfig cfg = FieldConfig::make(3);
  CycContextPtr ctx = std::make_shared<CycContext>(cfg.cyclotomic_order());
};
Fixture& fixture() {
  static Fixture f;
  return f;
}
}  // namespace

static void BM_EvenWeilDim(benchmark::State& state) {
  auto& f = fixture();
  WeilRepConfig rep{0, SquareClass::Pi, UnitCharacter::quadratic(f.cfg)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        even_weil_fixed_dim_oracle(f.cfg, f.ctx, rep, (int)state.range(0)));
  }
}
BENCHMARK(BM_EvenWeilDim)->Arg(2)->Arg(4)->Arg(6);

BENCHMARK_MAIN();
