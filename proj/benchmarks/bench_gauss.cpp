#include <benchmark/benchmark.h>

#include "mp2/gauss.hpp"

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

static void BM_GaussGOracle(benchmark::State& state) {
  auto& f = fixture();
  UnitCharacter chi(f.cfg, (int)state.range(0), 1);
  AdditiveCharacter psi = AdditiveCharacter::base(f.cfg).twist(
      ScaledPAdic::make(5, -(int)state.range(0), Rational(1)));
  for (auto _ : state) {
    CycNumber g = gauss_g_oracle(f.cfg, f.ctx, chi, psi);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_GaussGOracle)->Arg(1)->Arg(2)->Arg(3);

static void BM_GaussHPair(benchmark::State& state) {
  auto& f = fixture();
  UnitCharacter chi(f.cfg, 2, 2);
  AdditiveCharacter psi = AdditiveCharacter::base(f.cfg).twist(
      ScaledPAdic::make(5, -2, Rational(1)));
  AdditiveCharacter psi_xi = psi.twist(ScaledPAdic::make(5, 0, Rational(f.cfg.xi())));
  for (auto _ : state) {
    CycNumber h1 = gauss_h_oracle(f.cfg, f.ctx, chi, psi);
    CycNumber h2 = gauss_h_oracle(f.cfg, f.ctx, chi, psi_xi);
    CycNumber pair = h1 * h1.conj() + h2 * h2.conj();
    benchmark::DoNotOptimize(pair);
  }
}
BENCHMARK(BM_GaussHPair);

static void BM_WeilIndex(benchmark::State& state) {
  auto& f = fixture();
  AdditiveCharacter psi = AdditiveCharacter::psi_eps(f.cfg, 1);
  ScaledPAdic a = square_class_rep(f.cfg, SquareClass::XiPi);
  for (auto _ : state) {
    WeilIndex w = weil_index(f.cfg, f.ctx, a, psi);
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_WeilIndex);

BENCHMARK_MAIN();
