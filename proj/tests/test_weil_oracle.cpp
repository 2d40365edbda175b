#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mp2/intmath.hpp"
#include "mp2/newforms.hpp"
#include "mp2/weil_oracle.hpp"

using namespace mp2;

namespace {
CycContextPtr ctx_for(const FieldConfig& cfg) {
  return std::make_shared<CycContext>(cfg.cyclotomic_order());
}
}  // namespace

TEST_CASE("even Weil dimensions: unramified trivial tower") {
  FieldConfig cfg = FieldConfig::make(3);
  auto ctx = ctx_for(cfg);
  WeilRepConfig rep{0, SquareClass::One, UnitCharacter::trivial(cfg)};
  // floor(m/2) + 1
  CHECK(even_weil_fixed_dim_oracle(cfg, ctx, rep, 0) == 1);
  CHECK(even_weil_fixed_dim_oracle(cfg, ctx, rep, 1) == 1);
  CHECK(even_weil_fixed_dim_oracle(cfg, ctx, rep, 2) == 2);
  CHECK(even_weil_fixed_dim_oracle(cfg, ctx, rep, 5) == 3);
}

TEST_CASE("even Weil dimensions: ramified class with Legendre eta") {
  FieldConfig cfg = FieldConfig::make(3);
  auto ctx = ctx_for(cfg);
  // chi ramified (class pi), eta the Legendre character: c(eta chi) = 0,
  // formula floor((m - 1)/2) + 1 at m >= 1
  WeilRepConfig rep{0, SquareClass::Pi, UnitCharacter::quadratic(cfg)};
  REQUIRE(UnitCharacter::quadratic(cfg).sign_at_minus_one(cfg) ==
          QuadraticCharacter{SquareClass::Pi}.sign_at_minus_one(cfg));
  CHECK(even_weil_fixed_dim_oracle(cfg, ctx, rep, 1) == 1);
  CHECK(even_weil_fixed_dim_oracle(cfg, ctx, rep, 2) == 1);
  CHECK(even_weil_fixed_dim_oracle(cfg, ctx, rep, 3) == 2);
}

TEST_CASE("even Weil oracle returns zero on central sign mismatch") {
  FieldConfig cfg = FieldConfig::make(3);
  auto ctx = ctx_for(cfg);
  // chi trivial has sign +1; Legendre eta has sign -1 for p=3
  WeilRepConfig rep{0, SquareClass::One, UnitCharacter::quadratic(cfg)};
  for (int m = 0; m <= 4; ++m)
    CHECK(even_weil_fixed_dim_oracle(cfg, ctx, rep, m) == 0);
}

TEST_CASE("even Weil oracle matches the closed formula on a spot grid") {
  FieldConfig cfg = FieldConfig::make(3);
  auto ctx = ctx_for(cfg);
  std::vector<UnitCharacter> etas;
  etas.push_back(UnitCharacter::trivial(cfg));
  for (i64 e = 1; e < 6; ++e) {
    UnitCharacter c(cfg, 2, e);
    if (c.conductor() >= 1) etas.push_back(c);
  }
  for (int eps = 0; eps <= 1; ++eps) {
    for (SquareClass chi :
         {SquareClass::One, SquareClass::Xi, SquareClass::Pi, SquareClass::XiPi}) {
      for (const auto& eta : etas) {
        for (int m = 0; m <= 4; ++m) {
          WeilRepConfig rep{eps, chi, eta};
          int oracle = even_weil_fixed_dim_oracle(cfg, ctx, rep, m);
          DimValue formula =
              dim_fixed(cfg, EvenWeilRep{chi}, LevelQuery{eps, eta, m});
          INFO("eps=", eps, " chi=", std::string(to_string(chi)), " c(eta)=", eta.conductor(),
               " e=", eta.exponent(), " m=", m);
          REQUIRE(formula.known);
          CHECK(oracle == formula.value);
        }
      }
    }
  }
}

TEST_CASE("monotonicity of the fixed-space dimension in m") {
  FieldConfig cfg = FieldConfig::make(5);
  auto ctx = ctx_for(cfg);
  WeilRepConfig rep{1, SquareClass::Xi, UnitCharacter::trivial(cfg)};
  int prev = 0;
  for (int m = 0; m <= 5; ++m) {
    int d = even_weil_fixed_dim_oracle(cfg, ctx, rep, m);
    CHECK(d >= prev);
    prev = d;
  }
}

TEST_CASE("kernel solutions are invariant under Borel generators") {
  FieldConfig cfg = FieldConfig::make(3);
  auto ctx = ctx_for(cfg);
  for (SquareClass chi : {SquareClass::One, SquareClass::Pi}) {
    UnitCharacter eta = chi == SquareClass::One ? UnitCharacter::trivial(cfg)
                                                : UnitCharacter::quadratic(cfg);
    WeilRepConfig rep{0, chi, eta};
    int m = 3;
    auto basis = even_weil_fixed_space_basis(cfg, ctx, rep, m);
    CHECK((int)basis.size() ==
          dim_fixed(cfg, EvenWeilRep{chi}, LevelQuery{0, eta, m}).value);
    for (const auto& phi : basis) {
      // unit torus generators act by eta(a^{-1})
      for (i64 a : {2, 4}) {
        TruncatedEvenFunction out =
            weil_action_B(cfg, ctx, rep, WeilGenerator::TorusUnit, Rational(a), phi);
        CycNumber scale = eta.inverse(cfg).eval(cfg, ctx, a);
        for (size_t i = 0; i < phi.vals.size(); ++i)
          CHECK(out.vals[i] == phi.vals[i] * scale);
        CHECK(out.tail == phi.tail * scale);
      }
      // the unipotent n(pi^{-eps}) fixes phi
      TruncatedEvenFunction out = weil_action_B(
          cfg, ctx, rep, WeilGenerator::UpperUnipotent, Rational(1), phi);
      for (size_t i = 0; i < phi.vals.size(); ++i)
        CHECK(out.vals[i] == phi.vals[i]);
    }
  }
}

TEST_CASE("unipotent action outside the family is rejected") {
  FieldConfig cfg = FieldConfig::make(3);
  auto ctx = ctx_for(cfg);
  WeilRepConfig rep{0, SquareClass::One, UnitCharacter::trivial(cfg)};
  TruncatedEvenFunction phi;
  phi.i_min = 0;
  phi.i_max = 1;
  phi.unit_twist = UnitCharacter::trivial(cfg);
  phi.vals = {CycNumber::from_rational(ctx, Rational(1)), CycNumber(ctx)};
  phi.tail = CycNumber(ctx);
  // n(1/p) multiplies the shell at i = 0 by a u-dependent phase for p = 3?
  // psi'(b u^2) with b = 1/3: ord(b) + 2*0 = -1 < c(psi') = 0: u^2 = 1 mod 3
  // keeps it constant for p = 3, so pick depth 2: b = 1/9.
  CHECK_THROWS_AS(weil_action_B(cfg, ctx, rep, WeilGenerator::UpperUnipotent,
                                Rational(1, 9), phi),
                  DomainError);
  // non-unit torus is outside the truncated model
  CHECK_THROWS_AS(weil_action_B(cfg, ctx, rep, WeilGenerator::TorusUnit,
                                Rational(3), phi),
                  DomainError);
}
