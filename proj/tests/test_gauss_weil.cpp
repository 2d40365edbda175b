#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mp2/gauss.hpp"
#include "mp2/intmath.hpp"

using namespace mp2;

namespace {
CycContextPtr ctx_for(const FieldConfig& cfg) {
  return std::make_shared<CycContext>(cfg.cyclotomic_order());
}
AdditiveCharacter psi_cond(const FieldConfig& cfg, int c, i64 u = 1) {
  return AdditiveCharacter::base(cfg).twist(
      ScaledPAdic::make(cfg.p(), -c, Rational(u)));
}
}  // namespace

TEST_CASE("g-sum closed values for unramified chi") {
  FieldConfig cfg = FieldConfig::make(3);
  auto ctx = ctx_for(cfg);
  UnitCharacter triv = UnitCharacter::trivial(cfg);
  // c(psi) <= 0: 1 - 1/q
  CHECK(gauss_g_oracle(cfg, ctx, triv, psi_cond(cfg, 0)) ==
        CycNumber::from_rational(ctx, Rational(2, 3)));
  CHECK(gauss_g_oracle(cfg, ctx, triv, psi_cond(cfg, -1)) ==
        CycNumber::from_rational(ctx, Rational(2, 3)));
  // c(psi) = 1: -1/q
  CHECK(gauss_g_oracle(cfg, ctx, triv, psi_cond(cfg, 1)) ==
        CycNumber::from_rational(ctx, Rational(-1, 3)));
  // c(psi) >= 2: 0
  CHECK(gauss_g_oracle(cfg, ctx, triv, psi_cond(cfg, 2)).is_zero());

  GaussValue v0 = gauss_g_closed(0, 0);
  CHECK(v0.kind == GaussValue::Kind::ExactValue);
  CHECK(v0.value.bind(3) == Rational(2, 3));
  CHECK(gauss_g_closed(0, 2).kind == GaussValue::Kind::ZeroExact);
  GaussValue v22 = gauss_g_closed(2, 2);
  CHECK(v22.kind == GaussValue::Kind::MagSqOnly);
  CHECK(v22.mag_sq.bind(3) == Rational(1, 9));
  CHECK(gauss_g_closed(1, 0).kind == GaussValue::Kind::ZeroExact);
}

TEST_CASE("g-sum with the Legendre character has mag_sq q^{-1}") {
  FieldConfig cfg = FieldConfig::make(3);
  auto ctx = ctx_for(cfg);
  UnitCharacter quad = UnitCharacter::quadratic(cfg);
  CycNumber g = gauss_g_oracle(cfg, ctx, quad, psi_cond(cfg, 1));
  CHECK(!g.is_zero());
  CHECK(g.mag_sq() == Rational(1, 3));
  // direct 2-term sum: (zeta_3 - zeta_3^2)/3
  CycNumber expect =
      (CycNumber::root_of_unity(ctx, 3, 1) - CycNumber::root_of_unity(ctx, 3, 2)) *
      Rational(1, 3);
  CHECK(g == expect);
}

TEST_CASE("g-sum vanishing matches the closed criterion on a grid") {
  for (i64 p : {3, 5}) {
    FieldConfig cfg = FieldConfig::make(p);
    auto ctx = ctx_for(cfg);
    for (int n = 0; n <= 2; ++n) {
      i64 phi = n == 0 ? 1 : phi_prime_power(p, n);
      for (i64 e = 0; e < phi; ++e) {
        UnitCharacter chi(cfg, n, e);
        if (chi.conductor() != n) continue;
        for (int cpsi = -1; cpsi <= 3; ++cpsi) {
          CycNumber g = gauss_g_oracle(cfg, ctx, chi, psi_cond(cfg, cpsi));
          GaussValue closed = gauss_g_closed(n, cpsi);
          if (closed.kind == GaussValue::Kind::ZeroExact) {
            CHECK(g.is_zero());
          } else {
            CHECK(!g.is_zero());
            CHECK(g.mag_sq() == closed.mag_sq.bind(p));
          }
        }
      }
    }
  }
}

TEST_CASE("g-sum is independent of the truncation level") {
  FieldConfig cfg = FieldConfig::make(5);
  auto ctx = ctx_for(cfg);
  UnitCharacter chi(cfg, 2, 3);
  AdditiveCharacter psi = psi_cond(cfg, 2);
  CycNumber a = gauss_g_oracle(cfg, ctx, chi, psi);
  CycNumber b = gauss_g_oracle(cfg, ctx, chi, psi, 3);
  CHECK(a == b);
}

TEST_CASE("g-sum twist equivariance g(chi, psi_a) = chi(a)^{-1} g(chi, psi)") {
  FieldConfig cfg = FieldConfig::make(5);
  auto ctx = ctx_for(cfg);
  for (i64 e : {1, 2, 5}) {
    UnitCharacter chi(cfg, 2, e);
    AdditiveCharacter psi = psi_cond(cfg, chi.conductor());
    CycNumber base = gauss_g_oracle(cfg, ctx, chi, psi);
    for (i64 a : {2, 3, 7}) {
      CycNumber twisted = gauss_g_oracle(
          cfg, ctx, chi, psi.twist(ScaledPAdic::make(5, 0, Rational(a))));
      CycNumber chi_a_inv = chi.inverse(cfg).eval(cfg, ctx, a);
      CHECK(twisted == chi_a_inv * base);
    }
  }
}

TEST_CASE("h-sum special values") {
  FieldConfig cfg = FieldConfig::make(3);
  auto ctx = ctx_for(cfg);
  UnitCharacter triv = UnitCharacter::trivial(cfg);
  UnitCharacter quad = UnitCharacter::quadratic(cfg);

  // odd character: h = 0 identically (quad(-1) = -1 for p = 3)
  REQUIRE(quad.sign_at_minus_one(cfg) == -1);
  for (int c = -1; c <= 2; ++c)
    CHECK(gauss_h_oracle(cfg, ctx, quad, psi_cond(cfg, c)).is_zero());

  // c(psi) <= 0, c(chi) = 0: 1 - 1/q
  CHECK(gauss_h_oracle(cfg, ctx, triv, psi_cond(cfg, 0)) ==
        CycNumber::from_rational(ctx, Rational(2, 3)));

  // pair identity at c(chi) = 0, c(psi) = 1: 2/q + 2/q^2
  CycNumber h1 = gauss_h_oracle(cfg, ctx, triv, psi_cond(cfg, 1));
  CycNumber h2 = gauss_h_oracle(cfg, ctx, triv, psi_cond(cfg, 1, cfg.xi()));
  CHECK(h1.mag_sq() + h2.mag_sq() == Rational(2, 3) + Rational(2, 9));
  CHECK(gauss_h_pair_magsq(cfg, triv, psi_cond(cfg, 1)).bind(3) ==
        Rational(2, 3) + Rational(2, 9));

  // closed three-case form
  CHECK(gauss_h_pair_magsq(cfg, triv, psi_cond(cfg, 2)).is_zero());
  CHECK_THROWS_AS(gauss_h_pair_magsq(cfg, quad, psi_cond(cfg, 1)), DomainError);
}

TEST_CASE("h-pair identity across a grid incl. the exactly-one remark") {
  for (i64 p : {3, 5}) {
    FieldConfig cfg = FieldConfig::make(p);
    auto ctx = ctx_for(cfg);
    for (int n = 0; n <= 2; ++n) {
      i64 phi = n == 0 ? 1 : phi_prime_power(p, n);
      for (i64 e = 0; e < phi; ++e) {
        UnitCharacter chi(cfg, n, e);
        if (chi.conductor() != n) continue;
        if (chi.sign_at_minus_one(cfg) != 1) continue;
        for (int cpsi = 1; cpsi <= 2; ++cpsi) {
          AdditiveCharacter psi = psi_cond(cfg, cpsi);
          CycNumber h1 = gauss_h_oracle(cfg, ctx, chi, psi);
          CycNumber h2 = gauss_h_oracle(
              cfg, ctx, chi, psi.twist(ScaledPAdic::make(p, 0, Rational(cfg.xi()))));
          Rational pair = gauss_h_pair_magsq(cfg, chi, psi).bind(p);
          // the pair sum is rational as a field element even when the
          // individual magnitudes are not
          CHECK(h1 * h1.conj() + h2 * h2.conj() ==
                CycNumber::from_rational(ctx, pair));
          if (n == cpsi && n >= 2) {
            // empirical form of the remark: exactly one twist carries all
            // the mass 4 q^{-c}
            bool one_zero = h1.is_zero() != h2.is_zero();
            CHECK(one_zero);
          }
        }
      }
    }
  }
}

TEST_CASE("weil index: unit values and basic roots") {
  FieldConfig cfg = FieldConfig::make(3);
  auto ctx = ctx_for(cfg);
  AdditiveCharacter psi0 = AdditiveCharacter::psi_eps(cfg, 0);
  // gamma(a, psi0) = 1 for units
  for (i64 a : {1, 2, 4, -1, 5}) {
    CHECK(weil_index_unit_sign(cfg, ctx,
                               ScaledPAdic::from_rational(3, Rational(a)),
                               psi0) == 1);
  }
  // gamma(a, psi1) = (a, pi) = legendre(a) for units
  AdditiveCharacter psi1 = AdditiveCharacter::psi_eps(cfg, 1);
  for (i64 a : {2, 4, 5, 7}) {
    CHECK(weil_index_unit_sign(cfg, ctx,
                               ScaledPAdic::from_rational(3, Rational(a)),
                               psi1) == legendre_symbol(a, 3));
  }
  // gamma(pi, psi0)^2 = (pi, pi) = legendre(-1)
  WeilIndex wpi = weil_index(cfg, ctx, square_class_rep(cfg, SquareClass::Pi), psi0);
  CycNumber sq = wpi.value * wpi.value;
  CHECK(sq == CycNumber::from_rational(ctx, Rational(cfg.legendre_minus_one())));
  // for p = 3 that is a primitive fourth root
  CHECK(wpi.zeta8_exp % 2 == 0);
  CHECK(wpi.zeta8_exp % 4 != 0);
}

TEST_CASE("weil index identities over all square classes") {
  for (i64 p : {3, 5}) {
    FieldConfig cfg = FieldConfig::make(p);
    auto ctx = ctx_for(cfg);
    for (int eps = 0; eps <= 1; ++eps) {
      auto results = weil_index_identities_check(
          cfg, ctx, AdditiveCharacter::psi_eps(cfg, eps));
      for (const auto& r : results) {
        INFO("p=", p, " eps=", eps, " identity=", r.name, " detail=", r.detail);
        CHECK(r.pass);
      }
    }
  }
}

TEST_CASE("weil index depends only on the square class") {
  FieldConfig cfg = FieldConfig::make(5);
  auto ctx = ctx_for(cfg);
  AdditiveCharacter psi = AdditiveCharacter::psi_eps(cfg, 0);
  for (SquareClass a :
       {SquareClass::One, SquareClass::Xi, SquareClass::Pi, SquareClass::XiPi}) {
    WeilIndex w1 = weil_index(cfg, ctx, square_class_rep(cfg, a), psi);
    ScaledPAdic alt = square_class_rep(cfg, a) *
                      ScaledPAdic::from_rational(5, Rational(9));  // times 3^2
    WeilIndex w2 = weil_index(cfg, ctx, alt, psi);
    CHECK(w1.value == w2.value);
    CHECK(w1.value.pow(8) == CycNumber::from_rational(ctx, Rational(1)));
  }
}

TEST_CASE("quadratic gauss sum element squares to (-1|p) p") {
  for (i64 p : {3, 5, 7}) {
    FieldConfig cfg = FieldConfig::make(p);
    auto ctx = ctx_for(cfg);
    CycNumber tau = quadratic_gauss_sum(cfg, ctx);
    CHECK(tau * tau ==
          CycNumber::from_rational(ctx, Rational(cfg.legendre_minus_one() * p)));
    CycNumber s = sqrt_p_element(cfg, ctx);
    CHECK(s * s == CycNumber::from_rational(ctx, Rational(p)));
  }
}
