#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mp2/characters.hpp"
#include "mp2/intmath.hpp"

using namespace mp2;

namespace {
CycContextPtr ctx_for(const FieldConfig& cfg) {
  return std::make_shared<CycContext>(cfg.cyclotomic_order());
}
}  // namespace

TEST_CASE("additive character conductor and base values") {
  FieldConfig cfg = FieldConfig::make(3);
  auto ctx = ctx_for(cfg);
  AdditiveCharacter psi0 = AdditiveCharacter::base(cfg);
  CHECK(psi0.conductor() == 0);
  CHECK(AdditiveCharacter::psi_eps(cfg, 1).conductor() == -1);

  // trivial on O
  for (i64 x : {0, 1, 5, 9, -4})
    CHECK(psi0.eval(ctx, Rational(x)) == CycNumber::from_rational(ctx, Rational(1)));
  // psi0(1/3) = zeta_3
  CHECK(psi0.eval(ctx, Rational(1, 3)) == CycNumber::root_of_unity(ctx, 3, 1));
  // pi-twist kills 1/3
  CHECK(psi0.twist(Rational(3)).eval(ctx, Rational(1, 3)) ==
        CycNumber::from_rational(ctx, Rational(1)));

  // conductor of psi0_a = -ord(a) across valuations
  for (int v = -3; v <= 3; ++v) {
    AdditiveCharacter tw = psi0.twist(ScaledPAdic::make(3, v, Rational(2)));
    CHECK(tw.conductor() == -v);
  }
}

TEST_CASE("additive character is a homomorphism on exact rationals") {
  FieldConfig cfg = FieldConfig::make(5);
  auto ctx = ctx_for(cfg);
  AdditiveCharacter psi = AdditiveCharacter::psi_eps(cfg, 1);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 40; ++i) {
    Rational x((i64)(rng() % 50) - 25, pow_i64(5, (int)(rng() % 3)));
    Rational y((i64)(rng() % 50) - 25, pow_i64(5, (int)(rng() % 3)));
    CHECK(psi.eval(ctx, x + y) == psi.eval(ctx, x) * psi.eval(ctx, y));
  }
}

TEST_CASE("unit character reduction, values and orders") {
  FieldConfig cfg = FieldConfig::make(3);
  auto ctx = ctx_for(cfg);
  UnitCharacter triv = UnitCharacter::trivial(cfg);
  CHECK(triv.conductor() == 0);
  CHECK(triv.eval(cfg, ctx, 2) == CycNumber::from_rational(ctx, Rational(1)));

  UnitCharacter quad = UnitCharacter::quadratic(cfg);
  CHECK(quad.conductor() == 1);
  CHECK(quad.eval(cfg, ctx, 2) == CycNumber::from_rational(ctx, Rational(-1)));
  CHECK(quad.eval(cfg, ctx, 4) == CycNumber::from_rational(ctx, Rational(1)));
  CHECK(quad.sign_at_minus_one(cfg) == -1);  // -1 is a non-square mod 3

  // storing an unreduced character reduces the level to the conductor
  UnitCharacter red(cfg, 3, 9);  // exponent divisible by p twice
  CHECK(red.conductor() == 1);
  CHECK(red.order(cfg) == 2);

  // homomorphism eta(u) eta(u^{-1}) = 1 on units
  UnitCharacter eta(cfg, 2, 1);
  CHECK(eta.conductor() == 2);
  for (i64 u : {1, 2, 4, 5, 7, 8}) {
    i64 uinv = mod_inv(u, 9);
    CHECK(eta.eval(cfg, ctx, u) * eta.eval(cfg, ctx, uinv) ==
          CycNumber::from_rational(ctx, Rational(1)));
  }
  CHECK_THROWS_AS(eta.eval(cfg, ctx, 3), DomainError);
}

TEST_CASE("unit character conductor is the minimal triviality level") {
  FieldConfig cfg = FieldConfig::make(5);
  auto ctx = ctx_for(cfg);
  for (int level = 1; level <= 3; ++level) {
    i64 phi = phi_prime_power(5, level);
    i64 plevel = pow_i64(5, level);
    for (i64 e = 0; e < phi; ++e) {
      UnitCharacter eta(cfg, level, e);
      int n = eta.conductor();
      if (n == 0) continue;
      i64 pn = pow_i64(5, n);
      // trivial on 1 + p^n
      for (i64 k = 1; 1 + k * pn < plevel; ++k)
        CHECK(eta.eval(cfg, ctx, 1 + k * pn) ==
              CycNumber::from_rational(ctx, Rational(1)));
      // nontrivial on 1 + p^{n-1} (some element)
      bool hit = false;
      i64 pn1 = n >= 1 ? pow_i64(5, n - 1) : 1;
      for (i64 k = 1; 1 + k * pn1 < plevel + pn1; ++k) {
        i64 u = (1 + k * pn1) % plevel;
        if (u % 5 == 0 || u == 1) continue;
        if (!(eta.eval(cfg, ctx, u) == CycNumber::from_rational(ctx, Rational(1)))) {
          hit = true;
          break;
        }
      }
      CHECK(hit);
    }
  }
}

TEST_CASE("conductor of products follows the ultrametric rule") {
  FieldConfig cfg = FieldConfig::make(5);
  UnitCharacter a(cfg, 2, 1);
  UnitCharacter b(cfg, 1, 1);
  CHECK(a.conductor() == 2);
  CHECK(b.conductor() == 1);
  CHECK(a.product(cfg, b).conductor() == 2);  // max when conductors differ
  CHECK(a.product(cfg, a.inverse(cfg)).conductor() == 0);
  UnitCharacter quad = UnitCharacter::quadratic(cfg);
  CHECK(quad.product(cfg, quad).conductor() == 0);  // order 2
  CHECK(quad.inverse(cfg) == quad);
}

TEST_CASE("quadratic characters of square classes") {
  for (i64 p : {3, 5, 7}) {
    FieldConfig cfg = FieldConfig::make(p);
    for (SquareClass a :
         {SquareClass::One, SquareClass::Xi, SquareClass::Pi, SquareClass::XiPi}) {
      CHECK(squareclass_from_quadchar(chi_from_squareclass(a)) == a);
    }
    QuadraticCharacter one{SquareClass::One};
    CHECK(one.conductor() == 0);
    for (SquareClass x :
         {SquareClass::One, SquareClass::Xi, SquareClass::Pi, SquareClass::XiPi})
      CHECK(one.eval_class(cfg, x) == 1);
    // chi_xi is the nontrivial unramified character: trivial on units, -1 at pi
    QuadraticCharacter xi{SquareClass::Xi};
    CHECK(xi.conductor() == 0);
    CHECK(xi.eval(cfg, ScaledPAdic::from_rational(p, Rational(1 + p))) == 1);
    CHECK(xi.eval(cfg, square_class_rep(cfg, SquareClass::Pi)) == -1);
    // chi_pi restricted to units is the Legendre character
    QuadraticCharacter pi{SquareClass::Pi};
    CHECK(pi.conductor() == 1);
    for (i64 u = 1; u < p; ++u) {
      CHECK(pi.eval(cfg, ScaledPAdic::from_rational(p, Rational(u))) ==
            legendre_symbol(u, p));
    }
    // multiplicativity chi_a(x) chi_a(y) = chi_a(xy) on all classes
    for (SquareClass a :
         {SquareClass::One, SquareClass::Xi, SquareClass::Pi, SquareClass::XiPi}) {
      QuadraticCharacter chi{a};
      for (SquareClass x :
           {SquareClass::One, SquareClass::Xi, SquareClass::Pi, SquareClass::XiPi})
        for (SquareClass y :
             {SquareClass::One, SquareClass::Xi, SquareClass::Pi, SquareClass::XiPi})
          CHECK(chi.eval_class(cfg, square_class_mul(x, y)) ==
                chi.eval_class(cfg, x) * chi.eval_class(cfg, y));
    }
  }
}

TEST_CASE("multiplicative characters: exceptional detection") {
  FieldConfig cfg = FieldConfig::make(3);
  MultCharacter norm_half = MultCharacter::abs_power(cfg, Rational(1, 2));
  CHECK(norm_half.exceptional(cfg));
  MultCharacter norm_mhalf = MultCharacter::abs_power(cfg, Rational(-1, 2));
  CHECK(norm_mhalf.exceptional(cfg));
  MultCharacter chi_xi_tw =
      MultCharacter::quadratic_of_class(cfg, SquareClass::Xi)
          .product(cfg, MultCharacter::abs_power(cfg, Rational(1, 2)));
  CHECK(chi_xi_tw.exceptional(cfg));
  CHECK(!MultCharacter::abs_power(cfg, Rational(1)).exceptional(cfg));
  CHECK(!MultCharacter::unramified(cfg, RootOfUnity{1, 0}, Rational(0))
             .exceptional(cfg));
  MultCharacter ram(UnitCharacter(cfg, 2, 1), RootOfUnity{1, 0}, Rational(1, 2));
  CHECK(!ram.exceptional(cfg));
  CHECK(ram.conductor() == 2);
  CHECK(MultCharacter::quadratic_of_class(cfg, SquareClass::Pi).conductor() == 1);
  CHECK(MultCharacter::quadratic_of_class(cfg, SquareClass::Xi).conductor() == 0);
}
