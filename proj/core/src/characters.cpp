#include "mp2/characters.hpp"

#include "mp2/intmath.hpp"

namespace mp2 {

AdditiveCharacter::AdditiveCharacter(const FieldConfig& cfg, ScaledPAdic shift)
    : p_(cfg.p()), capacity_(cfg.p_capacity()), shift_(std::move(shift)) {
  if (shift_.is_zero()) throw DomainError("additive character shift must be nonzero");
  conductor_ = -shift_.val();
}

AdditiveCharacter AdditiveCharacter::base(const FieldConfig& cfg) {
  return AdditiveCharacter(cfg, ScaledPAdic::one(cfg.p()));
}

AdditiveCharacter AdditiveCharacter::psi_eps(const FieldConfig& cfg, int eps) {
  if (eps != 0 && eps != 1) throw DomainError("eps must be 0 or 1");
  // conductor -eps, i.e. shift of valuation eps
  return AdditiveCharacter(
      cfg, ScaledPAdic::make(cfg.p(), eps, Rational(1)));
}

AdditiveCharacter AdditiveCharacter::twist(const ScaledPAdic& b) const {
  if (b.is_zero()) throw DomainError("additive character twist by zero");
  AdditiveCharacter out = *this;
  out.shift_ = shift_ * b;
  out.conductor_ = -out.shift_.val();
  return out;
}

AdditiveCharacter AdditiveCharacter::twist(const Rational& b) const {
  return twist(ScaledPAdic::from_rational(p_, b));
}

CycNumber AdditiveCharacter::eval(const CycContextPtr& ctx, const Rational& x) const {
  if (x.is_zero()) return CycNumber::from_rational(ctx, Rational(1));
  Rational y = shift_.to_rational() * x;
  if (y.is_zero() || y.valuation(p_) >= 0)
    return CycNumber::from_rational(ctx, Rational(1));
  int k = -y.valuation(p_);
  if (k > capacity_)
    throw DomainError("additive character argument beyond the p-power capacity");
  i64 pk = pow_i64(p_, k);
  // y = u / p^k with u a p-unit rational; the value is zeta_{p^k}^{u mod p^k}.
  Rational u = y * Rational(pow_i64(p_, k));
  i64 n = (i64)(((u.num() % pk) + pk) % pk);
  i64 d = (i64)(((u.den() % pk) + pk) % pk);
  i64 t = (i64)((i128)n * mod_inv(d, pk) % pk);
  return CycNumber::root_of_unity(ctx, pk, t);
}

UnitCharacter::UnitCharacter(const FieldConfig& cfg, int level, i64 exponent)
    : p_(cfg.p()), level_(level) {
  if (level < 0 || level > cfg.precision())
    throw DomainError("unit character level out of range");
  if (level == 0) {
    exponent_ = 0;
    return;
  }
  i64 phi = phi_prime_power(p_, level);
  exponent_ = ((exponent % phi) + phi) % phi;
  // Reduce so that the stored level is the conductor.
  while (level_ >= 1) {
    if (level_ == 1) {
      if (exponent_ == 0) level_ = 0;
      break;
    }
    // trivial on 1 + p^(level-1) iff p | exponent
    if (exponent_ % p_ != 0) break;
    exponent_ /= p_;
    --level_;
  }
  if (level_ == 0) exponent_ = 0;
}

UnitCharacter UnitCharacter::trivial(const FieldConfig& cfg) {
  return UnitCharacter(cfg, 0, 0);
}

UnitCharacter UnitCharacter::quadratic(const FieldConfig& cfg) {
  return UnitCharacter(cfg, 1, (cfg.p() - 1) / 2);
}

CycNumber UnitCharacter::eval(const FieldConfig& cfg, const CycContextPtr& ctx,
                              i64 u) const {
  if (level_ == 0) return CycNumber::from_rational(ctx, Rational(1));
  i64 pn = pow_i64(p_, level_);
  i64 uu = ((u % pn) + pn) % pn;
  const auto& tab = cfg.dlog_table(level_);
  int d = tab[uu];
  if (d < 0) throw DomainError("unit character evaluated at a non-unit");
  i64 phi = phi_prime_power(p_, level_);
  return CycNumber::root_of_unity(ctx, phi, (i64)((i128)exponent_ * d % phi));
}

CycNumber UnitCharacter::eval(const FieldConfig& cfg, const CycContextPtr& ctx,
                              const ResidueInt& u) const {
  if (u.level() < level_)
    throw DomainError("residue precision below the character conductor");
  return eval(cfg, ctx, u.value());
}

int UnitCharacter::sign_at_minus_one(const FieldConfig& cfg) const {
  (void)cfg;
  if (level_ == 0) return 1;
  // -1 = g^(phi/2), so eta(-1) = (-1)^exponent.
  return exponent_ % 2 == 0 ? 1 : -1;
}

i64 UnitCharacter::order(const FieldConfig& cfg) const {
  (void)cfg;
  if (level_ == 0) return 1;
  i64 phi = phi_prime_power(p_, level_);
  return phi / gcd_i64(exponent_, phi);
}

UnitCharacter UnitCharacter::product(const FieldConfig& cfg, const UnitCharacter& o) const {
  if (p_ != o.p_) throw DomainError("unit characters over different primes");
  int L = level_ > o.level_ ? level_ : o.level_;
  if (L == 0) return trivial(cfg);
  i64 phiL = phi_prime_power(p_, L);
  auto lift = [&](const UnitCharacter& c) -> i64 {
    if (c.level_ == 0) return 0;
    return c.exponent_ * (phiL / phi_prime_power(p_, c.level_));
  };
  return UnitCharacter(cfg, L, (lift(*this) + lift(o)) % phiL);
}

UnitCharacter UnitCharacter::inverse(const FieldConfig& cfg) const {
  if (level_ == 0) return *this;
  i64 phi = phi_prime_power(p_, level_);
  return UnitCharacter(cfg, level_, (phi - exponent_) % phi);
}

std::string UnitCharacter::to_string() const {
  return "eta(level=" + std::to_string(level_) + ",exp=" + std::to_string(exponent_) + ")";
}

RootOfUnity RootOfUnity::make(i64 order, i64 exp) {
  if (order <= 0) throw DomainError("root order must be positive");
  exp = ((exp % order) + order) % order;
  if (exp == 0) return RootOfUnity{1, 0};
  i64 g = gcd_i64(exp, order);
  return RootOfUnity{order / g, exp / g};
}

RootOfUnity RootOfUnity::times(const RootOfUnity& o) const {
  i64 l = lcm_i64(order, o.order);
  return make(l, exp * (l / order) + o.exp * (l / o.order));
}

RootOfUnity RootOfUnity::inverse() const { return make(order, order - exp); }

CycNumber RootOfUnity::to_cyc(const CycContextPtr& ctx) const {
  return CycNumber::root_of_unity(ctx, order, exp);
}

std::string RootOfUnity::to_string() const {
  if (is_one()) return "1";
  if (is_minus_one()) return "-1";
  return "zeta_" + std::to_string(order) + "^" + std::to_string(exp);
}

MultCharacter::MultCharacter(UnitCharacter unit_part, RootOfUnity varpi_root,
                             Rational varpi_qexp)
    : unit_(std::move(unit_part)), root_(varpi_root), qexp_(std::move(varpi_qexp)) {}

MultCharacter MultCharacter::unramified(const FieldConfig& cfg, RootOfUnity varpi_root,
                                        Rational varpi_qexp) {
  return MultCharacter(UnitCharacter::trivial(cfg), varpi_root, std::move(varpi_qexp));
}

MultCharacter MultCharacter::abs_power(const FieldConfig& cfg, const Rational& s) {
  return unramified(cfg, RootOfUnity{1, 0}, s);
}

MultCharacter MultCharacter::quadratic_of_class(const FieldConfig& cfg, SquareClass a) {
  QuadraticCharacter chi{a};
  int at_pi = chi.eval(cfg, square_class_rep(cfg, SquareClass::Pi));
  return MultCharacter(chi.unit_restriction(cfg),
                       at_pi == 1 ? RootOfUnity{1, 0} : RootOfUnity{2, 1}, Rational(0));
}

bool MultCharacter::exceptional(const FieldConfig& cfg) const {
  if (unit_.product(cfg, unit_).conductor() != 0) return false;
  if (!root_.square_is_one()) return false;
  Rational two_q = qexp_ + qexp_;
  return two_q == Rational(1) || two_q == Rational(-1);
}

MultCharacter MultCharacter::product(const FieldConfig& cfg, const MultCharacter& o) const {
  return MultCharacter(unit_.product(cfg, o.unit_), root_.times(o.root_), qexp_ + o.qexp_);
}

MultCharacter MultCharacter::inverse(const FieldConfig& cfg) const {
  return MultCharacter(unit_.inverse(cfg), root_.inverse(), -qexp_);
}

std::string MultCharacter::to_string() const {
  return "mu(" + unit_.to_string() + ",pi->" + root_.to_string() +
         (qexp_.is_zero() ? "" : "*q^-(" + qexp_.to_string() + ")") + ")";
}

int QuadraticCharacter::eval(const FieldConfig& cfg, const ScaledPAdic& x) const {
  return hilbert(cfg, x, square_class_rep(cfg, cls));
}

int QuadraticCharacter::eval_class(const FieldConfig& cfg, SquareClass x) const {
  return hilbert(cfg, x, cls);
}

int QuadraticCharacter::sign_at_minus_one(const FieldConfig& cfg) const {
  return eval(cfg, ScaledPAdic::from_rational(cfg.p(), Rational(-1)));
}

UnitCharacter QuadraticCharacter::unit_restriction(const FieldConfig& cfg) const {
  return square_class_ramified(cls) ? UnitCharacter::quadratic(cfg)
                                    : UnitCharacter::trivial(cfg);
}

QuadraticCharacter chi_from_squareclass(SquareClass a) { return QuadraticCharacter{a}; }

SquareClass squareclass_from_quadchar(const QuadraticCharacter& chi) { return chi.cls; }

}  // namespace mp2
