#include "mp2/padic.hpp"

#include <vector>

#include "mp2/intmath.hpp"

namespace mp2 {

const char* to_string(SquareClass c) {
  switch (c) {
    case SquareClass::One: return "1";
    case SquareClass::Xi: return "xi";
    case SquareClass::Pi: return "pi";
    default: return "xipi";
  }
}

SquareClass square_class_from_string(const std::string& s) {
  if (s == "1" || s == "one") return SquareClass::One;
  if (s == "xi") return SquareClass::Xi;
  if (s == "pi" || s == "varpi") return SquareClass::Pi;
  if (s == "xipi" || s == "xivarpi") return SquareClass::XiPi;
  throw DomainError("unknown square class '" + s + "'");
}

namespace {
// (ord mod 2, legendre) coordinates of each class.
int class_ord(SquareClass c) {
  return (c == SquareClass::Pi || c == SquareClass::XiPi) ? 1 : 0;
}
int class_leg(SquareClass c) {
  return (c == SquareClass::Xi || c == SquareClass::XiPi) ? -1 : 1;
}
SquareClass class_from(int ord, int leg) {
  if (ord == 0) return leg == 1 ? SquareClass::One : SquareClass::Xi;
  return leg == 1 ? SquareClass::Pi : SquareClass::XiPi;
}
}  // namespace

SquareClass square_class_mul(SquareClass a, SquareClass b) {
  return class_from((class_ord(a) + class_ord(b)) % 2,
                    class_leg(a) * class_leg(b));
}

bool square_class_ramified(SquareClass c) { return class_ord(c) == 1; }
int square_class_ord(SquareClass c) { return class_ord(c); }

ScaledPAdic ScaledPAdic::zero(i64 p) {
  ScaledPAdic x;
  x.p_ = p;
  return x;
}

ScaledPAdic ScaledPAdic::from_rational(i64 p, const Rational& x) {
  if (x.is_zero()) return zero(p);
  ScaledPAdic out;
  out.zero_ = false;
  out.p_ = p;
  out.val_ = x.split_p_part(p, out.unit_);
  return out;
}

ScaledPAdic ScaledPAdic::make(i64 p, int val, const Rational& unit) {
  if (unit.is_zero()) throw DomainError("unit part must be nonzero");
  if (unit.valuation(p) != 0) throw DomainError("unit part must be a p-unit");
  ScaledPAdic out;
  out.zero_ = false;
  out.p_ = p;
  out.val_ = val;
  out.unit_ = unit;
  return out;
}

int ScaledPAdic::val() const {
  if (zero_) throw DomainError("valuation of zero");
  return val_;
}

const Rational& ScaledPAdic::unit() const {
  if (zero_) throw DomainError("unit part of zero");
  return unit_;
}

Rational ScaledPAdic::to_rational() const {
  if (zero_) return Rational(0);
  return unit_ * Rational(p_).pow(val_);
}

ResidueInt ScaledPAdic::unit_residue(int K) const {
  if (zero_) throw DomainError("unit residue of zero");
  i64 mod = pow_i64(p_, K);
  i64 n = (i64)(((unit_.num() % mod) + mod) % mod);
  i64 d = (i64)(((unit_.den() % mod) + mod) % mod);
  return ResidueInt(p_, K, (i64)((i128)n * mod_inv(d, mod) % mod));
}

ScaledPAdic ScaledPAdic::operator*(const ScaledPAdic& o) const {
  if (zero_ || o.zero_) return zero(p_);
  return make(p_, val_ + o.val_, unit_ * o.unit_);
}

ScaledPAdic ScaledPAdic::operator/(const ScaledPAdic& o) const {
  if (o.zero_) throw DomainError("division by zero");
  if (zero_) return zero(p_);
  return make(p_, val_ - o.val_, unit_ / o.unit_);
}

ScaledPAdic ScaledPAdic::operator+(const ScaledPAdic& o) const {
  if (zero_) return o;
  if (o.zero_) return *this;
  return from_rational(p_, to_rational() + o.to_rational());
}

ScaledPAdic ScaledPAdic::operator-() const {
  if (zero_) return *this;
  return make(p_, val_, -unit_);
}

bool ScaledPAdic::operator==(const ScaledPAdic& o) const {
  if (zero_ != o.zero_) return false;
  if (zero_) return true;
  return val_ == o.val_ && unit_ == o.unit_;
}

std::string ScaledPAdic::to_string() const {
  if (zero_) return "0";
  return "pi^" + std::to_string(val_) + "*" + unit_.to_string();
}

SquareClass square_class(const FieldConfig& cfg, const ScaledPAdic& x) {
  (void)cfg;
  if (x.is_zero()) throw DomainError("square class of zero");
  int leg = legendre(x.unit_residue(1));
  return class_from(((x.val() % 2) + 2) % 2, leg);
}

ScaledPAdic square_class_rep(const FieldConfig& cfg, SquareClass c) {
  i64 u = class_leg(c) == -1 ? cfg.xi() : 1;
  return ScaledPAdic::make(cfg.p(), class_ord(c), Rational(u));
}

int hilbert(const FieldConfig& cfg, const ScaledPAdic& a, const ScaledPAdic& b) {
  if (a.is_zero() || b.is_zero()) throw DomainError("Hilbert symbol at zero");
  int alpha = a.val(), beta = b.val();
  int lu = legendre(a.unit_residue(1));
  int lv = legendre(b.unit_residue(1));
  int sign = 1;
  if ((alpha & 1) && (beta & 1)) sign *= cfg.legendre_minus_one();
  if (beta & 1) sign *= lu;
  if (alpha & 1) sign *= lv;
  return sign;
}

int hilbert(const FieldConfig& cfg, SquareClass a, SquareClass b) {
  return hilbert(cfg, square_class_rep(cfg, a), square_class_rep(cfg, b));
}

int hilbert_oracle(const FieldConfig& cfg, const ScaledPAdic& a,
                   const ScaledPAdic& b, int K) {
  if (K < 3) throw DomainError("hilbert_oracle needs K >= 3");
  if (a.is_zero() || b.is_zero()) throw DomainError("Hilbert symbol at zero");
  i64 p = cfg.p();
  i64 mod = pow_i64(p, K);
  // Normalize to representatives with valuation 0 or 1 (symbol depends only
  // on square classes).
  auto rep = [&](const ScaledPAdic& x) {
    return (i64)(square_class_rep(cfg, square_class(cfg, x)).to_rational().num() % mod);
  };
  i64 av = rep(a);
  i64 bv = rep(b);

  std::vector<char> is_square(mod, 0);
  for (i64 z = 0; z < mod; ++z) is_square[(i64)((i128)z * z % mod)] = 1;

  for (i64 x = 0; x < mod; ++x) {
    i64 ax2 = (i64)((i128)av * x % mod * x % mod);
    for (i64 y = 0; y < mod; ++y) {
      if (x % p == 0 && y % p == 0) continue;  // z^2 = 0 mod p then forces z = 0 mod p
      i64 rhs = (ax2 + (i64)((i128)bv * y % mod * y % mod)) % mod;
      if (is_square[rhs]) return 1;
    }
  }
  return -1;
}

}  // namespace mp2
