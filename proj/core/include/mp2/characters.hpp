#pragma once

#include <optional>
#include <string>

#include "mp2/cyclotomic.hpp"
#include "mp2/field_config.hpp"
#include "mp2/padic.hpp"

namespace mp2 {

/// Additive character psi of Q_p, stored as a shift of the fixed base
/// character psi0 of conductor 0: psi(x) = psi0(a*x). The base character is
/// psi0(x) = zeta_{p^k}^{p^k x mod p^k} on p^{-k}Z; any unit twist yields an
/// isomorphic theory, this choice makes every table deterministic.
class AdditiveCharacter {
 public:
  AdditiveCharacter(const FieldConfig& cfg, ScaledPAdic shift);
  static AdditiveCharacter base(const FieldConfig& cfg);  // psi^0
  /// psi^eps of conductor -eps: base for eps = 0, shift pi for eps = 1.
  static AdditiveCharacter psi_eps(const FieldConfig& cfg, int eps);

  const ScaledPAdic& shift() const { return shift_; }
  /// Minimal c with triviality on p^c: equals ord(shift) ... see below.
  int conductor() const { return conductor_; }

  AdditiveCharacter twist(const ScaledPAdic& b) const;  // psi_b
  AdditiveCharacter twist(const Rational& b) const;

  /// Exact evaluation at a rational argument.
  CycNumber eval(const CycContextPtr& ctx, const Rational& x) const;

  i64 p() const { return p_; }

 private:
  i64 p_;
  int capacity_;
  ScaledPAdic shift_;
  int conductor_;
};

/// Character eta of the unit group O^x, factoring through (Z/p^n)^x.
/// Stored reduced: the level equals the conductor (level 0 = trivial).
class UnitCharacter {
 public:
  /// Trivial character not yet bound to a prime; usable as a placeholder.
  UnitCharacter() : p_(0), level_(0), exponent_(0) {}
  /// Character at the given level with eta(g_n) = zeta_{phi(p^n)}^exponent
  /// for the fixed compatible primitive root g_n; the representation is
  /// reduced so that level() == conductor().
  UnitCharacter(const FieldConfig& cfg, int level, i64 exponent);
  static UnitCharacter trivial(const FieldConfig& cfg);
  /// The quadratic (Legendre) character, conductor 1.
  static UnitCharacter quadratic(const FieldConfig& cfg);

  i64 p() const { return p_; }
  int conductor() const { return level_; }
  i64 exponent() const { return exponent_; }
  bool is_trivial() const { return level_ == 0; }

  CycNumber eval(const FieldConfig& cfg, const CycContextPtr& ctx, i64 u) const;
  CycNumber eval(const FieldConfig& cfg, const CycContextPtr& ctx,
                 const ResidueInt& u) const;
  /// eta(-1) in {+1, -1}.
  int sign_at_minus_one(const FieldConfig& cfg) const;
  /// Exact order of the character.
  i64 order(const FieldConfig& cfg) const;

  UnitCharacter product(const FieldConfig& cfg, const UnitCharacter& o) const;
  UnitCharacter inverse(const FieldConfig& cfg) const;
  bool operator==(const UnitCharacter& o) const {
    return p_ == o.p_ && level_ == o.level_ && exponent_ == o.exponent_;
  }

  std::string to_string() const;

 private:
  i64 p_;
  int level_;
  i64 exponent_;  // mod phi(p^level)
};

/// A root of unity given by (order, exponent); exact and cheap to compare.
struct RootOfUnity {
  i64 order = 1;
  i64 exp = 0;  // reduced mod order, gcd-normalized on construction
  static RootOfUnity make(i64 order, i64 exp);
  bool is_one() const { return order == 1; }
  bool is_minus_one() const { return order == 2 && exp == 1; }
  bool square_is_one() const { return order <= 2; }
  RootOfUnity times(const RootOfUnity& o) const;
  RootOfUnity inverse() const;
  CycNumber to_cyc(const CycContextPtr& ctx) const;
  bool operator==(const RootOfUnity& o) const = default;
  std::string to_string() const;
};

/// Character mu of F^x = <pi> x O^x: a unit character together with the
/// symbolic value mu(pi) = root * q^{-q_exp}. Every predicate the dimension
/// and theta formulas need (conductor, mu^2 = |.|^{+-1}, mu = chi_xi|.|^{-1/2},
/// eta = mu^{+-1} on units) is decidable in this representation.
class MultCharacter {
 public:
  MultCharacter(UnitCharacter unit_part, RootOfUnity varpi_root, Rational varpi_qexp);
  static MultCharacter unramified(const FieldConfig& cfg, RootOfUnity varpi_root,
                                  Rational varpi_qexp);
  /// |.|^s for rational s: trivial on units, pi -> q^{-s}.
  static MultCharacter abs_power(const FieldConfig& cfg, const Rational& s);
  /// The quadratic character chi_a attached to a square class.
  static MultCharacter quadratic_of_class(const FieldConfig& cfg, SquareClass a);

  const UnitCharacter& unit_part() const { return unit_; }
  const RootOfUnity& varpi_root() const { return root_; }
  const Rational& varpi_qexp() const { return qexp_; }

  int conductor() const { return unit_.conductor(); }
  bool is_unramified() const { return unit_.is_trivial(); }
  int sign_at_minus_one(const FieldConfig& cfg) const {
    return unit_.sign_at_minus_one(cfg);
  }
  /// mu^2 = |.|^{+1} or |.|^{-1} (the reducible principal series points).
  bool exceptional(const FieldConfig& cfg) const;

  MultCharacter product(const FieldConfig& cfg, const MultCharacter& o) const;
  MultCharacter inverse(const FieldConfig& cfg) const;
  bool operator==(const MultCharacter& o) const {
    return unit_ == o.unit_ && root_ == o.root_ && qexp_ == o.qexp_;
  }

  std::string to_string() const;

 private:
  UnitCharacter unit_;
  RootOfUnity root_;
  Rational qexp_;
};

/// Quadratic or trivial character chi_a(x) = (x, a)_2, keyed by square class.
struct QuadraticCharacter {
  SquareClass cls = SquareClass::One;
  int eval(const FieldConfig& cfg, const ScaledPAdic& x) const;
  int eval_class(const FieldConfig& cfg, SquareClass x) const;
  int sign_at_minus_one(const FieldConfig& cfg) const;
  bool is_trivial() const { return cls == SquareClass::One; }
  /// Conductor of the restriction to O^x: 0 for {1, xi}, 1 for {pi, xi*pi}.
  int conductor() const { return square_class_ramified(cls) ? 1 : 0; }
  /// Restriction to the unit group.
  UnitCharacter unit_restriction(const FieldConfig& cfg) const;
};

QuadraticCharacter chi_from_squareclass(SquareClass a);
SquareClass squareclass_from_quadchar(const QuadraticCharacter& chi);

}  // namespace mp2
