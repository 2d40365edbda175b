#pragma once

#include <string>

#include "mp2/field_config.hpp"
#include "mp2/rational.hpp"
#include "mp2/residue.hpp"

namespace mp2 {

/// One of the four square classes of Q_p^x / (Q_p^x)^2 for odd p.
enum class SquareClass { One, Xi, Pi, XiPi };

const char* to_string(SquareClass c);
SquareClass square_class_from_string(const std::string& s);
SquareClass square_class_mul(SquareClass a, SquareClass b);
bool square_class_ramified(SquareClass c);  // odd valuation part
int square_class_ord(SquareClass c);        // 0 or 1

/// A nonzero element of Q_p^x written as pi^val * unit, or exact zero.
///
/// The unit part is an exact rational with numerator and denominator prime
/// to p, so all arithmetic here is exact; valuations of sums come out right
/// with no precision bookkeeping. Residue reductions to Z/p^K are taken on
/// demand.
class ScaledPAdic {
 public:
  ScaledPAdic() : zero_(true), p_(0), val_(0), unit_(1) {}

  static ScaledPAdic zero(i64 p);
  static ScaledPAdic from_rational(i64 p, const Rational& x);
  static ScaledPAdic make(i64 p, int val, const Rational& unit);
  static ScaledPAdic one(i64 p) { return from_rational(p, Rational(1)); }

  bool is_zero() const { return zero_; }
  i64 p() const { return p_; }
  int val() const;  // errors on zero
  const Rational& unit() const;
  Rational to_rational() const;

  bool is_integral() const { return zero_ || val_ >= 0; }
  bool is_unit() const { return !zero_ && val_ == 0; }

  /// Unit part reduced mod p^K.
  ResidueInt unit_residue(int K) const;

  ScaledPAdic operator*(const ScaledPAdic& o) const;
  ScaledPAdic operator/(const ScaledPAdic& o) const;
  ScaledPAdic operator+(const ScaledPAdic& o) const;
  ScaledPAdic operator-() const;

  bool operator==(const ScaledPAdic& o) const;

  std::string to_string() const;

 private:
  bool zero_;
  i64 p_;
  int val_;
  Rational unit_;
};

/// Class of x in {1, xi, pi, xi*pi}; errors on zero.
SquareClass square_class(const FieldConfig& cfg, const ScaledPAdic& x);

/// Canonical representative of a square class as an exact element.
ScaledPAdic square_class_rep(const FieldConfig& cfg, SquareClass c);

/// Quadratic Hilbert symbol (a, b)_2 over Q_p via the tame closed form.
int hilbert(const FieldConfig& cfg, const ScaledPAdic& a, const ScaledPAdic& b);
int hilbert(const FieldConfig& cfg, SquareClass a, SquareClass b);

/// Independent oracle: decides (a, b)_2 by exhaustively searching primitive
/// solutions of z^2 = a x^2 + b y^2 mod p^K. Requires K >= 3.
int hilbert_oracle(const FieldConfig& cfg, const ScaledPAdic& a,
                   const ScaledPAdic& b, int K);

}  // namespace mp2
