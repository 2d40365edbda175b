#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include "mp2/common.hpp"

namespace mp2 {

/// Exact rational numbers on 128-bit integers.
///
/// Every operation normalizes (gcd-reduced, positive denominator) and checks
/// for overflow; an operation that would leave the representable range throws
/// OverflowError instead of wrapping. The ranges arising on the supported
/// parameter grids (denominators are small powers of p <= 7) stay far below
/// the 128-bit limit.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(i64 n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(i64 n, i64 d);
  static Rational from_i128(i128 n, i128 d);

  i128 num() const { return num_; }
  i128 den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  std::strong_ordering operator<=>(const Rational& o) const;

  Rational inverse() const;
  Rational pow(long e) const;

  /// p-adic valuation; errors on zero.
  int valuation(i64 p) const;
  /// Writes *this = p^v * u with u a p-unit; returns v and stores u.
  int split_p_part(i64 p, Rational& unit) const;

  /// Canonical "a/b" (or "a" when integral).
  std::string to_string() const;
  static Rational parse(const std::string& s);

 private:
  void normalize();
  i128 num_;
  i128 den_;  // > 0
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace mp2
