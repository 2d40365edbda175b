#pragma once

#include <map>
#include <string>

#include "mp2/rational.hpp"

namespace mp2 {

/// Laurent polynomial in the residue cardinality q. Closed formulas keep q
/// symbolic so tables can be emitted for general q; brute-force oracles bind
/// q = p at comparison time.
class QExpr {
 public:
  QExpr() = default;
  QExpr(Rational c) { if (!c.is_zero()) terms_[0] = c; }  // NOLINT
  static QExpr q_pow(int e, Rational coeff = Rational(1));

  bool is_zero() const { return terms_.empty(); }

  QExpr operator+(const QExpr& o) const;
  QExpr operator-(const QExpr& o) const;
  QExpr operator*(const QExpr& o) const;
  bool operator==(const QExpr& o) const { return terms_ == o.terms_; }

  Rational bind(i64 q) const;
  /// Canonical form such as "1 - q^-1" or "4*q^-2".
  std::string to_string() const;

 private:
  std::map<int, Rational> terms_;  // exponent -> coefficient
};

}  // namespace mp2
