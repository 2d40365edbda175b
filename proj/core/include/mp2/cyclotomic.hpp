#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mp2/common.hpp"
#include "mp2/rational.hpp"

namespace mp2 {

/// Shared data for arithmetic in Q(zeta_M): the prime-power factorization of
/// M and the CRT constants used to split a root exponent into local
/// exponents. Elements are kept in the canonical product basis (every local
/// exponent below phi(l^a)), which makes zero-testing exact and trivial.
class CycContext {
 public:
  explicit CycContext(i64 M);

  i64 M() const { return M_; }

  struct Local {
    i64 prime;
    int exp;
    i64 value;      // prime^exp
    i64 phi;        // phi(prime^exp)
    i64 crt_coeff;  // (M/value)^{-1} mod value
    i64 shift;      // M/value: adding it bumps this local exponent by 1
  };
  const std::vector<Local>& locals() const { return locals_; }

  bool is_canonical(i64 k) const;
  /// Rewrites zeta_M^k as a canonical-combination; appends (exponent, sign).
  void reduce_exponent(i64 k, std::vector<std::pair<i64, int>>& out) const;

 private:
  i64 M_;
  std::vector<Local> locals_;
};

using CycContextPtr = std::shared_ptr<const CycContext>;

/// An exact element of the cyclotomic field Q(zeta_M).
///
/// Sparse map from canonical exponents to rational coefficients; all
/// comparisons are exact, no floating point anywhere.
class CycNumber {
 public:
  CycNumber() = default;
  explicit CycNumber(CycContextPtr ctx) : ctx_(std::move(ctx)) {}

  static CycNumber from_rational(CycContextPtr ctx, const Rational& r);
  /// zeta_order^j (requires order | M).
  static CycNumber root_of_unity(CycContextPtr ctx, i64 order, i64 j);

  const CycContextPtr& context() const { return ctx_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  /// The exact rational value when the element lies in Q.
  std::optional<Rational> try_rational() const;
  Rational as_rational() const;  // errors when not rational

  size_t support_size() const { return terms_.size(); }

  CycNumber operator-() const;
  CycNumber operator+(const CycNumber& o) const;
  CycNumber operator-(const CycNumber& o) const;
  CycNumber operator*(const CycNumber& o) const;
  CycNumber operator*(const Rational& r) const;
  CycNumber operator/(const CycNumber& o) const;

  CycNumber& operator+=(const CycNumber& o) { return *this = *this + o; }
  CycNumber& operator-=(const CycNumber& o) { return *this = *this - o; }
  CycNumber& operator*=(const CycNumber& o) { return *this = *this * o; }

  bool operator==(const CycNumber& o) const { return (*this - o).is_zero(); }

  /// Galois conjugation zeta -> zeta^t for t coprime to M.
  CycNumber galois(i64 t) const;
  /// Complex conjugation zeta -> zeta^-1.
  CycNumber conj() const;
  /// x * conj(x); errors if the (always conj-fixed) result is not rational.
  Rational mag_sq() const;

  /// Multiplicative inverse. Uses conj/mag_sq when |x|^2 is rational and
  /// falls back to a full subfield norm otherwise.
  CycNumber inverse() const;

  CycNumber pow(i64 e) const;

  /// Canonical textual form: sum of "a/b*zeta_M^k" terms in exponent order.
  std::string to_string() const;

  void add_term(i64 raw_exponent, const Rational& coeff);

 private:
  void prune();
  CycContextPtr ctx_;
  std::map<i64, Rational> terms_;
};

}  // namespace mp2
