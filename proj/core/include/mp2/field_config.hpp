#pragma once

#include <memory>
#include <vector>

#include "mp2/common.hpp"

namespace mp2 {

/// Working context for the local field Q_p (p an odd prime).
///
/// Brute-force oracles compute in the residue rings Z/p^K; closed formulas
/// keep q symbolic. All exact root-of-unity values live in Q(zeta_M), where
/// M is divisible by 8, p^B and (p-1)p^(B-1) so that eighth roots, additive
/// character values zeta_{p^k} and multiplicative character values
/// zeta_{phi(p^n)} all fit.
class FieldConfig {
 public:
  /// p odd prime, N >= 3 the working precision; xi defaults to the smallest
  /// positive quadratic non-residue mod p for determinism of all tables.
  static FieldConfig make(i64 p, int N = 4);
  static FieldConfig make_with_xi(i64 p, int N, i64 xi);

  i64 p() const { return p_; }
  int precision() const { return N_; }
  i64 xi() const { return xi_; }
  i64 cyclotomic_order() const { return M_; }
  int p_capacity() const { return B_; }  // p^B | M

  /// (-1)^((p-1)/2) = Legendre symbol of -1.
  int legendre_minus_one() const { return leg_minus1_; }

  i64 p_pow(int k) const;  // p^k, k in [0, B]

  /// Discrete log table base g (a primitive root modulo every p^n) at level n.
  /// table[u] = dlog of u for units u mod p^n, -1 for non-units.
  const std::vector<int>& dlog_table(int n) const;
  i64 generator() const { return g_; }

 private:
  FieldConfig() = default;
  void init();

  i64 p_ = 0;
  int N_ = 0;
  i64 xi_ = 0;
  i64 M_ = 0;
  int B_ = 0;
  i64 g_ = 0;
  int leg_minus1_ = 0;
  std::shared_ptr<std::vector<std::vector<int>>> dlogs_;  // level -> table
};

}  // namespace mp2
