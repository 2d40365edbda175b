#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mp2/characters.hpp"
#include "mp2/cyclotomic.hpp"
#include "mp2/qexpr.hpp"

namespace mp2 {

/// Result of a closed Gauss-sum evaluation. Squared magnitudes are stored
/// instead of magnitudes so every comparison stays rational.
struct GaussValue {
  enum class Kind { ExactValue, ZeroExact, MagSqOnly };
  Kind kind = Kind::ZeroExact;
  QExpr value;   // meaningful for ExactValue (a rational expression in q)
  QExpr mag_sq;  // exact |.|^2 for all three kinds
  std::string to_string() const;
};

/// g(chi, psi) = int_{O^x} chi(x) psi(x) dx as an exact finite sum over
/// (Z/p^K)^x with K = max(1, c(chi), c(psi)); independent of K above that.
CycNumber gauss_g_oracle(const FieldConfig& cfg, const CycContextPtr& ctx,
                         const UnitCharacter& chi, const AdditiveCharacter& psi,
                         std::optional<int> K_override = std::nullopt);

/// Closed form: exact value when c(chi) = 0, vanishing / squared magnitude
/// when c(chi) >= 1.
GaussValue gauss_g_closed(int chi_conductor, int psi_conductor);

/// h(chi, psi) = int_{O^x} chi(x) psi(x^2) dx, brute force.
CycNumber gauss_h_oracle(const FieldConfig& cfg, const CycContextPtr& ctx,
                         const UnitCharacter& chi, const AdditiveCharacter& psi,
                         std::optional<int> K_override = std::nullopt);

/// |h(chi,psi)|^2 + |h(chi,psi_xi)|^2 in closed form; requires chi(-1) = +1
/// and c(psi) >= 1.
QExpr gauss_h_pair_magsq(const FieldConfig& cfg, const UnitCharacter& chi,
                         const AdditiveCharacter& psi);

/// Normalized Weil index gamma(a, psi) = gamma(psi_a)/gamma(psi), computed by
/// stabilized truncated integrals of psi_b(x^2) and returned as an exact
/// eighth root of unity.
struct WeilIndex {
  CycNumber value;
  int zeta8_exp = 0;  // value = zeta_8^zeta8_exp
};

WeilIndex weil_index(const FieldConfig& cfg, const CycContextPtr& ctx,
                     const ScaledPAdic& a, const AdditiveCharacter& psi);

/// gamma(a, psi) for a unit a is always +-1.
int weil_index_unit_sign(const FieldConfig& cfg, const CycContextPtr& ctx,
                         const ScaledPAdic& a, const AdditiveCharacter& psi);

/// The unnormalized index gamma(psi) as a normalized field element.
CycNumber weil_gamma_psi(const FieldConfig& cfg, const CycContextPtr& ctx,
                         const AdditiveCharacter& psi);

/// Truncated integral q^s * int_{p^-r} psi_b(x^2) dx together with the mass
/// scale s; exposed for tests.
std::pair<CycNumber, int> weil_truncated_integral(const FieldConfig& cfg,
                                                  const CycContextPtr& ctx,
                                                  const AdditiveCharacter& psi_b,
                                                  int r);

struct IdentityCheckResult {
  std::string name;
  bool pass = false;
  int checked = 0;
  std::string detail;
};

/// Verifies the four Weil-index identities (square invariance,
/// multiplicativity twisted by the Hilbert symbol, psi_c-twist, and the
/// gamma(-1, psi) = gamma(psi)^-2 relation) plus the unit-scaling parity
/// consequence, over all square classes.
std::vector<IdentityCheckResult> weil_index_identities_check(
    const FieldConfig& cfg, const CycContextPtr& ctx, const AdditiveCharacter& psi);

/// The quadratic Gauss sum sum_t zeta_p^{t^2}; satisfies tau^2 = (-1|p) p.
CycNumber quadratic_gauss_sum(const FieldConfig& cfg, const CycContextPtr& ctx);

/// sqrt(p) in the standard embedding (tau for p = 1 mod 4, -i*tau otherwise).
CycNumber sqrt_p_element(const FieldConfig& cfg, const CycContextPtr& ctx);

}  // namespace mp2
