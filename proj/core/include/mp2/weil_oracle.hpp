#pragma once

#include <vector>

#include "mp2/characters.hpp"
#include "mp2/gauss.hpp"

namespace mp2 {

/// A K_m-eigenvector candidate in the even Schroedinger model: an even
/// Schwartz function phi supported in p^{ceil(nu/2)}, O^x-equivariant with
/// twist chi*eta^{-1}, determined by its values at pi^i and an eventually
/// constant tail.
struct TruncatedEvenFunction {
  int i_min = 0;
  int i_max = -1;
  std::vector<CycNumber> vals;  // vals[i - i_min] = phi(pi^i)
  CycNumber tail;               // value for i > i_max (zero unless the twist is trivial)
  UnitCharacter unit_twist;     // chi eta^{-1} restricted to O^x

  const CycNumber& at(int i) const;
  bool is_zero_function() const;
};

/// Which even Weil representation and which eigencharacter.
struct WeilRepConfig {
  int eps = 0;
  SquareClass chi = SquareClass::One;
  UnitCharacter eta;
};

enum class WeilGenerator { TorusUnit, UpperUnipotent };

/// Action of a Borel generator of K^eps_m on the truncated model: t(a) for a
/// unit scales by gamma-factors and the equivariance twist; n(b) for
/// b in p^{-eps} multiplies by psi'(b y^2), which must be constant on the
/// stored shells for the result to remain in the family.
TruncatedEvenFunction weil_action_B(const FieldConfig& cfg, const CycContextPtr& ctx,
                                    const WeilRepConfig& rep, WeilGenerator gen,
                                    const Rational& param,
                                    const TruncatedEvenFunction& phi);

/// Independent computation of dim (omega^+_{psi,chi})^{K^eps_m}_eta by exact
/// linear algebra over the cyclotomic field: equivariance and the support
/// bound are absorbed into the ansatz and the opposite-unipotent invariance
/// is imposed through the Fourier-side linear conditions, one per shell
/// valuation and unit square class. The truncation index is raised until the
/// dimension stabilizes twice.
int even_weil_fixed_dim_oracle(const FieldConfig& cfg, const CycContextPtr& ctx,
                               const WeilRepConfig& rep, int m);

/// Same computation, also returning a basis of the solution space (used to
/// verify invariance under sampled generators).
std::vector<TruncatedEvenFunction> even_weil_fixed_space_basis(
    const FieldConfig& cfg, const CycContextPtr& ctx, const WeilRepConfig& rep, int m);

/// Kernel dimension of a matrix over Q(zeta_M) by exact Gaussian elimination.
int cyc_kernel_dimension(std::vector<std::vector<CycNumber>> rows, int num_cols,
                         const CycContextPtr& ctx);

}  // namespace mp2
