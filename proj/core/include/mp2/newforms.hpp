#pragma once

#include <map>
#include <optional>
#include <variant>

#include "mp2/characters.hpp"
#include "mp2/sl2.hpp"

namespace mp2 {

/// The four classes of irreducible genuine representations, carrying exactly
/// the parameters the dimension formulas consume. Descriptors are read
/// relative to the eps of each query (the base character is psi^eps).
struct PrincipalSeriesRep {
  MultCharacter mu;
};
struct EvenWeilRep {
  SquareClass chi = SquareClass::One;
};
struct OddWeilRep {
  SquareClass chi = SquareClass::One;
};
struct SteinbergRep {
  SquareClass chi = SquareClass::One;
};
struct SupercuspidalRep {
  int delta = 0;        // which maximal compact carries sigma
  int c_sigma = 1;      // conductor of sigma, >= 1
  int defect = 0;       // 0 or 1; defect 1 forces delta = 1 and c_sigma >= 2
  int central_sign = 1; // the sign eta(-1) must match
  bool is_odd_weil = false;  // defect 0, c_sigma = 1 only
};

using ReprDescriptor = std::variant<EvenWeilRep, OddWeilRep, SteinbergRep,
                                    SupercuspidalRep, PrincipalSeriesRep>;

/// Throws DomainError on invalid parameter combinations (exceptional mu,
/// defect-1 with delta = 0, odd-Weil flags off their locus, ...).
void validate_descriptor(const FieldConfig& cfg, const ReprDescriptor& repr);

std::string descriptor_to_string(const ReprDescriptor& repr);

struct LevelQuery {
  int eps = 0;
  UnitCharacter eta;
  int m = 0;
};

/// A dimension that may be outside the theorems' hypotheses.
struct DimValue {
  bool known = true;
  long value = 0;
  static DimValue of(long v) { return DimValue{true, v}; }
  static DimValue unknown() { return DimValue{false, 0}; }
  bool operator==(const DimValue& o) const = default;
};

/// z_psi-type sign governing which eta can appear: eta(-1) must equal it.
int central_sign(const FieldConfig& cfg, const ReprDescriptor& repr, int eps);

/// dim pi^{K^eps_m}_eta by the closed formulas. Returns 0 below c(eta) or on
/// central-sign mismatch; returns unknown() outside the supercuspidal
/// hypothesis c(eta) <= c(sigma) - d(sigma). Rejects exceptional mu.
DimValue dim_fixed(const FieldConfig& cfg, const ReprDescriptor& repr,
                   const LevelQuery& q);

/// The principal-series dimension formula alone, admitting reducible mu;
/// used internally by the Steinberg exact-sequence identity.
long ps_dim_formula(const FieldConfig& cfg, const MultCharacter& mu,
                    const UnitCharacter& eta, int m);

/// Steinberg dimension through the exact sequence: PS at chi|.|^{1/2} minus
/// the even Weil dimension. Equals the closed Steinberg formula.
long steinberg_dim_via_exact_sequence(const FieldConfig& cfg, SquareClass chi,
                                      const UnitCharacter& eta, int m);

enum class CondKind { Finite, Infinite, Unknown };
struct ConductorValue {
  CondKind kind = CondKind::Infinite;
  int value = 0;  // meaningful when Finite
  static ConductorValue finite(int v) { return {CondKind::Finite, v}; }
  static ConductorValue infinite() { return {CondKind::Infinite, 0}; }
  static ConductorValue unknown() { return {CondKind::Unknown, 0}; }
  bool operator==(const ConductorValue& o) const = default;
};

/// c^eps_eta(pi) = min { m : dim > 0 }, by scanning the formulas.
ConductorValue conductor(const FieldConfig& cfg, const ReprDescriptor& repr, int eps,
                         const UnitCharacter& eta);

/// c^eps_min(pi), closed form per the theorems.
int conductor_min(const FieldConfig& cfg, const ReprDescriptor& repr, int eps);

/// Number of square classes a with pi psi_a-generic (the Waldspurger count).
int generic_count(const ReprDescriptor& repr);

struct NewformProfile {
  bool defined = false;      // false when the eta-space is identically zero
  int first_level = 0;       // M = c^eps_eta
  std::map<int, long> dims_new;  // level -> dim of the new subquotient
  int window = 0;            // a: dims_new supported exactly on [M, M+a]
  long total() const;
};

/// The newform dimension profile per the classification corollaries.
NewformProfile newform_profile(const FieldConfig& cfg, const ReprDescriptor& repr,
                               int eps, const UnitCharacter& eta);

/// sum_m dim new_m == generic count (the Roberts-Schmidt sum rule).
bool rs_sum_check(const FieldConfig& cfg, const ReprDescriptor& repr, int eps,
                  const UnitCharacter& eta);

/// dim new_m <= dim_m - dim_{m-1}, and for m >= 2 also
/// dim new_m >= dim_m - dim_{m-1} - dim_{m-2}.
bool oldform_bounds_check(const FieldConfig& cfg, const ReprDescriptor& repr, int eps,
                          const UnitCharacter& eta, int m_max);

/// Is pi generic for the psi^eps-twist by the given square class? True/false
/// where the classification pins it down, Unknown otherwise (never inferred
/// by elimination).
Tri is_generic(const FieldConfig& cfg, const ReprDescriptor& repr, int eps,
               SquareClass psi_class);

struct WhittakerResult {
  Tri verdict = Tri::Unknown;
  int level = -1;  // the level at which the nonvanishing statement applies
};

/// Whittaker nonvanishing on the eta-fixed space at the classification's
/// stated level, for Psi = (psi^eps)_b. Errors when pi is not Psi-generic;
/// when genericity is Unknown the caller may assert it (supercuspidal defect
/// 1, where the classification leaves the exact twist open).
WhittakerResult whittaker_nonvanishing(const FieldConfig& cfg,
                                       const ReprDescriptor& repr, int eps,
                                       const UnitCharacter& eta, SquareClass psi_class,
                                       bool assume_generic = false);

enum class PsVectorKind { Weyl, One, LowerSquare, LowerXi };

/// Per-vector nonvanishing data for the principal-series basis vectors
/// (f_w, f_1 and the two lower-unipotent families), resolved exactly through
/// the h-Gauss sums where the classification reduces to them.
Tri ps_whittaker_vector_nonvanishing(const FieldConfig& cfg, const CycContextPtr& ctx,
                                     const MultCharacter& mu, int eps,
                                     const UnitCharacter& eta, PsVectorKind kind,
                                     SquareClass psi_class);

/// Coset-counting oracle for principal-series dimensions: counts double-coset
/// representatives whose Hom-condition holds. With use_brute the condition is
/// re-derived by finite enumeration (hom_condition_oracle).
long dim_fixed_ps_oracle(const FieldConfig& cfg, const MultCharacter& mu, int eps,
                         const UnitCharacter& eta, int m, bool use_brute = false,
                         int L = 0);

}  // namespace mp2
