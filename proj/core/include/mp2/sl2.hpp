#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mp2/characters.hpp"
#include "mp2/gauss.hpp"
#include "mp2/padic.hpp"

namespace mp2 {

/// An element of SL2(Q_p) with exact rational entries (p-localized), so all
/// valuations and residues are exact and nothing ever loses precision.
struct SL2Elem {
  i64 p = 0;
  Rational a, b, c, d;

  static SL2Elem identity(i64 p);
  static SL2Elem torus(i64 p, const Rational& t);          // t(a)
  static SL2Elem upper(i64 p, const Rational& x);          // n(b)
  static SL2Elem lower(i64 p, const Rational& x);          // n^op(c)
  static SL2Elem weyl(i64 p);                              // w = [[0,1],[-1,0]]
  static SL2Elem make(i64 p, Rational a, Rational b, Rational c, Rational d);

  SL2Elem operator*(const SL2Elem& o) const;
  SL2Elem inverse() const;
  bool operator==(const SL2Elem& o) const = default;

  /// Conjugation by beta = diag(1, pi): beta g beta^{-1}.
  SL2Elem beta_conjugate() const;
  SL2Elem beta_conjugate_inv() const;  // beta^{-1} g beta

  bool is_identity() const;
  std::string to_string() const;
};

/// The Kubota x-function: c when c != 0, else d.
ScaledPAdic kubota_x(const SL2Elem& g);

/// Kubota 2-cocycle c(g1, g2) in {+1, -1}.
int kubota_cocycle(const FieldConfig& cfg, const SL2Elem& g1, const SL2Elem& g2);

/// An element of the metaplectic double cover: (g, eps) with the twisted law.
struct MpElement {
  SL2Elem g;
  int eps = 1;
};

MpElement mp_mul(const FieldConfig& cfg, const MpElement& x, const MpElement& y);
MpElement mp_inv(const FieldConfig& cfg, const MpElement& x);

/// -1_psi = (-1_2, gamma(-1, psi^eps)); central of order 2.
MpElement minus_one_psi(const FieldConfig& cfg, const CycContextPtr& ctx, int eps);

/// Which maximal compact (eps 0 or 1) at which level m >= 0.
struct CompactSubgroupSpec {
  int eps = 0;
  int m = 0;
};

/// Membership of g in K^eps_m, decided from entry valuations.
bool in_compact_subgroup(const SL2Elem& g, const CompactSubgroupSpec& spec);

/// The canonical splitting sign s^eps(k) over K^eps, computed by factoring k
/// into the generators {n(b), t(a), n^op(c), w t(pi^eps)} and multiplying
/// their lifted values through the group law of the cover.
int splitting_s(const FieldConfig& cfg, const CycContextPtr& ctx, int eps,
                const SL2Elem& k);

struct SplittingCheckReport {
  int eps = 0;
  int pairs_checked = 0;
  int failures = 0;
  int closed_form_checked = 0;   // s^0 against (c,d)_2-style closed candidate
  int closed_form_failures = 0;
  int dual_route_checked = 0;    // path-independence of the factorization
  int dual_route_failures = 0;
  bool pass() const {
    return failures == 0 && closed_form_failures == 0 && dual_route_failures == 0;
  }
};

/// Verifies s^eps(k1) s^eps(k2) c(k1,k2) = s^eps(k1 k2) on seeded random
/// pairs from K^eps, cross-checks the closed candidate for s^0, and checks
/// factorization path-independence.
SplittingCheckReport splitting_check(const FieldConfig& cfg, const CycContextPtr& ctx,
                                     int eps, int sample_count, std::uint64_t seed);

/// Seeded random element of K^eps_m as a short word in the generators.
SL2Elem random_compact_element(const FieldConfig& cfg, const CompactSubgroupSpec& spec,
                               std::mt19937_64& rng);

/// Representatives of K^eps_m \ G / B per the double-coset classification.
std::vector<SL2Elem> coset_reps(const FieldConfig& cfg, int eps, int m);

struct CosetOracleReport {
  i64 group_order = 0;
  int coset_count = 0;
  int expected_count = 0;
  bool reps_distinct = false;
  bool reps_complete = false;
  bool pass() const {
    return coset_count == expected_count && reps_distinct && reps_complete;
  }
};

/// Enumerates B\SL2(Z/p^m)/B by two-sided orbit closure (the finite model of
/// K^0_m \ K^0 / (B cap K^0)) and verifies count and representatives.
CosetOracleReport coset_oracle(const FieldConfig& cfg, int m);

/// Shape of a double-coset representative, as classified by the lemma.
struct CosetRep {
  enum class Kind { Identity, Weyl, LowerUnipotent };
  Kind kind = Kind::Identity;
  int delta = 0;  // xi-twist exponent for LowerUnipotent
  int i = 0;      // 1 <= i <= m-1 for LowerUnipotent, lemma indexing
};

CosetRep classify_coset_rep(const FieldConfig& cfg, int eps, const SL2Elem& g, int m);

/// Closed criterion from the principal-series dimension count: whether the
/// double coset of g contributes Hom(eta^g, mu) on K_m^g cap B.
/// Requires eta(-1) = mu(-1).
bool hom_condition(const FieldConfig& cfg, int eps, const CosetRep& rep, int m,
                   const UnitCharacter& eta, const MultCharacter& mu);

/// Independent re-derivation: enumerates K_m^g cap B inside SL2(Z/p^L) and
/// tests eta(d-entry) = mu(a-entry) on every element.
bool hom_condition_oracle(const FieldConfig& cfg, int eps, const CosetRep& rep, int m,
                          const UnitCharacter& eta, const MultCharacter& mu, int L);

}  // namespace mp2
