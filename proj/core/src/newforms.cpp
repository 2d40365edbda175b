#include "mp2/newforms.hpp"

#include <algorithm>

#include "mp2/intmath.hpp"
#include "mp2/weil_oracle.hpp"

namespace mp2 {

namespace {

int floor_div(int a, int b) {  // b > 0
  return a >= 0 ? a / b : -((-a + b - 1) / b);
}
int ceil_div(int a, int b) { return floor_div(a + b - 1, b); }
long pos_part(long r) { return r > 0 ? r : 0; }

UnitCharacter chi_unit(const FieldConfig& cfg, SquareClass chi) {
  return QuadraticCharacter{chi}.unit_restriction(cfg);
}

int chi_sign(const FieldConfig& cfg, SquareClass chi) {
  return QuadraticCharacter{chi}.sign_at_minus_one(cfg);
}

// The lemma's coset index relative to the queried eps; the odd Weil
// representation relative to psi^eps_a sits on K^delta with
// delta = eps + ord(a) + 1 mod 2.
int odd_weil_delta(SquareClass chi, int eps) {
  return (eps + square_class_ord(chi) + 1) % 2;
}

SupercuspidalRep odd_weil_as_sc(const FieldConfig& cfg, SquareClass chi, int eps) {
  SupercuspidalRep sc;
  sc.delta = odd_weil_delta(chi, eps);
  sc.c_sigma = 1;
  sc.defect = 0;
  sc.central_sign = -chi_sign(cfg, chi);
  sc.is_odd_weil = true;
  return sc;
}

long sc_dim(const SupercuspidalRep& sc, int eps, int m) {
  if (sc.defect == 1) {
    return m <= 2 * sc.c_sigma - 2 ? 0 : m - 2 * sc.c_sigma + 2;
  }
  if (m <= 2 * sc.c_sigma - 1) return 0;
  if (sc.is_odd_weil) {
    bool ed_even = (eps + sc.delta) % 2 == 0;
    return ed_even ? floor_div(m - 1, 2) : ceil_div(m - 1, 2);
  }
  int k = m - 2 * sc.c_sigma + 1;
  bool parity_even = (sc.c_sigma + eps + sc.delta) % 2 == 0;
  return parity_even ? 2 * ceil_div(k, 2) : 2 * floor_div(k, 2);
}

}  // namespace

void validate_descriptor(const FieldConfig& cfg, const ReprDescriptor& repr) {
  if (const auto* ps = std::get_if<PrincipalSeriesRep>(&repr)) {
    if (ps->mu.exceptional(cfg))
      throw DomainError("reducible principal series: use Steinberg/EvenWeil");
    return;
  }
  if (const auto* sc = std::get_if<SupercuspidalRep>(&repr)) {
    if (sc->delta != 0 && sc->delta != 1) throw DomainError("delta must be 0 or 1");
    if (sc->defect != 0 && sc->defect != 1) throw DomainError("defect must be 0 or 1");
    if (sc->c_sigma < 1) throw DomainError("c(sigma) must be >= 1");
    if (sc->central_sign != 1 && sc->central_sign != -1)
      throw DomainError("central sign must be +-1");
    if (sc->defect == 1 && sc->delta != 1)
      throw DomainError("defect 1 forces delta = 1");
    if (sc->defect == 1 && sc->c_sigma < 2)
      throw DomainError("defect 1 forces c(sigma) >= 2");
    if (sc->is_odd_weil && (sc->defect != 0 || sc->c_sigma != 1))
      throw DomainError("odd Weil supercuspidals have conductor 1 and defect 0");
    return;
  }
}

std::string descriptor_to_string(const ReprDescriptor& repr) {
  if (const auto* ps = std::get_if<PrincipalSeriesRep>(&repr))
    return "ps[" + ps->mu.to_string() + "]";
  if (const auto* ew = std::get_if<EvenWeilRep>(&repr))
    return std::string("even-weil[chi=") + to_string(ew->chi) + "]";
  if (const auto* ow = std::get_if<OddWeilRep>(&repr))
    return std::string("odd-weil[chi=") + to_string(ow->chi) + "]";
  if (const auto* st = std::get_if<SteinbergRep>(&repr))
    return std::string("steinberg[chi=") + to_string(st->chi) + "]";
  const auto& sc = std::get<SupercuspidalRep>(repr);
  return "sc[delta=" + std::to_string(sc.delta) + ",c=" + std::to_string(sc.c_sigma) +
         ",defect=" + std::to_string(sc.defect) +
         ",z=" + std::to_string(sc.central_sign) +
         (sc.is_odd_weil ? ",odd-weil" : "") + "]";
}

int central_sign(const FieldConfig& cfg, const ReprDescriptor& repr, int eps) {
  (void)eps;
  if (const auto* ps = std::get_if<PrincipalSeriesRep>(&repr))
    return ps->mu.sign_at_minus_one(cfg);
  if (const auto* ew = std::get_if<EvenWeilRep>(&repr)) return chi_sign(cfg, ew->chi);
  if (const auto* ow = std::get_if<OddWeilRep>(&repr)) return -chi_sign(cfg, ow->chi);
  if (const auto* st = std::get_if<SteinbergRep>(&repr)) return chi_sign(cfg, st->chi);
  return std::get<SupercuspidalRep>(repr).central_sign;
}

long ps_dim_formula(const FieldConfig& cfg, const MultCharacter& mu,
                    const UnitCharacter& eta, int m) {
  if (m < 0) throw DomainError("level must be >= 0");
  if (eta.sign_at_minus_one(cfg) != mu.sign_at_minus_one(cfg)) return 0;
  if (m < eta.conductor()) return 0;
  int c_mu = mu.conductor();
  int c_em = eta.product(cfg, mu.unit_part()).conductor();
  int c_emi = eta.product(cfg, mu.unit_part().inverse(cfg)).conductor();
  if (c_mu == 0 && eta.conductor() == 0 && m == 0) return 1;
  if (m < c_mu) return 0;
  long dim;
  if (m < 2 * c_mu) {
    dim = 2 * (pos_part(m - c_mu - c_em + 1) + pos_part(m - c_mu - c_emi + 1)) -
          (c_em == 0 ? 1 : 0) - (c_emi == 0 ? 1 : 0);
  } else {
    dim = 2 * pos_part(m - c_em - c_emi + 1) - (c_em == 0 ? 1 : 0) -
          (c_emi == 0 ? 1 : 0);
  }
  if (dim < 0) throw Error("principal series dimension went negative");
  return dim;
}

namespace {

long even_weil_dim(const FieldConfig& cfg, SquareClass chi, const UnitCharacter& eta,
                   int m) {
  if (eta.sign_at_minus_one(cfg) != chi_sign(cfg, chi)) return 0;
  if (m < eta.conductor()) return 0;
  int c_echi = eta.product(cfg, chi_unit(cfg, chi)).conductor();
  int c_chi = QuadraticCharacter{chi}.conductor();
  return pos_part(floor_div(m - 2 * c_echi - c_chi, 2) + 1);
}

long steinberg_dim(const FieldConfig& cfg, SquareClass chi, const UnitCharacter& eta,
                   int m) {
  if (eta.sign_at_minus_one(cfg) != chi_sign(cfg, chi)) return 0;
  if (m < eta.conductor()) return 0;
  int n = eta.product(cfg, chi_unit(cfg, chi)).conductor();
  int delta_n = n == 0 ? 1 : 0;
  if (!square_class_ramified(chi)) {
    return pos_part(ceil_div(3 * (m - 2 * n), 2) + 1 - 2 * delta_n);
  }
  return pos_part(ceil_div(3 * (m - 2 * n) - 1, 2) + 2 - 2 * delta_n);
}

}  // namespace

long steinberg_dim_via_exact_sequence(const FieldConfig& cfg, SquareClass chi,
                                      const UnitCharacter& eta, int m) {
  MultCharacter mu = MultCharacter::quadratic_of_class(cfg, chi)
                         .product(cfg, MultCharacter::abs_power(cfg, Rational(1, 2)));
  return ps_dim_formula(cfg, mu, eta, m) - even_weil_dim(cfg, chi, eta, m);
}

DimValue dim_fixed(const FieldConfig& cfg, const ReprDescriptor& repr,
                   const LevelQuery& q) {
  validate_descriptor(cfg, repr);
  if (q.m < 0) throw DomainError("level must be >= 0");
  if (q.eta.sign_at_minus_one(cfg) != central_sign(cfg, repr, q.eps))
    return DimValue::of(0);
  if (q.m < q.eta.conductor()) return DimValue::of(0);

  if (const auto* ps = std::get_if<PrincipalSeriesRep>(&repr))
    return DimValue::of(ps_dim_formula(cfg, ps->mu, q.eta, q.m));
  if (const auto* ew = std::get_if<EvenWeilRep>(&repr))
    return DimValue::of(even_weil_dim(cfg, ew->chi, q.eta, q.m));
  if (const auto* st = std::get_if<SteinbergRep>(&repr))
    return DimValue::of(steinberg_dim(cfg, st->chi, q.eta, q.m));
  SupercuspidalRep sc;
  if (const auto* ow = std::get_if<OddWeilRep>(&repr)) {
    sc = odd_weil_as_sc(cfg, ow->chi, q.eps);
  } else {
    sc = std::get<SupercuspidalRep>(repr);
  }
  if (q.eta.conductor() > sc.c_sigma - sc.defect) return DimValue::unknown();
  return DimValue::of(sc_dim(sc, q.eps, q.m));
}

ConductorValue conductor(const FieldConfig& cfg, const ReprDescriptor& repr, int eps,
                         const UnitCharacter& eta) {
  validate_descriptor(cfg, repr);
  if (eta.sign_at_minus_one(cfg) != central_sign(cfg, repr, eps))
    return ConductorValue::infinite();
  int bound = 8 + 2 * eta.conductor();
  if (const auto* ps = std::get_if<PrincipalSeriesRep>(&repr)) {
    int c_em = eta.product(cfg, ps->mu.unit_part()).conductor();
    int c_emi = eta.product(cfg, ps->mu.unit_part().inverse(cfg)).conductor();
    bound += 2 * ps->mu.conductor() + c_em + c_emi;
  } else if (const auto* sc = std::get_if<SupercuspidalRep>(&repr)) {
    bound += 2 * sc->c_sigma;
  }
  for (int m = 0; m <= bound; ++m) {
    DimValue d = dim_fixed(cfg, repr, LevelQuery{eps, eta, m});
    if (!d.known) return ConductorValue::unknown();
    if (d.value > 0) return ConductorValue::finite(m);
  }
  throw Error("conductor scan exhausted its bound with matching central sign");
}

int conductor_min(const FieldConfig& cfg, const ReprDescriptor& repr, int eps) {
  validate_descriptor(cfg, repr);
  if (const auto* ps = std::get_if<PrincipalSeriesRep>(&repr))
    return ps->mu.conductor();
  if (const auto* ew = std::get_if<EvenWeilRep>(&repr))
    return QuadraticCharacter{ew->chi}.conductor();
  if (std::get_if<SteinbergRep>(&repr)) return 1;
  SupercuspidalRep sc;
  if (const auto* ow = std::get_if<OddWeilRep>(&repr)) {
    sc = odd_weil_as_sc(cfg, ow->chi, eps);
  } else {
    sc = std::get<SupercuspidalRep>(repr);
  }
  if (sc.defect == 1) return 2 * sc.c_sigma - 1;
  if (sc.is_odd_weil) return (eps + sc.delta) % 2 == 1 ? 2 : 3;
  return (sc.c_sigma + eps + sc.delta) % 2 == 0 ? 2 * sc.c_sigma
                                                : 2 * sc.c_sigma + 1;
}

int generic_count(const ReprDescriptor& repr) {
  if (std::get_if<PrincipalSeriesRep>(&repr)) return 4;
  if (std::get_if<SteinbergRep>(&repr)) return 3;
  if (std::get_if<EvenWeilRep>(&repr) || std::get_if<OddWeilRep>(&repr)) return 1;
  const auto& sc = std::get<SupercuspidalRep>(repr);
  return sc.is_odd_weil ? 1 : 2;
}

long NewformProfile::total() const {
  long t = 0;
  for (const auto& [m, d] : dims_new) t += d;
  return t;
}

NewformProfile newform_profile(const FieldConfig& cfg, const ReprDescriptor& repr,
                               int eps, const UnitCharacter& eta) {
  NewformProfile profile;
  ConductorValue M = conductor(cfg, repr, eps, eta);
  if (M.kind == CondKind::Infinite) return profile;
  if (M.kind == CondKind::Unknown)
    throw DomainError("newform profile outside the supercuspidal hypothesis");
  profile.defined = true;
  profile.first_level = M.value;
  auto set = [&](std::initializer_list<long> dims) {
    int m = M.value;
    for (long d : dims) profile.dims_new[m++] = d;
    profile.window = (int)dims.size() - 1;
  };

  if (const auto* ps = std::get_if<PrincipalSeriesRep>(&repr)) {
    int c_em = eta.product(cfg, ps->mu.unit_part()).conductor();
    int c_emi = eta.product(cfg, ps->mu.unit_part().inverse(cfg)).conductor();
    if (ps->mu.conductor() == 0 && eta.conductor() == 0) {
      set({1, 1, 1, 1});
    } else if ((c_em == 0) != (c_emi == 0)) {
      set({1, 2, 1});
    } else {
      set({2, 2});
    }
    return profile;
  }
  if (std::get_if<EvenWeilRep>(&repr)) {
    set({1});
    return profile;
  }
  if (const auto* st = std::get_if<SteinbergRep>(&repr)) {
    int c_chi = QuadraticCharacter{st->chi}.conductor();
    int c_echi = eta.product(cfg, chi_unit(cfg, st->chi)).conductor();
    if (c_chi == 0 && c_echi == 0) {
      set({1, 1, 1});
    } else if ((c_chi == 0) != (c_echi == 0)) {
      set({1, 2});
    } else {
      set({2, 1});
    }
    return profile;
  }
  if (std::get_if<OddWeilRep>(&repr)) {
    set({1});
    return profile;
  }
  const auto& sc = std::get<SupercuspidalRep>(repr);
  if (sc.defect == 1) {
    set({1, 1});
  } else {
    set({sc.is_odd_weil ? 1L : 2L});
  }
  return profile;
}

bool rs_sum_check(const FieldConfig& cfg, const ReprDescriptor& repr, int eps,
                  const UnitCharacter& eta) {
  NewformProfile profile = newform_profile(cfg, repr, eps, eta);
  if (!profile.defined)
    throw DomainError("rs_sum_check on an eta with mismatched central sign");
  return profile.total() == generic_count(repr);
}

bool oldform_bounds_check(const FieldConfig& cfg, const ReprDescriptor& repr, int eps,
                          const UnitCharacter& eta, int m_max) {
  if (m_max < 2) throw DomainError("oldform bounds need m_max >= 2");
  NewformProfile profile = newform_profile(cfg, repr, eps, eta);
  if (!profile.defined) return true;
  auto dim = [&](int m) {
    DimValue d = dim_fixed(cfg, repr, LevelQuery{eps, eta, m});
    if (!d.known) throw DomainError("oldform bounds outside the hypothesis");
    return d.value;
  };
  auto newdim = [&](int m) {
    auto it = profile.dims_new.find(m);
    return it == profile.dims_new.end() ? 0L : it->second;
  };
  for (int m = 1; m <= m_max; ++m) {
    if (newdim(m) > dim(m) - dim(m - 1)) return false;
    if (m >= 2 && newdim(m) < dim(m) - dim(m - 1) - dim(m - 2)) return false;
  }
  return true;
}

Tri is_generic(const FieldConfig& cfg, const ReprDescriptor& repr, int eps,
               SquareClass psi_class) {
  (void)cfg;
  if (std::get_if<PrincipalSeriesRep>(&repr)) return Tri::True;
  if (const auto* ew = std::get_if<EvenWeilRep>(&repr))
    return psi_class == ew->chi ? Tri::True : Tri::False;
  if (const auto* ow = std::get_if<OddWeilRep>(&repr))
    return psi_class == ow->chi ? Tri::True : Tri::False;
  if (const auto* st = std::get_if<SteinbergRep>(&repr)) {
    if (psi_class == st->chi) return Tri::False;
    if (psi_class == SquareClass::One) return Tri::True;
    return Tri::Unknown;
  }
  const auto& sc = std::get<SupercuspidalRep>(repr);
  if (sc.defect == 1) return Tri::Unknown;
  if (sc.is_odd_weil) {
    // generic for exactly one class of the matching parity
    int parity = (eps + sc.delta) % 2;
    return square_class_ord(psi_class) % 2 == parity ? Tri::Unknown : Tri::False;
  }
  int total = (eps + sc.delta + square_class_ord(psi_class)) % 2;
  return total == 0 ? Tri::True : Tri::False;
}

WhittakerResult whittaker_nonvanishing(const FieldConfig& cfg,
                                       const ReprDescriptor& repr, int eps,
                                       const UnitCharacter& eta, SquareClass psi_class,
                                       bool assume_generic) {
  validate_descriptor(cfg, repr);
  Tri gen = is_generic(cfg, repr, eps, psi_class);
  if (gen == Tri::False) throw DomainError("representation is not generic for Psi");
  ConductorValue M = conductor(cfg, repr, eps, eta);
  if (M.kind != CondKind::Finite)
    throw DomainError("whittaker_nonvanishing needs a finite eta-conductor");
  int i = square_class_ord(psi_class);

  WhittakerResult out;
  if (const auto* ps = std::get_if<PrincipalSeriesRep>(&repr)) {
    // Normalize so that c(eta mu^{-1}) <= c(eta mu); pi(mu) = pi(mu^{-1}).
    MultCharacter mu = ps->mu;
    int c_em = eta.product(cfg, mu.unit_part()).conductor();
    int c_emi = eta.product(cfg, mu.unit_part().inverse(cfg)).conductor();
    if (c_emi > c_em) {
      mu = mu.inverse(cfg);
      std::swap(c_em, c_emi);
    }
    bool unram_case = mu.conductor() == 0 && eta.conductor() == 0;
    out.level = unram_case ? (i == 0 ? 0 : 2) : M.value + i;
    if (unram_case && i == 0) {
      // lambda(f^0_w) vanishes exactly at the excluded reducible points
      MultCharacter bad =
          psi_class == SquareClass::One
              ? MultCharacter::quadratic_of_class(cfg, SquareClass::Xi)
                    .product(cfg, MultCharacter::abs_power(cfg, Rational(-1, 2)))
              : MultCharacter::abs_power(cfg, Rational(-1, 2));
      out.verdict = (mu == bad) ? Tri::False : Tri::True;
      return out;
    }
    if (i == 0 && c_emi == 0) {
      out.verdict = Tri::True;  // an f_w (or f_1) vector carries the functional
      return out;
    }
    // All remaining cases reduce to the lower-unipotent pair: the functional
    // is nonzero on the space iff one of the two h-Gauss values is (exact).
    CycContextPtr ctx = std::make_shared<CycContext>(cfg.cyclotomic_order());
    UnitCharacter twist = eta.product(cfg, mu.unit_part().inverse(cfg));
    AdditiveCharacter psi = AdditiveCharacter::psi_eps(cfg, eps);
    Rational base = Rational(-1) * Rational(cfg.p()).pow(-c_emi - eps);
    CycNumber h1 = gauss_h_oracle(cfg, ctx, twist, psi.twist(base));
    CycNumber h2 =
        gauss_h_oracle(cfg, ctx, twist, psi.twist(base * Rational(cfg.xi())));
    out.verdict = (!h1.is_zero() || !h2.is_zero()) ? Tri::True : Tri::False;
    return out;
  }
  if (std::get_if<EvenWeilRep>(&repr) || std::get_if<OddWeilRep>(&repr)) {
    out.level = M.value;
    out.verdict = Tri::True;
    return out;
  }
  if (std::get_if<SteinbergRep>(&repr)) {
    out.level = M.value + i;
    if (gen == Tri::Unknown && !assume_generic) {
      out.verdict = Tri::Unknown;
      return out;
    }
    out.verdict = Tri::True;
    return out;
  }
  const auto& sc = std::get<SupercuspidalRep>(repr);
  if (sc.defect == 0) {
    out.level = M.value;
    if (gen == Tri::Unknown && !assume_generic) {
      out.verdict = Tri::Unknown;
      return out;
    }
    out.verdict = Tri::True;
    return out;
  }
  // defect 1: nonzero at M when c(Psi)+eps is even, at M+1 when odd
  out.level = i % 2 == 0 ? M.value : M.value + 1;
  if (gen == Tri::Unknown && !assume_generic) {
    out.verdict = Tri::Unknown;
    return out;
  }
  out.verdict = Tri::True;
  return out;
}

Tri ps_whittaker_vector_nonvanishing(const FieldConfig& cfg, const CycContextPtr& ctx,
                                     const MultCharacter& mu, int eps,
                                     const UnitCharacter& eta, PsVectorKind kind,
                                     SquareClass psi_class) {
  int i = square_class_ord(psi_class);
  bool unram_case = mu.conductor() == 0 && eta.conductor() == 0;
  switch (kind) {
    case PsVectorKind::Weyl: {
      if (i == 1) return Tri::Unknown;  // not pinned for ramified Psi at f_w
      if (unram_case) {
        MultCharacter bad =
            psi_class == SquareClass::One
                ? MultCharacter::quadratic_of_class(cfg, SquareClass::Xi)
                      .product(cfg, MultCharacter::abs_power(cfg, Rational(-1, 2)))
                : MultCharacter::abs_power(cfg, Rational(-1, 2));
        return (mu == bad) ? Tri::False : Tri::True;
      }
      return Tri::True;
    }
    case PsVectorKind::One:
      return i == 0 ? Tri::True : Tri::Unknown;
    case PsVectorKind::LowerSquare:
    case PsVectorKind::LowerXi: {
      UnitCharacter twist = eta.product(cfg, mu.unit_part().inverse(cfg));
      int c = twist.conductor();
      AdditiveCharacter psi = AdditiveCharacter::psi_eps(cfg, eps);
      SquareClass unit_of_b =
          square_class_ramified(psi_class)
              ? square_class_mul(psi_class, SquareClass::Pi)
              : psi_class;
      SquareClass harg = kind == PsVectorKind::LowerXi
                             ? square_class_mul(unit_of_b, SquareClass::Xi)
                             : unit_of_b;
      Rational shift = Rational(-1) * Rational(cfg.p()).pow(-c - eps) *
                       square_class_rep(cfg, harg).to_rational();
      CycNumber h = gauss_h_oracle(cfg, ctx, twist, psi.twist(shift));
      return h.is_zero() ? Tri::False : Tri::True;
    }
  }
  throw Error("unreachable");
}

long dim_fixed_ps_oracle(const FieldConfig& cfg, const MultCharacter& mu, int eps,
                         const UnitCharacter& eta, int m, bool use_brute, int L) {
  if (m < 0) throw DomainError("level must be >= 0");
  if (eta.sign_at_minus_one(cfg) != mu.sign_at_minus_one(cfg)) return 0;
  if (m < eta.conductor()) return 0;
  if (L <= 0) L = std::max({m, eta.conductor(), mu.conductor()}) + 1;
  long count = 0;
  for (const SL2Elem& g : coset_reps(cfg, eps, m)) {
    CosetRep rep = classify_coset_rep(cfg, eps, g, m);
    bool ok = use_brute ? hom_condition_oracle(cfg, eps, rep, m, eta, mu, L)
                        : hom_condition(cfg, eps, rep, m, eta, mu);
    if (ok) ++count;
  }
  return count;
}

}  // namespace mp2
