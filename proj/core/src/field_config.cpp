#include "mp2/field_config.hpp"

#include "mp2/intmath.hpp"

namespace mp2 {

FieldConfig FieldConfig::make(i64 p, int N) {
  return make_with_xi(p, N, smallest_nonresidue(p));
}

FieldConfig FieldConfig::make_with_xi(i64 p, int N, i64 xi) {
  if (!is_prime(p) || p < 3) throw DomainError("p must be an odd prime");
  if (N < 3) throw DomainError("working precision N must be >= 3");
  if (legendre_symbol(xi, p) != -1)
    throw DomainError("xi must be a non-square unit mod p");
  FieldConfig cfg;
  cfg.p_ = p;
  cfg.N_ = N;
  cfg.xi_ = xi % p;
  cfg.init();
  return cfg;
}

void FieldConfig::init() {
  // B: p-power capacity of the cyclotomic field. Truncated Weil integrals
  // need zeta_{p^k} for k a few steps past the stabilization radius; 12
  // covers every grid this library exposes while M stays within int64.
  B_ = N_ > 12 ? N_ : 12;
  i64 m = lcm_i64(8, p_ - 1);
  i128 M = (i128)m;
  for (int i = 0; i < B_; ++i) {
    M *= p_;
    if (M > (i128(1) << 62)) throw OverflowError("cyclotomic order overflow");
  }
  M_ = (i64)M;
  g_ = primitive_root_all_levels(p_);
  leg_minus1_ = legendre_symbol(-1, p_);

  dlogs_ = std::make_shared<std::vector<std::vector<int>>>();
  dlogs_->resize(N_ + 1);
  for (int n = 1; n <= N_; ++n) {
    i64 pn = pow_i64(p_, n);
    i64 order = phi_prime_power(p_, n);
    auto& tab = (*dlogs_)[n];
    tab.assign(pn, -1);
    i64 x = 1 % pn;
    for (i64 j = 0; j < order; ++j) {
      tab[x] = (int)j;
      x = (i64)((i128)x * g_ % pn);
    }
    if (x != 1 % pn) throw Error("primitive root has wrong order");
  }
}

i64 FieldConfig::p_pow(int k) const {
  if (k < 0 || k > B_) throw DomainError("p_pow exponent out of range");
  return pow_i64(p_, k);
}

const std::vector<int>& FieldConfig::dlog_table(int n) const {
  if (n < 1 || n > N_) throw DomainError("dlog level out of range");
  return (*dlogs_)[n];
}

}  // namespace mp2
