#pragma once

#include <vector>

#include "mp2/common.hpp"

namespace mp2 {

bool is_prime(i64 n);
i64 pow_i64(i64 base, int exp);  // checked
i64 mod_pow(i64 base, i64 exp, i64 mod);
i64 mod_inv(i64 a, i64 mod);  // errors when gcd(a, mod) != 1
i64 gcd_i64(i64 a, i64 b);
i64 lcm_i64(i64 a, i64 b);

/// Legendre symbol of a modulo the odd prime p, in {-1, 0, +1}.
int legendre_symbol(i64 a, i64 p);

/// Smallest positive quadratic non-residue modulo the odd prime p.
i64 smallest_nonresidue(i64 p);

/// Smallest primitive root modulo p that stays primitive modulo every p^n
/// (adjusted by +p in the rare Wieferich-style case).
i64 primitive_root_all_levels(i64 p);

/// Euler phi of p^n for prime p.
i64 phi_prime_power(i64 p, int n);

struct PrimePower {
  i64 prime;
  int exp;
  i64 value;  // prime^exp
};

std::vector<PrimePower> factorize(i64 n);

}  // namespace mp2
