#include "mp2/intmath.hpp"

namespace mp2 {

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

i64 pow_i64(i64 base, int exp) {
  if (exp < 0) throw DomainError("pow_i64 with negative exponent");
  i128 acc = 1;
  for (int i = 0; i < exp; ++i) {
    acc *= base;
    if (acc > (i128(1) << 62)) throw OverflowError("integer power overflow");
  }
  return (i64)acc;
}

i64 mod_pow(i64 base, i64 exp, i64 mod) {
  if (mod <= 0) throw DomainError("mod_pow with nonpositive modulus");
  i128 acc = 1;
  i128 b = ((base % mod) + mod) % mod;
  while (exp > 0) {
    if (exp & 1) acc = acc * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return (i64)acc;
}

i64 gcd_i64(i64 a, i64 b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

i64 lcm_i64(i64 a, i64 b) {
  if (a == 0 || b == 0) return 0;
  i128 l = (i128)(a / gcd_i64(a, b)) * b;
  if (l > (i128(1) << 62)) throw OverflowError("lcm overflow");
  return (i64)(l < 0 ? -l : l);
}

i64 mod_inv(i64 a, i64 mod) {
  i64 t = 0, newt = 1;
  i64 r = mod, newr = ((a % mod) + mod) % mod;
  while (newr != 0) {
    i64 q = r / newr;
    i64 tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw DomainError("mod_inv: argument not invertible");
  return ((t % mod) + mod) % mod;
}

int legendre_symbol(i64 a, i64 p) {
  a = ((a % p) + p) % p;
  if (a == 0) return 0;
  i64 e = mod_pow(a, (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

i64 smallest_nonresidue(i64 p) {
  for (i64 a = 2; a < p; ++a)
    if (legendre_symbol(a, p) == -1) return a;
  throw DomainError("no quadratic non-residue found (p not an odd prime?)");
}

i64 primitive_root_all_levels(i64 p) {
  auto factors = factorize(p - 1);
  auto is_proot = [&](i64 g) {
    for (const auto& f : factors)
      if (mod_pow(g, (p - 1) / f.prime, p) == 1) return false;
    return true;
  };
  for (i64 g = 2; g < p; ++g) {
    if (!is_proot(g)) continue;
    // g is primitive mod p; it stays primitive mod p^n iff g^(p-1) != 1 mod p^2.
    i64 p2 = p * p;
    if (mod_pow(g, p - 1, p2) != 1) return g;
    return g + p;  // g+p is then primitive modulo every power
  }
  throw DomainError("no primitive root found");
}

i64 phi_prime_power(i64 p, int n) {
  if (n <= 0) return 1;
  return (p - 1) * pow_i64(p, n - 1);
}

std::vector<PrimePower> factorize(i64 n) {
  std::vector<PrimePower> out;
  for (i64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      PrimePower pp{d, 0, 1};
      while (n % d == 0) {
        n /= d;
        ++pp.exp;
        pp.value *= d;
      }
      out.push_back(pp);
    }
  }
  if (n > 1) out.push_back(PrimePower{n, 1, n});
  return out;
}

}  // namespace mp2
