#include "mp2/residue.hpp"

#include "mp2/intmath.hpp"

namespace mp2 {

ResidueInt::ResidueInt(i64 p, int level, i64 value) : p_(p), level_(level) {
  if (level < 1) throw DomainError("residue level must be >= 1");
  mod_ = pow_i64(p, level);
  value_ = ((value % mod_) + mod_) % mod_;
}

void ResidueInt::check_compatible(const ResidueInt& o) const {
  if (p_ != o.p_ || level_ != o.level_)
    throw DomainError("residue arithmetic across different rings");
}

ResidueInt ResidueInt::operator+(const ResidueInt& o) const {
  check_compatible(o);
  return ResidueInt(p_, level_, (value_ + o.value_) % mod_);
}

ResidueInt ResidueInt::operator-(const ResidueInt& o) const {
  check_compatible(o);
  return ResidueInt(p_, level_, (value_ - o.value_ + mod_) % mod_);
}

ResidueInt ResidueInt::operator*(const ResidueInt& o) const {
  check_compatible(o);
  return ResidueInt(p_, level_, (i64)((i128)value_ * o.value_ % mod_));
}

ResidueInt ResidueInt::inverse() const {
  if (!is_unit()) throw DomainError("not a unit");
  return ResidueInt(p_, level_, mod_inv(value_, mod_));
}

ResidueInt ResidueInt::pow(i64 e) const {
  if (e < 0) return inverse().pow(-e);
  return ResidueInt(p_, level_, mod_pow(value_, e, mod_));
}

ResidueInt ResidueInt::reduced(int new_level) const {
  if (new_level > level_) throw DomainError("cannot raise residue precision");
  return ResidueInt(p_, new_level, value_ % pow_i64(p_, new_level));
}

int legendre(const ResidueInt& u) {
  if (!u.is_unit()) throw DomainError("not a unit");
  return legendre_symbol(u.value(), u.p());
}

}  // namespace mp2
