#pragma once

#include "mp2/common.hpp"

namespace mp2 {

/// An element of Z/p^K, the finite model of O/p^K.
class ResidueInt {
 public:
  ResidueInt() = default;
  ResidueInt(i64 p, int level, i64 value);

  i64 p() const { return p_; }
  int level() const { return level_; }
  i64 value() const { return value_; }
  i64 modulus() const { return mod_; }

  bool is_unit() const { return value_ % p_ != 0; }

  ResidueInt operator+(const ResidueInt& o) const;
  ResidueInt operator-(const ResidueInt& o) const;
  ResidueInt operator*(const ResidueInt& o) const;
  ResidueInt inverse() const;
  ResidueInt pow(i64 e) const;
  ResidueInt reduced(int new_level) const;

  bool operator==(const ResidueInt& o) const = default;

 private:
  void check_compatible(const ResidueInt& o) const;
  i64 p_ = 0;
  int level_ = 0;
  i64 mod_ = 0;
  i64 value_ = 0;
};

/// Legendre symbol of a unit residue; errors on non-units.
int legendre(const ResidueInt& u);

}  // namespace mp2
