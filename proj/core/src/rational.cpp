#include "mp2/rational.hpp"

#include <ostream>

#include "mp2/intmath.hpp"

namespace mp2 {

namespace {

const i128 kLimit = (i128(1) << 100);  // headroom below the true 2^127 bound

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

i128 checked_mul(i128 a, i128 b) {
  if (a == 0 || b == 0) return 0;
  if (abs128(a) > kLimit / abs128(b))
    throw OverflowError("rational arithmetic overflow");
  return a * b;
}

i128 checked_add(i128 a, i128 b) {
  if ((b > 0 && a > kLimit - b) || (b < 0 && a < -kLimit - b))
    throw OverflowError("rational arithmetic overflow");
  return a + b;
}

}  // namespace

std::string i128_to_string(i128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? (unsigned __int128)(-v) : (unsigned __int128)v;
  std::string s;
  while (u) {
    s.push_back(char('0' + int(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  return std::string(s.rbegin(), s.rend());
}

Rational::Rational(i64 n, i64 d) : num_(n), den_(d) {
  if (d == 0) throw DomainError("rational with zero denominator");
  normalize();
}

Rational Rational::from_i128(i128 n, i128 d) {
  if (d == 0) throw DomainError("rational with zero denominator");
  Rational r;
  r.num_ = n;
  r.den_ = d;
  r.normalize();
  return r;
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  i128 g = gcd128(num_, den_);
  num_ /= g;
  den_ /= g;
}

Rational Rational::operator-() const { return from_i128(-num_, den_); }

Rational& Rational::operator+=(const Rational& o) {
  i128 g = gcd128(den_, o.den_);
  i128 da = den_ / g;
  i128 db = o.den_ / g;
  i128 n = checked_add(checked_mul(num_, db), checked_mul(o.num_, da));
  i128 d = checked_mul(checked_mul(da, g), db);
  num_ = n;
  den_ = d;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  i128 g1 = gcd128(num_, o.den_);
  i128 g2 = gcd128(o.num_, den_);
  num_ = checked_mul(num_ / g1, o.num_ / g2);
  den_ = checked_mul(den_ / g2, o.den_ / g1);
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw DomainError("division by zero");
  return *this *= o.inverse();
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  Rational d = *this - o;
  if (d.num_ < 0) return std::strong_ordering::less;
  if (d.num_ > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational Rational::inverse() const {
  if (num_ == 0) throw DomainError("inverse of zero");
  return from_i128(den_, num_);
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  Rational base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? -(unsigned long)e : (unsigned long)e;
  Rational acc(1);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

int Rational::valuation(i64 p) const {
  if (num_ == 0) throw DomainError("valuation of zero");
  int v = 0;
  i128 n = abs128(num_);
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  i128 d = den_;
  while (d % p == 0) {
    d /= p;
    --v;
  }
  return v;
}

int Rational::split_p_part(i64 p, Rational& unit) const {
  int v = valuation(p);
  unit = *this / Rational(p).pow(v);
  return v;
}

std::string Rational::to_string() const {
  std::string s = i128_to_string(num_);
  if (den_ != 1) {
    s += "/";
    s += i128_to_string(den_);
  }
  return s;
}

Rational Rational::parse(const std::string& s) {
  auto slash = s.find('/');
  auto to128 = [](const std::string& t) -> i128 {
    if (t.empty()) throw DomainError("bad rational literal");
    i128 v = 0;
    bool neg = false;
    size_t i = 0;
    if (t[0] == '-' || t[0] == '+') {
      neg = t[0] == '-';
      i = 1;
    }
    if (i == t.size()) throw DomainError("bad rational literal");
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') throw DomainError("bad rational literal");
      v = v * 10 + (t[i] - '0');
      if (v > (i128(1) << 100)) throw OverflowError("rational literal too large");
    }
    return neg ? -v : v;
  };
  if (slash == std::string::npos) return from_i128(to128(s), 1);
  return from_i128(to128(s.substr(0, slash)), to128(s.substr(slash + 1)));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace mp2
