#include "mp2/cyclotomic.hpp"

#include <algorithm>

#include "mp2/intmath.hpp"

namespace mp2 {

CycContext::CycContext(i64 M) : M_(M) {
  if (M < 1) throw DomainError("cyclotomic order must be positive");
  for (const auto& pp : factorize(M)) {
    Local loc;
    loc.prime = pp.prime;
    loc.exp = pp.exp;
    loc.value = pp.value;
    loc.phi = phi_prime_power(pp.prime, pp.exp);
    loc.shift = M / pp.value;
    loc.crt_coeff = mod_inv(loc.shift % loc.value, loc.value);
    locals_.push_back(loc);
  }
}

bool CycContext::is_canonical(i64 k) const {
  for (const auto& loc : locals_) {
    i64 e = (i64)((i128)k * loc.crt_coeff % loc.value);
    if (e >= loc.phi) return false;
  }
  return true;
}

void CycContext::reduce_exponent(i64 k, std::vector<std::pair<i64, int>>& out) const {
  k %= M_;
  if (k < 0) k += M_;
  for (size_t idx = 0; idx < locals_.size(); ++idx) {
    const auto& loc = locals_[idx];
    i64 e = (i64)((i128)k * loc.crt_coeff % loc.value);
    if (e < loc.phi) continue;
    // zeta^e = -(zeta^r + zeta^{r+l^{a-1}} + ... ), r = e - phi.
    i64 step = loc.value / loc.prime;
    i64 r = e - loc.phi;
    for (i64 s = 0; s <= loc.prime - 2; ++s) {
      i64 t = r + s * step;
      i64 k2 = k + (i64)((i128)(t - e + loc.value) % loc.value * loc.shift % M_);
      k2 %= M_;
      std::vector<std::pair<i64, int>> sub;
      reduce_exponent(k2, sub);
      for (auto& [kk, sg] : sub) out.emplace_back(kk, -sg);
    }
    return;
  }
  out.emplace_back(k, 1);
}

CycNumber CycNumber::from_rational(CycContextPtr ctx, const Rational& r) {
  CycNumber x(std::move(ctx));
  x.add_term(0, r);
  return x;
}

CycNumber CycNumber::root_of_unity(CycContextPtr ctx, i64 order, i64 j) {
  if (order <= 0 || ctx->M() % order != 0)
    throw DomainError("root order does not divide the cyclotomic order");
  i64 stride = ctx->M() / order;
  j %= order;
  if (j < 0) j += order;
  CycNumber x(std::move(ctx));
  x.add_term(stride * j, Rational(1));
  return x;
}

void CycNumber::add_term(i64 raw_exponent, const Rational& coeff) {
  if (!ctx_) throw Error("cyclotomic number without context");
  if (coeff.is_zero()) return;
  if (ctx_->is_canonical(((raw_exponent % ctx_->M()) + ctx_->M()) % ctx_->M())) {
    i64 k = ((raw_exponent % ctx_->M()) + ctx_->M()) % ctx_->M();
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, coeff);
    } else {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
    return;
  }
  std::vector<std::pair<i64, int>> expanded;
  ctx_->reduce_exponent(raw_exponent, expanded);
  for (const auto& [k, sign] : expanded) {
    auto it = terms_.find(k);
    Rational c = sign == 1 ? coeff : -coeff;
    if (it == terms_.end()) {
      terms_.emplace(k, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
}

void CycNumber::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
}

bool CycNumber::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

std::optional<Rational> CycNumber::try_rational() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first == 0) return terms_.begin()->second;
  return std::nullopt;
}

Rational CycNumber::as_rational() const {
  auto r = try_rational();
  if (!r) throw DomainError("cyclotomic number is not rational");
  return *r;
}

CycNumber CycNumber::operator-() const {
  CycNumber out(ctx_);
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

CycNumber CycNumber::operator+(const CycNumber& o) const {
  CycNumber out = *this;
  for (const auto& [k, c] : o.terms_) {
    auto it = out.terms_.find(k);
    if (it == out.terms_.end()) {
      out.terms_.emplace(k, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) out.terms_.erase(it);
    }
  }
  return out;
}

CycNumber CycNumber::operator-(const CycNumber& o) const { return *this + (-o); }

CycNumber CycNumber::operator*(const CycNumber& o) const {
  if (!ctx_ || !o.ctx_) throw Error("cyclotomic number without context");
  if (ctx_->M() != o.ctx_->M())
    throw DomainError("cyclotomic arithmetic across different fields");
  CycNumber out(ctx_);
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_) out.add_term(k1 + k2, c1 * c2);
  return out;
}

CycNumber CycNumber::operator*(const Rational& r) const {
  if (r.is_zero()) return CycNumber(ctx_);
  CycNumber out(ctx_);
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, c * r);
  return out;
}

CycNumber CycNumber::galois(i64 t) const {
  t %= ctx_->M();
  if (t < 0) t += ctx_->M();
  if (gcd_i64(t, ctx_->M()) != 1)
    throw DomainError("Galois exponent not coprime to the cyclotomic order");
  CycNumber out(ctx_);
  for (const auto& [k, c] : terms_) out.add_term((i64)((i128)k * t % ctx_->M()), c);
  return out;
}

CycNumber CycNumber::conj() const {
  CycNumber out(ctx_);
  for (const auto& [k, c] : terms_) out.add_term(k == 0 ? 0 : ctx_->M() - k, c);
  return out;
}

Rational CycNumber::mag_sq() const {
  CycNumber m = *this * conj();
  auto r = m.try_rational();
  if (!r) throw DomainError("mag_sq is not rational for this element");
  return *r;
}

CycNumber CycNumber::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  if (auto r = try_rational()) return from_rational(ctx_, r->inverse());
  CycNumber c = conj();
  CycNumber m = *this * c;
  if (auto r = m.try_rational()) return c * r->inverse();

  // Subfield norm fallback: multiply the remaining conjugates over the
  // smallest Q(zeta_d) containing the element.
  i64 M = ctx_->M();
  i64 g = M;
  for (const auto& [k, cc] : terms_) g = gcd_i64(g, k);
  i64 d = g == 0 ? 1 : M / g;
  if (d > 4096) throw ResourceLimitError("inverse: subfield too large for norm fallback");
  CycNumber acc = from_rational(ctx_, Rational(1));
  for (i64 t = 2; t <= d; ++t) {
    if (gcd_i64(t, d) != 1) continue;
    // lift t to an automorphism exponent coprime to M fixing the complement
    i64 tt = t;
    while (gcd_i64(tt, M) != 1) tt += d;
    acc *= galois(tt);
    if (acc.support_size() > 20000)
      throw ResourceLimitError("inverse: norm fallback support blow-up");
  }
  CycNumber norm = *this * acc;
  auto nr = norm.try_rational();
  if (!nr || nr->is_zero()) throw Error("norm fallback failed to rationalize");
  return acc * nr->inverse();
}

CycNumber CycNumber::operator/(const CycNumber& o) const { return *this * o.inverse(); }

CycNumber CycNumber::pow(i64 e) const {
  if (e < 0) return inverse().pow(-e);
  CycNumber acc = from_rational(ctx_, Rational(1));
  CycNumber base = *this;
  while (e) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return acc;
}

std::string CycNumber::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) s += " + ";
    first = false;
    if (k == 0) {
      s += c.to_string();
      continue;
    }
    // print each root at its minimal order
    i64 g = gcd_i64(k, ctx_->M());
    std::string root = "zeta_" + std::to_string(ctx_->M() / g) + "^" +
                       std::to_string(k / g);
    s += c.is_one() ? root : c.to_string() + "*" + root;
  }
  return s;
}

}  // namespace mp2
