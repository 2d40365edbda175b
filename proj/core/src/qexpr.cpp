#include "mp2/qexpr.hpp"

namespace mp2 {

QExpr QExpr::q_pow(int e, Rational coeff) {
  QExpr x;
  if (!coeff.is_zero()) x.terms_[e] = coeff;
  return x;
}

QExpr QExpr::operator+(const QExpr& o) const {
  QExpr out = *this;
  for (const auto& [e, c] : o.terms_) {
    auto it = out.terms_.find(e);
    if (it == out.terms_.end()) {
      out.terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) out.terms_.erase(it);
    }
  }
  return out;
}

QExpr QExpr::operator-(const QExpr& o) const {
  QExpr neg;
  for (const auto& [e, c] : o.terms_) neg.terms_.emplace(e, -c);
  return *this + neg;
}

QExpr QExpr::operator*(const QExpr& o) const {
  QExpr out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      auto it = out.terms_.find(e1 + e2);
      if (it == out.terms_.end()) {
        out.terms_.emplace(e1 + e2, c1 * c2);
      } else {
        it->second += c1 * c2;
        if (it->second.is_zero()) out.terms_.erase(it);
      }
    }
  return out;
}

Rational QExpr::bind(i64 q) const {
  Rational acc(0);
  for (const auto& [e, c] : terms_) acc += c * Rational(q).pow(e);
  return acc;
}

std::string QExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  // highest power first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rational c = it->second;
    int e = it->first;
    if (first) {
      if (c.sign() < 0) s += "-";
    } else {
      s += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    Rational a = c.sign() < 0 ? -c : c;
    if (e == 0) {
      s += a.to_string();
    } else {
      if (!a.is_one()) s += a.to_string() + "*";
      s += "q^" + std::to_string(e);
    }
  }
  return s;
}

}  // namespace mp2
