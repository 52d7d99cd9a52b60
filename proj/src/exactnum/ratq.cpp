#include "chartab/error.hpp"
#include "chartab/exactnum.hpp"

namespace chartab {

RatQ rat_normalize(const PolQ& num, const PolQ& den) {
  if (den.is_zero()) throw ZeroDivision("rational function with zero denominator");
  return RatQ(num, den);
}

RatQ::RatQ(PolQ num, PolQ den) {
  if (den.is_zero()) throw ZeroDivision("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = PolQ(1);
    return;
  }
  if (den.is_constant()) {
    num *= den.coeff(0).inverse();
    num_ = std::move(num);
    den_ = PolQ(1);
    return;
  }
  PolQ g = gcd(num, den);
  if (!g.is_one()) {
    num = divmod(num, g).first;
    den = divmod(den, g).first;
  }
  CycQ lead_inv = den.leading().inverse();
  num *= lead_inv;
  den *= lead_inv;
  num_ = std::move(num);
  den_ = std::move(den);
}

const PolQ& RatQ::to_polynomial() const {
  if (!is_polynomial()) throw Inconsistent("expected a polynomial, got " + str());
  return num_;
}

RatQ RatQ::conj() const { return RatQ(num_.conj(), den_.conj(), Raw{}); }

RatQ RatQ::inverse() const {
  if (is_zero()) throw ZeroDivision("inverse of the zero rational function");
  return RatQ(den_, num_);
}

CycQ RatQ::eval(const Rational& q0) const {
  CycQ d = den_.eval(q0);
  if (d.is_zero()) throw ZeroDivision("denominator vanishes at q = " + q0.get_str());
  return num_.eval(q0) / d;
}

RatQ RatQ::operator-() const { return RatQ(-num_, den_, Raw{}); }

RatQ& RatQ::operator+=(const RatQ& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    *this = RatQ(num_ + o.num_, den_);
    return *this;
  }
  *this = RatQ(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return *this;
}

RatQ& RatQ::operator-=(const RatQ& o) { return *this += -o; }

RatQ& RatQ::operator*=(const RatQ& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RatQ();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  // Cross-cancel first to keep intermediate degrees small.
  PolQ g1 = gcd(num_, o.den_);
  PolQ g2 = gcd(o.num_, den_);
  PolQ n1 = g1.is_one() ? num_ : divmod(num_, g1).first;
  PolQ d2 = g1.is_one() ? o.den_ : divmod(o.den_, g1).first;
  PolQ n2 = g2.is_one() ? o.num_ : divmod(o.num_, g2).first;
  PolQ d1 = g2.is_one() ? den_ : divmod(den_, g2).first;
  PolQ num = n1 * n2;
  PolQ den = d1 * d2;
  CycQ lead_inv = den.leading().inverse();
  num *= lead_inv;
  den *= lead_inv;
  num_ = std::move(num);
  den_ = std::move(den);
  return *this;
}

std::string RatQ::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace chartab
