#include "chartab/exactnum.hpp"

#include "chartab/error.hpp"

namespace chartab {

CycQ::CycQ(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
}

CycQ CycQ::root_of_unity(long k) {
  switch (((k % 3) + 3) % 3) {
    case 0:
      return CycQ(1);
    case 1:
      return CycQ(0, 1);
    default:
      return CycQ(-1, -1);
  }
}

CycQ CycQ::inverse() const {
  if (is_zero()) throw ZeroDivision("inverse of zero in Q(t)");
  Rational n = norm();
  CycQ c = conj();
  return CycQ(c.a_ / n, c.b_ / n);
}

CycQ& CycQ::operator+=(const CycQ& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

CycQ& CycQ::operator-=(const CycQ& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

CycQ& CycQ::operator*=(const CycQ& o) {
  // (a + bt)(c + dt) = ac - bd + (ad + bc - bd)t
  if (sgn(b_) == 0 && sgn(o.b_) == 0) {
    a_ *= o.a_;
    return *this;
  }
  Rational bd = b_ * o.b_;
  Rational na = a_ * o.a_ - bd;
  Rational nb = a_ * o.b_ + b_ * o.a_ - bd;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

CycQ pow(const CycQ& x, long e) {
  if (e < 0) return pow(x.inverse(), -e);
  CycQ result(1);
  CycQ base = x;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::string CycQ::str() const { return PolQ(*this).str(); }

CycQ CycQ::parse(std::string_view text) {
  PolQ p = PolQ::parse(text);
  if (p.degree() > 0) throw ParseError("expected a constant, got '" + std::string(text) + "'");
  return p.coeff(0);
}

}  // namespace chartab
