#pragma once

// Exact arithmetic in Q(t), t a primitive cube root of unity, and in the
// polynomial ring / rational function field over it in one indeterminate q.
//
// Every value has a canonical representation, so equality is structural.

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chartab {

using Rational = mpq_class;

/// a + b*t with t^2 = -1 - t.
class CycQ {
 public:
  CycQ() = default;
  CycQ(long a) : a_(a), b_(0) {}  // NOLINT(google-explicit-constructor)
  CycQ(Rational a, Rational b = 0);

  static CycQ theta() { return CycQ(0, 1); }
  /// t^k for any integer k.
  static CycQ root_of_unity(long k);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }
  bool is_one() const { return a_ == 1 && sgn(b_) == 0; }

  /// Complex conjugation t -> t^2.
  CycQ conj() const { return CycQ(a_ - b_, -b_); }
  /// a^2 - ab + b^2, the field norm down to Q.
  Rational norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }
  CycQ inverse() const;

  CycQ operator-() const { return CycQ(-a_, -b_); }
  CycQ& operator+=(const CycQ& o);
  CycQ& operator-=(const CycQ& o);
  CycQ& operator*=(const CycQ& o);
  CycQ& operator/=(const CycQ& o) { return *this *= o.inverse(); }

  friend CycQ operator+(CycQ x, const CycQ& y) { return x += y; }
  friend CycQ operator-(CycQ x, const CycQ& y) { return x -= y; }
  friend CycQ operator*(CycQ x, const CycQ& y) { return x *= y; }
  friend CycQ operator/(CycQ x, const CycQ& y) { return x /= y; }
  friend bool operator==(const CycQ& x, const CycQ& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend bool operator!=(const CycQ& x, const CycQ& y) { return !(x == y); }

  std::string str() const;
  static CycQ parse(std::string_view text);

 private:
  Rational a_{0};
  Rational b_{0};
};

CycQ pow(const CycQ& x, long e);

/// Polynomial in q over CycQ. coefficients()[k] multiplies q^k; the leading
/// coefficient is nonzero and the zero polynomial has no coefficients.
class PolQ {
 public:
  static constexpr int kZeroDegree = -1;

  PolQ() = default;
  PolQ(long c) : PolQ(CycQ(c)) {}  // NOLINT(google-explicit-constructor)
  PolQ(const CycQ& c);             // NOLINT(google-explicit-constructor)
  explicit PolQ(std::vector<CycQ> coefficients);

  static PolQ q() { return monomial(1, 1); }
  static PolQ monomial(const CycQ& c, int degree);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  /// True when every coefficient is rational (fixed by conj).
  bool is_real() const;
  const CycQ& coeff(int k) const;
  const CycQ& leading() const { return coeff(degree()); }
  const std::vector<CycQ>& coefficients() const { return c_; }

  PolQ conj() const;
  PolQ monic() const;
  /// Substitute q0 for q.
  CycQ eval(const Rational& q0) const;

  PolQ operator-() const;
  PolQ& operator+=(const PolQ& o);
  PolQ& operator-=(const PolQ& o);
  PolQ& operator*=(const PolQ& o);
  PolQ& operator*=(const CycQ& c);

  friend PolQ operator+(PolQ x, const PolQ& y) { return x += y; }
  friend PolQ operator-(PolQ x, const PolQ& y) { return x -= y; }
  friend PolQ operator*(const PolQ& x, const PolQ& y);
  friend PolQ operator*(PolQ x, const CycQ& c) { return x *= c; }
  friend bool operator==(const PolQ& x, const PolQ& y) { return x.c_ == y.c_; }
  friend bool operator!=(const PolQ& x, const PolQ& y) { return !(x == y); }

  /// Canonical text form, e.g. `q^4 - q^3`, `q^3*t`, `(1/2)*q^2`.
  std::string str() const;
  static PolQ parse(std::string_view text);

 private:
  void trim();
  std::vector<CycQ> c_;
};

/// Quotient and remainder of a by b (b nonzero).
std::pair<PolQ, PolQ> divmod(const PolQ& a, const PolQ& b);
/// Monic gcd; gcd(0, 0) = 0.
PolQ gcd(PolQ a, PolQ b);
PolQ pow(const PolQ& x, int e);

/// Reduced fraction num/den: gcd(num, den) = 1 and den monic.
class RatQ {
 public:
  RatQ() : den_(1) {}
  RatQ(long c) : num_(c), den_(1) {}          // NOLINT(google-explicit-constructor)
  RatQ(const CycQ& c) : num_(c), den_(1) {}   // NOLINT(google-explicit-constructor)
  RatQ(PolQ p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatQ(PolQ num, PolQ den);

  const PolQ& num() const { return num_; }
  const PolQ& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  /// The numerator when the denominator is 1; Inconsistent otherwise.
  const PolQ& to_polynomial() const;

  RatQ conj() const;
  RatQ inverse() const;
  /// Substitute q0 for q; ZeroDivision if the denominator vanishes there.
  CycQ eval(const Rational& q0) const;

  RatQ operator-() const;
  RatQ& operator+=(const RatQ& o);
  RatQ& operator-=(const RatQ& o);
  RatQ& operator*=(const RatQ& o);
  RatQ& operator/=(const RatQ& o) { return *this *= o.inverse(); }

  friend RatQ operator+(RatQ x, const RatQ& y) { return x += y; }
  friend RatQ operator-(RatQ x, const RatQ& y) { return x -= y; }
  friend RatQ operator*(RatQ x, const RatQ& y) { return x *= y; }
  friend RatQ operator/(RatQ x, const RatQ& y) { return x /= y; }
  friend bool operator==(const RatQ& x, const RatQ& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend bool operator!=(const RatQ& x, const RatQ& y) { return !(x == y); }

  std::string str() const;

 private:
  struct Raw {};
  RatQ(PolQ num, PolQ den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
  PolQ num_;
  PolQ den_;
};

/// Reduce num/den to canonical form. ZeroDivision when den is zero.
RatQ rat_normalize(const PolQ& num, const PolQ& den);

}  // namespace chartab
