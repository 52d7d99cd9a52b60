#include <algorithm>
#include <cctype>

#include "chartab/error.hpp"
#include "chartab/exactnum.hpp"

namespace chartab {

namespace {

const CycQ kZero{};

std::string rational_atom(const Rational& r) {
  // r >= 0 here; fractions are parenthesized so they bind as one factor.
  if (r.get_den() == 1) return r.get_str();
  return "(" + r.get_str() + ")";
}

std::string monomial_text(int degree) {
  if (degree == 0) return "";
  if (degree == 1) return "q";
  return "q^" + std::to_string(degree);
}

struct Term {
  bool negative = false;
  std::string body;
};

Term format_term(const CycQ& c, int degree) {
  const std::string mono = monomial_text(degree);
  Term term;
  if (c.is_rational() || sgn(c.a()) == 0) {
    const bool pure_t = !c.is_rational();
    const Rational& r = pure_t ? c.b() : c.a();
    term.negative = sgn(r) < 0;
    Rational mag = abs(r);
    std::vector<std::string> factors;
    bool unit_factor = (mag == 1) && (degree > 0 || pure_t);
    if (!unit_factor) factors.push_back(rational_atom(mag));
    if (!mono.empty()) factors.push_back(mono);
    if (pure_t) factors.emplace_back("t");
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) term.body += "*";
      term.body += factors[i];
    }
    return term;
  }
  std::string inner = c.a().get_str();
  Rational mb = abs(c.b());
  inner += sgn(c.b()) < 0 ? "-" : "+";
  inner += (mb == 1) ? std::string("t") : mb.get_str() + "*t";
  term.body = "(" + inner + ")";
  if (!mono.empty()) term.body += "*" + mono;
  return term;
}

// Recursive-descent parser for expressions in q and t with + - * / ^ and
// parentheses. Division is only allowed by nonzero constants.
class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  PolQ parse_all() {
    PolQ p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  PolQ expr() {
    PolQ acc;
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    PolQ t = term();
    acc = negate ? -t : t;
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  PolQ term() {
    PolQ acc = power();
    while (true) {
      if (accept('*')) {
        acc = acc * power();
      } else if (accept('/')) {
        PolQ d = power();
        if (d.degree() > 0) fail("division by a non-constant");
        if (d.is_zero()) throw ZeroDivision("division by zero in '" + std::string(s_) + "'");
        acc *= d.coeff(0).inverse();
      } else {
        break;
      }
    }
    return acc;
  }

  PolQ power() {
    PolQ base = atom();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
      base = pow(base, e);
    }
    return base;
  }

  PolQ atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char ch = s_[pos_];
    if (ch == '(') {
      ++pos_;
      PolQ inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (ch == 'q') {
      ++pos_;
      return PolQ::q();
    }
    if (ch == 't') {
      ++pos_;
      return PolQ(CycQ::theta());
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Rational r(std::string(s_.substr(start, pos_ - start)));
      return PolQ(CycQ(r));
    }
    fail("unexpected character");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

PolQ::PolQ(const CycQ& c) {
  if (!c.is_zero()) c_.push_back(c);
}

PolQ::PolQ(std::vector<CycQ> coefficients) : c_(std::move(coefficients)) { trim(); }

PolQ PolQ::monomial(const CycQ& c, int degree) {
  PolQ p;
  if (c.is_zero()) return p;
  p.c_.assign(static_cast<std::size_t>(degree) + 1, CycQ());
  p.c_.back() = c;
  return p;
}

void PolQ::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool PolQ::is_real() const {
  return std::all_of(c_.begin(), c_.end(), [](const CycQ& c) { return c.is_rational(); });
}

const CycQ& PolQ::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<std::size_t>(k)];
}

PolQ PolQ::conj() const {
  PolQ p;
  p.c_.reserve(c_.size());
  for (const auto& c : c_) p.c_.push_back(c.conj());
  return p;
}

PolQ PolQ::monic() const {
  if (is_zero() || is_monic()) return *this;
  PolQ p = *this;
  p *= leading().inverse();
  return p;
}

CycQ PolQ::eval(const Rational& q0) const {
  CycQ acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= CycQ(q0);
    acc += *it;
  }
  return acc;
}

PolQ PolQ::operator-() const {
  PolQ p;
  p.c_.reserve(c_.size());
  for (const auto& c : c_) p.c_.push_back(-c);
  return p;
}

PolQ& PolQ::operator+=(const PolQ& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

PolQ& PolQ::operator-=(const PolQ& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

PolQ operator*(const PolQ& x, const PolQ& y) {
  PolQ p;
  if (x.is_zero() || y.is_zero()) return p;
  p.c_.assign(x.c_.size() + y.c_.size() - 1, CycQ());
  for (std::size_t i = 0; i < x.c_.size(); ++i) {
    if (x.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.c_.size(); ++j) {
      if (y.c_[j].is_zero()) continue;
      p.c_[i + j] += x.c_[i] * y.c_[j];
    }
  }
  p.trim();
  return p;
}

PolQ& PolQ::operator*=(const PolQ& o) {
  *this = *this * o;
  return *this;
}

PolQ& PolQ::operator*=(const CycQ& c) {
  if (c.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

std::string PolQ::str() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const CycQ& c = coeff(d);
    if (c.is_zero()) continue;
    Term t = format_term(c, d);
    if (first) {
      out += t.negative ? "-" + t.body : t.body;
    } else {
      out += t.negative ? " - " : " + ";
      out += t.body;
    }
    first = false;
  }
  return out;
}

PolQ PolQ::parse(std::string_view text) { return Parser(text).parse_all(); }

std::pair<PolQ, PolQ> divmod(const PolQ& a, const PolQ& b) {
  if (b.is_zero()) throw ZeroDivision("polynomial division by zero");
  if (a.degree() < b.degree()) return {PolQ(), a};
  const int db = b.degree();
  const CycQ lead_inv = b.leading().inverse();
  std::vector<CycQ> rem = a.coefficients();
  std::vector<CycQ> quot(static_cast<std::size_t>(a.degree() - db) + 1);
  for (int k = a.degree() - db; k >= 0; --k) {
    CycQ& top = rem[static_cast<std::size_t>(k + db)];
    if (top.is_zero()) continue;
    CycQ f = top * lead_inv;
    for (int j = 0; j <= db; ++j) {
      const CycQ& bj = b.coeff(j);
      if (!bj.is_zero()) rem[static_cast<std::size_t>(k + j)] -= f * bj;
    }
    quot[static_cast<std::size_t>(k)] = std::move(f);
  }
  return {PolQ(std::move(quot)), PolQ(std::move(rem))};
}

PolQ gcd(PolQ a, PolQ b) {
  while (!b.is_zero()) {
    PolQ r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

PolQ pow(const PolQ& x, int e) {
  if (e < 0) throw DomainError("negative exponent for a polynomial");
  PolQ result(1);
  PolQ base = x;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

}  // namespace chartab
