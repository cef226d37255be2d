#include "cyclident/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace cyclident {

void DensePolynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

DensePolynomial DensePolynomial::monomial(const Rational& c, std::size_t deg) {
  if (c.is_zero()) return {};
  std::vector<Rational> v(deg + 1, Rational(0));
  v[deg] = c;
  return DensePolynomial(std::move(v));
}

DensePolynomial DensePolynomial::power_minus_one(unsigned n) {
  std::vector<Rational> v(n + 1, Rational(0));
  v[0] = Rational(-1);
  v[n] = Rational(1);
  return DensePolynomial(std::move(v));
}

const Rational& DensePolynomial::leading() const {
  if (c_.empty()) throw std::logic_error("leading coefficient of zero");
  return c_.back();
}

Rational DensePolynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc = acc * x + c_[i];
  }
  return acc;
}

DensePolynomial DensePolynomial::monic() const {
  if (is_zero()) return {};
  return leading().inverse() * *this;
}

DensePolynomial DensePolynomial::operator-() const {
  DensePolynomial r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

DensePolynomial& DensePolynomial::operator+=(const DensePolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

DensePolynomial& DensePolynomial::operator-=(const DensePolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

DensePolynomial operator*(const DensePolynomial& a, const DensePolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      out[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return DensePolynomial(std::move(out));
}

DensePolynomial operator*(const Rational& s, DensePolynomial p) {
  if (s.is_zero()) return {};
  for (auto& c : p.c_) c *= s;
  return p;
}

std::string DensePolynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    Rational a = c_[i];
    if (first) {
      if (a.sign() < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
      a = a.abs();
    }
    bool unit = (a == Rational(1));
    if (i == 0 || !unit) os << a.str();
    if (i > 0) {
      if (!unit) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<DensePolynomial, DensePolynomial> poly_divmod(
    const DensePolynomial& num, const DensePolynomial& den) {
  if (den.is_zero()) throw DivisionByZero();
  DensePolynomial q;
  DensePolynomial r = num;
  const long dd = den.degree();
  const Rational lead_inv = den.leading().inverse();
  while (!r.is_zero() && r.degree() >= dd) {
    const long e = r.degree() - dd;
    Rational t = r.leading() * lead_inv;
    DensePolynomial m = DensePolynomial::monomial(t, static_cast<std::size_t>(e));
    q += m;
    r -= m * den;
  }
  return {std::move(q), std::move(r)};
}

PolyExtGcd poly_ext_gcd(const DensePolynomial& a, const DensePolynomial& b) {
  if (a.is_zero() && b.is_zero()) {
    throw std::invalid_argument("gcd(0, 0) is undefined");
  }
  DensePolynomial r0 = a, r1 = b;
  DensePolynomial s0 = DensePolynomial::constant(1), s1;
  DensePolynomial t0, t1 = DensePolynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r2] = poly_divmod(r0, r1);
    DensePolynomial s2 = s0 - q * s1;
    DensePolynomial t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const Rational scale = r0.leading().inverse();
  return {scale * r0, scale * s0, scale * t0};
}

}  // namespace cyclident
