#ifndef CYCLIDENT_RATIONAL_HPP
#define CYCLIDENT_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace cyclident {

using Integer = mpz_class;

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

/**
 * Exact arbitrary-precision rational.
 *
 * Always stored canonically: gcd(|num|, den) = 1, den > 0, zero is 0/1.
 * Canonical storage makes equality a plain field-by-field comparison.
 * Division by zero throws DivisionByZero instead of trapping in GMP.
 */
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}                // NOLINT: implicit for literals
  Rational(long n) : v_(n) {}               // NOLINT
  Rational(long long n) : v_(static_cast<long>(n)) {}  // NOLINT
  Rational(const Integer& n) : v_(n) {}     // NOLINT

  Rational(const Integer& num, const Integer& den) : v_(num, den) {
    if (den == 0) throw DivisionByZero();
    v_.canonicalize();
  }
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

  // Accepts "p", "-p/q"; canonicalizes.
  static Rational from_string(const std::string& s);

  Integer num() const { return v_.get_num(); }
  Integer den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  // "p" when den = 1, else "p/q".
  std::string str() const { return v_.get_str(); }

  Rational operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.v_ < b.v_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.v_ <= b.v_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return b <= a;
  }

  Rational inverse() const {
    if (is_zero()) throw DivisionByZero();
    return Rational(den(), num());
  }

  // x^e for integer e; negative e requires x != 0.
  Rational pow(long e) const;

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  const mpq_class& raw() const { return v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class v_;
};

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);
Integer int_pow(const Integer& base, unsigned long e);

}  // namespace cyclident

#endif
