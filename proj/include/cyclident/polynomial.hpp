#ifndef CYCLIDENT_POLYNOMIAL_HPP
#define CYCLIDENT_POLYNOMIAL_HPP

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "cyclident/rational.hpp"

namespace cyclident {

/**
 * Dense univariate polynomial over Q, coefficients in ascending degree
 * order with trailing zeros trimmed. The zero polynomial stores nothing
 * and has degree -1.
 */
class DensePolynomial {
 public:
  DensePolynomial() = default;
  explicit DensePolynomial(std::vector<Rational> ascending)
      : c_(std::move(ascending)) {
    trim();
  }
  DensePolynomial(std::initializer_list<Rational> ascending)
      : c_(ascending) {
    trim();
  }

  static DensePolynomial constant(const Rational& c) {
    return DensePolynomial({c});
  }
  static DensePolynomial monomial(const Rational& c, std::size_t deg);
  // x^n - 1
  static DensePolynomial power_minus_one(unsigned n);

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial
  long degree() const { return static_cast<long>(c_.size()) - 1; }

  Rational coeff(std::size_t j) const {
    return j < c_.size() ? c_[j] : Rational(0);
  }
  const std::vector<Rational>& coeffs() const { return c_; }

  const Rational& leading() const;

  Rational eval(const Rational& x) const;

  DensePolynomial monic() const;

  DensePolynomial operator-() const;
  DensePolynomial& operator+=(const DensePolynomial& o);
  DensePolynomial& operator-=(const DensePolynomial& o);

  friend DensePolynomial operator+(DensePolynomial a, const DensePolynomial& b) {
    return a += b;
  }
  friend DensePolynomial operator-(DensePolynomial a, const DensePolynomial& b) {
    return a -= b;
  }
  friend DensePolynomial operator*(const DensePolynomial& a,
                                   const DensePolynomial& b);
  friend DensePolynomial operator*(const Rational& s, DensePolynomial p);

  friend bool operator==(const DensePolynomial& a, const DensePolynomial& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const DensePolynomial& a, const DensePolynomial& b) {
    return !(a == b);
  }

  // e.g. "x^2 - x + 1"; "0" for the zero polynomial
  std::string str() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// num = q * den + r with deg r < deg den. Throws DivisionByZero on den = 0.
std::pair<DensePolynomial, DensePolynomial> poly_divmod(
    const DensePolynomial& num, const DensePolynomial& den);

struct PolyExtGcd {
  DensePolynomial g;  // monic gcd
  DensePolynomial s;
  DensePolynomial t;  // s*a + t*b = g
};

// Extended Euclid over Q[x]. Throws std::invalid_argument when both are zero.
PolyExtGcd poly_ext_gcd(const DensePolynomial& a, const DensePolynomial& b);

}  // namespace cyclident

#endif
