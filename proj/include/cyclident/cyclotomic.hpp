#ifndef CYCLIDENT_CYCLOTOMIC_HPP
#define CYCLIDENT_CYCLOTOMIC_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclident/polynomial.hpp"
#include "cyclident/rational.hpp"

namespace cyclident {

struct OrderMismatch : std::invalid_argument {
  OrderMismatch()
      : std::invalid_argument(
            "cyclotomic operands of different order (and neither rational)") {}
};

unsigned euler_phi(unsigned n);

// Phi_N, computed by exact division of x^N - 1 by the proper-divisor
// product and memoized for the process lifetime. Thread-safe.
const DensePolynomial& cyclotomic_polynomial(unsigned n);

// Order of zeta_N^a as a root of unity: N / gcd(N, a mod N).
std::int64_t multiplicative_order(std::int64_t n, std::int64_t a);

/**
 * Element of Q(zeta_N) on the power basis {1, zeta, ..., zeta^{N-1}},
 * kept reduced modulo Phi_N: coefficients of index >= phi(N) are zero.
 * Two canonical elements of equal order are equal iff their coefficient
 * vectors are equal, which is what every exact identity check relies on.
 *
 * Values are immutable after construction; all operations return new
 * elements and are safe to call concurrently.
 */
class CyclotomicElement {
 public:
  static CyclotomicElement zero(unsigned order);
  static CyclotomicElement constant(unsigned order, const Rational& value);
  static CyclotomicElement one(unsigned order) { return constant(order, 1); }

  // zeta_N^e, e reduced mod N (negative exponents allowed).
  static CyclotomicElement root_power(unsigned order, std::int64_t e);

  // From coefficients on the power basis (any length up to order),
  // canonicalized on construction.
  static CyclotomicElement from_coeffs(unsigned order,
                                       std::vector<Rational> coeffs);

  unsigned order() const { return order_; }
  bool is_canonical() const { return canonical_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;

  // The rational value when every coefficient of index >= 1 vanishes.
  std::optional<Rational> as_rational() const;

  CyclotomicElement operator-() const;

  friend CyclotomicElement operator+(const CyclotomicElement& a,
                                     const CyclotomicElement& b);
  friend CyclotomicElement operator-(const CyclotomicElement& a,
                                     const CyclotomicElement& b);
  friend CyclotomicElement operator*(const CyclotomicElement& a,
                                     const CyclotomicElement& b);
  friend CyclotomicElement operator*(const Rational& s, CyclotomicElement a);

  friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b);
  friend bool operator!=(const CyclotomicElement& a,
                         const CyclotomicElement& b) {
    return !(a == b);
  }

  std::string str() const;  // debugging aid, e.g. "1/2 + 1/2*z^1 (N=4)"

 private:
  CyclotomicElement(unsigned order, std::vector<Rational> raw);
  void reduce();

  unsigned order_ = 1;
  std::vector<Rational> c_;
  bool canonical_ = false;

  friend CyclotomicElement mul_root_power(const CyclotomicElement& a,
                                          std::int64_t e);
  friend CyclotomicElement conjugate(const CyclotomicElement& a);
  friend CyclotomicElement inverse(const CyclotomicElement& a);
};

// a * zeta^e as an index rotation; much cheaper than a general product.
CyclotomicElement mul_root_power(const CyclotomicElement& a, std::int64_t e);

// Image under the automorphism zeta -> zeta^{N-1} (complex conjugation).
CyclotomicElement conjugate(const CyclotomicElement& a);

// Field inverse via extended gcd with Phi_N. Throws DivisionByZero on zero.
CyclotomicElement inverse(const CyclotomicElement& a);

// a + conjugate(a), i.e. twice the real part, as an exact field element.
CyclotomicElement doubled_real_part(const CyclotomicElement& a);

}  // namespace cyclident

#endif
