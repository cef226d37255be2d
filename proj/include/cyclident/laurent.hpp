#ifndef CYCLIDENT_LAURENT_HPP
#define CYCLIDENT_LAURENT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cyclident/rational.hpp"

namespace cyclident {

/**
 * Integer-coefficient polynomial in z and 1/z. Stored as the lowest
 * exponent plus a coefficient run whose first and last entries are
 * nonzero; the zero polynomial stores nothing. Identically zero iff
 * every coefficient vanishes, which is the property the formal identity
 * checks assert.
 */
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;

  void add_term(std::int64_t exponent, const Integer& coefficient);

  bool is_zero() const;
  std::int64_t min_exponent() const;
  std::int64_t max_exponent() const;
  Integer coeff(std::int64_t exponent) const;
  std::size_t term_count() const;

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator!=(const LaurentPolynomial& a,
                         const LaurentPolynomial& b) {
    return !(a == b);
  }

  // e.g. "-z^-2 + 3*z^4"; "0" when zero
  std::string str() const;

 private:
  void normalize() const;

  mutable std::int64_t offset_ = 0;
  mutable std::vector<Integer> c_;
  mutable bool normalized_ = true;
};

}  // namespace cyclident

#endif
