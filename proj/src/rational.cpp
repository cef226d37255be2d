#include "cyclident/rational.hpp"

#include <ostream>

namespace cyclident {

Rational Rational::from_string(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
  if (q.get_den() == 0) throw DivisionByZero();
  q.canonicalize();
  Rational r;
  r.v_ = q;
  return r;
}

Rational Rational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  mpq_class out;
  mpz_pow_ui(out.get_num_mpz_t(), v_.get_num_mpz_t(),
             static_cast<unsigned long>(e));
  mpz_pow_ui(out.get_den_mpz_t(), v_.get_den_mpz_t(),
             static_cast<unsigned long>(e));
  Rational r;
  r.v_ = out;  // powers of a canonical fraction stay canonical
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

Integer factorial(unsigned long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Integer int_pow(const Integer& base, unsigned long e) {
  Integer p;
  mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), e);
  return p;
}

}  // namespace cyclident
