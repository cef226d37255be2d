#ifndef CYCLIDENT_NUMERIC_HPP
#define CYCLIDENT_NUMERIC_HPP

#include <mpfr.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cyclident/cyclotomic.hpp"
#include "cyclident/rational.hpp"

namespace cyclident {

struct PoleProximity : std::runtime_error {
  explicit PoleProximity(const std::string& what) : std::runtime_error(what) {}
};

struct SampleExhausted : std::runtime_error {
  explicit SampleExhausted(const std::string& what)
      : std::runtime_error(what) {}
};

/**
 * Multiprecision binary float (MPFR), value semantics, round-to-nearest
 * everywhere. Binary operations compute at the larger operand precision.
 */
class MpReal {
 public:
  explicit MpReal(mpfr_prec_t prec = 64) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  MpReal(const MpReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  MpReal(MpReal&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  MpReal& operator=(const MpReal& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  MpReal& operator=(MpReal&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~MpReal() { mpfr_clear(v_); }

  static MpReal from_long(long x, mpfr_prec_t prec);
  static MpReal from_rational(const Rational& q, mpfr_prec_t prec);
  // Decimal string, e.g. "0.7" or "1.4142e0". Throws on garbage.
  static MpReal from_string(const std::string& s, mpfr_prec_t prec);
  static MpReal pi(mpfr_prec_t prec);
  // 2^e, exact.
  static MpReal pow2(long e, mpfr_prec_t prec);

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }

  MpReal operator-() const;
  MpReal abs() const;

  friend MpReal operator+(const MpReal& a, const MpReal& b);
  friend MpReal operator-(const MpReal& a, const MpReal& b);
  friend MpReal operator*(const MpReal& a, const MpReal& b);
  friend MpReal operator/(const MpReal& a, const MpReal& b);

  friend int cmp(const MpReal& a, const MpReal& b) { return mpfr_cmp(a.v_, b.v_); }
  friend bool operator<(const MpReal& a, const MpReal& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const MpReal& a, const MpReal& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const MpReal& a, const MpReal& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const MpReal& a, const MpReal& b) { return cmp(a, b) >= 0; }

  MpReal sin() const;
  MpReal cos() const;
  std::pair<MpReal, MpReal> sin_cos() const;  // (sin, cos), one reduction
  MpReal round_nearest() const;               // to integral value

  // Round to a (usually lower) precision.
  MpReal at_precision(mpfr_prec_t prec) const;

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  // Canonical scientific decimal, deterministic for a given precision:
  // "-d.dddde<exp>"; plain "0" for zero. digits = 0 picks enough digits
  // for the stored precision.
  std::string str(std::size_t digits = 0) const;

  mpfr_srcptr raw() const { return v_; }

 private:
  mpfr_t v_;
};

struct MpComplex {
  MpReal re, im;

  MpComplex conj() const { return {re, -im}; }
  MpReal abs() const;

  friend MpComplex operator+(const MpComplex& a, const MpComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend MpComplex operator-(const MpComplex& a, const MpComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend MpComplex operator*(const MpComplex& a, const MpComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend MpComplex operator/(const MpComplex& a, const MpComplex& b);
};

/**
 * Precision contract for every numeric-mode verification: working
 * precision in bits (>= 64) plus the pole margin 2^-16 * pi below which
 * samples near an excluded angle are rejected as inapplicable.
 */
struct PrecisionContext {
  mpfr_prec_t precision_bits = 192;

  explicit PrecisionContext(mpfr_prec_t bits = 192) : precision_bits(bits) {
    if (bits < 64) throw std::invalid_argument("precision must be >= 64 bits");
  }

  MpReal pole_margin() const {
    return MpReal::pi(precision_bits) * MpReal::pow2(-16, precision_bits);
  }

  // Evaluation happens with guard bits; exposed values are rounded back.
  PrecisionContext guarded(mpfr_prec_t extra = 64) const {
    return PrecisionContext(precision_bits + extra);
  }
};

// n^2 * 2^-(P-16); loose by construction, exactness carries the burden.
MpReal tolerance(mpfr_prec_t precision_bits, std::int64_t n);

// |t - period * round(t / period)|
MpReal dist_to_multiple(const MpReal& t, const MpReal& period);

// cos(theta) + i sin(theta) after argument reduction.
MpComplex unit_exp(const MpReal& theta, const PrecisionContext& ctx);

// cos t / sin t; throws PoleProximity within pole_margin of a multiple of pi.
MpReal cot_mp(const MpReal& t, const PrecisionContext& ctx);

// Numeric embedding of an exact element at zeta_N = e^{2 pi i / N}.
MpComplex embed(const CyclotomicElement& a, const PrecisionContext& ctx);

/**
 * Deterministic admissible-point sampler. Samples are uniform on
 * [lo_pi, hi_pi] * pi, drawn from a std::mt19937_64 stream (identical
 * seed gives an identical sequence on every platform), and rejected
 * while within pole_margin of any excluded point m * period / k.
 */
struct SamplePlan {
  std::uint64_t seed = 1;
  std::size_t count = 1;
  Rational lo_pi = Rational(0);
  Rational hi_pi = Rational(1);
  // Excluded families {m * period / k}: period is pi when two_pi_period
  // is false, 2 pi otherwise.
  std::vector<std::int64_t> exclusion_ks;
  bool two_pi_period = false;
};

std::vector<MpReal> draw_samples(const SamplePlan& plan,
                                 const PrecisionContext& ctx);

}  // namespace cyclident

#endif
