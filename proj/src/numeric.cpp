#include "cyclident/numeric.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "cyclident/intmath.hpp"

namespace cyclident {

namespace {

mpfr_prec_t max_prec(const MpReal& a, const MpReal& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

MpReal MpReal::from_long(long x, mpfr_prec_t prec) {
  MpReal r(prec);
  mpfr_set_si(r.v_, x, MPFR_RNDN);
  return r;
}

MpReal MpReal::from_rational(const Rational& q, mpfr_prec_t prec) {
  MpReal r(prec);
  mpfr_set_q(r.v_, q.raw().get_mpq_t(), MPFR_RNDN);
  return r;
}

MpReal MpReal::from_string(const std::string& s, mpfr_prec_t prec) {
  MpReal r(prec);
  if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0) {
    throw std::invalid_argument("not a decimal number: '" + s + "'");
  }
  return r;
}

MpReal MpReal::pi(mpfr_prec_t prec) {
  MpReal r(prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

MpReal MpReal::pow2(long e, mpfr_prec_t prec) {
  MpReal r(prec);
  mpfr_set_si_2exp(r.v_, 1, e, MPFR_RNDN);
  return r;
}

MpReal MpReal::operator-() const {
  MpReal r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

MpReal MpReal::abs() const {
  MpReal r(precision());
  mpfr_abs(r.v_, v_, MPFR_RNDN);
  return r;
}

MpReal operator+(const MpReal& a, const MpReal& b) {
  MpReal r(max_prec(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

MpReal operator-(const MpReal& a, const MpReal& b) {
  MpReal r(max_prec(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

MpReal operator*(const MpReal& a, const MpReal& b) {
  MpReal r(max_prec(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

MpReal operator/(const MpReal& a, const MpReal& b) {
  MpReal r(max_prec(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

MpReal MpReal::sin() const {
  MpReal r(precision());
  mpfr_sin(r.v_, v_, MPFR_RNDN);
  return r;
}

MpReal MpReal::cos() const {
  MpReal r(precision());
  mpfr_cos(r.v_, v_, MPFR_RNDN);
  return r;
}

std::pair<MpReal, MpReal> MpReal::sin_cos() const {
  MpReal s(precision()), c(precision());
  mpfr_sin_cos(s.v_, c.v_, v_, MPFR_RNDN);
  return {std::move(s), std::move(c)};
}

MpReal MpReal::round_nearest() const {
  MpReal r(precision());
  mpfr_rint(r.v_, v_, MPFR_RNDN);
  return r;
}

MpReal MpReal::at_precision(mpfr_prec_t prec) const {
  MpReal r(prec);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string MpReal::str(std::size_t digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return sign() < 0 ? "-inf" : "inf";
  if (is_zero()) return "0";
  if (digits == 0) {
    digits = static_cast<std::size_t>(
                 static_cast<double>(precision()) * 0.30103) +
             2;
  }
  digits = std::max<std::size_t>(digits, 2);
  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, digits, v_, MPFR_RNDN);
  std::string mant(raw);
  mpfr_free_str(raw);
  std::string sgn;
  if (!mant.empty() && mant[0] == '-') {
    sgn = "-";
    mant = mant.substr(1);
  }
  // Trim trailing zeros but keep at least one digit after the point.
  std::size_t keep = mant.size();
  while (keep > 2 && mant[keep - 1] == '0') --keep;
  mant = mant.substr(0, keep);
  std::ostringstream os;
  os << sgn << mant[0] << "." << (mant.size() > 1 ? mant.substr(1) : "0")
     << "e" << (exp10 - 1);
  return os.str();
}

MpReal MpComplex::abs() const {
  MpReal r(std::max(re.precision(), im.precision()));
  mpfr_hypot(const_cast<mpfr_ptr>(r.raw()), re.raw(), im.raw(), MPFR_RNDN);
  return r;
}

MpComplex operator/(const MpComplex& a, const MpComplex& b) {
  MpReal d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

MpReal tolerance(mpfr_prec_t precision_bits, std::int64_t n) {
  return MpReal::from_long(static_cast<long>(n * n), precision_bits) *
         MpReal::pow2(16 - static_cast<long>(precision_bits), precision_bits);
}

MpReal dist_to_multiple(const MpReal& t, const MpReal& period) {
  MpReal q = t / period;
  MpReal nearest = q.round_nearest() * period;
  return (t - nearest).abs();
}

MpComplex unit_exp(const MpReal& theta, const PrecisionContext& ctx) {
  auto [s, c] = theta.at_precision(ctx.precision_bits).sin_cos();
  return {std::move(c), std::move(s)};
}

MpReal cot_mp(const MpReal& t, const PrecisionContext& ctx) {
  MpReal pi = MpReal::pi(ctx.precision_bits);
  if (dist_to_multiple(t.at_precision(ctx.precision_bits), pi) <
      ctx.pole_margin()) {
    throw PoleProximity("cot argument within pole margin of a multiple of pi");
  }
  auto [s, c] = t.at_precision(ctx.precision_bits).sin_cos();
  return c / s;
}

MpComplex embed(const CyclotomicElement& a, const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.precision_bits;
  const MpReal two_pi = MpReal::from_long(2, prec) * MpReal::pi(prec);
  const unsigned n = a.order();
  MpComplex acc{MpReal(prec), MpReal(prec)};
  for (unsigned j = 0; j < n; ++j) {
    if (a.coeffs()[j].is_zero()) continue;
    MpReal cj = MpReal::from_rational(a.coeffs()[j], prec);
    MpReal angle = two_pi * MpReal::from_long(static_cast<long>(j), prec) /
                   MpReal::from_long(static_cast<long>(n), prec);
    auto [s, c] = angle.sin_cos();
    acc.re = acc.re + cj * c;
    acc.im = acc.im + cj * s;
  }
  return acc;
}

std::vector<MpReal> draw_samples(const SamplePlan& plan,
                                 const PrecisionContext& ctx) {
  if (plan.count < 1) throw std::invalid_argument("sample count must be >= 1");
  if (!(plan.lo_pi < plan.hi_pi)) {
    throw std::invalid_argument("empty sample domain");
  }
  const mpfr_prec_t prec = ctx.precision_bits;
  const MpReal pi = MpReal::pi(prec);
  const MpReal lo = MpReal::from_rational(plan.lo_pi, prec) * pi;
  const MpReal width =
      MpReal::from_rational(plan.hi_pi - plan.lo_pi, prec) * pi;
  const MpReal period =
      plan.two_pi_period ? MpReal::from_long(2, prec) * pi : pi;
  const MpReal margin = ctx.pole_margin();

  std::mt19937_64 rng(plan.seed);
  std::vector<MpReal> out;
  out.reserve(plan.count);
  constexpr int kMaxTriesPerSample = 512;
  while (out.size() < plan.count) {
    bool found = false;
    for (int tries = 0; tries < kMaxTriesPerSample; ++tries) {
      const std::uint64_t u = rng();
      // u / 2^64, exactly representable, then mapped into the domain
      MpReal frac(prec);
      static_assert(sizeof(unsigned long) == 8, "needs 64-bit unsigned long");
      mpfr_set_ui(const_cast<mpfr_ptr>(frac.raw()),
                  static_cast<unsigned long>(u), MPFR_RNDN);
      frac = frac * MpReal::pow2(-64, prec);
      MpReal x = lo + width * frac;
      bool ok = true;
      for (std::int64_t k : plan.exclusion_ks) {
        // |x - m*period/k| >= margin  <=>  |k x - m*period| >= k*margin
        MpReal kx = MpReal::from_long(static_cast<long>(k), prec) * x;
        if (dist_to_multiple(kx, period) <
            MpReal::from_long(static_cast<long>(k), prec) * margin) {
          ok = false;
          break;
        }
      }
      if (ok) {
        out.push_back(std::move(x));
        found = true;
        break;
      }
    }
    if (!found) {
      std::ostringstream os;
      os << "could not place sample " << out.size() + 1 << " of "
         << plan.count << " after " << kMaxTriesPerSample
         << " tries; exclusion set too dense for domain ["
         << plan.lo_pi.str() << "*pi, " << plan.hi_pi.str() << "*pi]";
      throw SampleExhausted(os.str());
    }
  }
  return out;
}

}  // namespace cyclident
