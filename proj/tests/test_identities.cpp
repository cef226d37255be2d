#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "cyclident/bernoulli.hpp"
#include "cyclident/identities.hpp"
#include "cyclident/intmath.hpp"

using namespace cyclident;

namespace {

const PrecisionContext kCtx192(192);

MpReal dec(const std::string& s, mpfr_prec_t p = 256) {
  return MpReal::from_string(s, p);
}

}  // namespace

// ---------------------------------------------------------------- eq14 exact

TEST_CASE("eq14 exact: single-term sum at n=1") {
  // S = -1/(1 - zeta_8); checked by re-multiplying
  const auto s = eq14_sum_exact(1, 8, 1);
  const auto one = CyclotomicElement::one(8);
  const auto z = CyclotomicElement::root_power(8, 1);
  CHECK(s * (one - z) == -one);
  CHECK(verify_eq14_exact(1, 5, 1).passed());
  CHECK(verify_eq14_exact(1, 5, 1).computed_real == "-1/2");
}

TEST_CASE("eq14 exact point values") {
  auto r1 = verify_eq14_exact(3, 8, 1);
  CHECK(r1.passed());
  CHECK(r1.computed_real == "-1");

  auto r2 = verify_eq14_exact(3, 7, 2);
  CHECK(r2.passed());
  CHECK(r2.computed_real == "-1");

  auto r3 = verify_eq14_exact(5, 7, 1);
  CHECK(r3.passed());
  CHECK(r3.computed_real == "-3/2");
  CHECK(r3.expected == Rational(-3, 2));
}

TEST_CASE("eq14 exact rejects low-order roots and even n") {
  CHECK(verify_eq14_exact(3, 3, 1).status == Status::inapplicable);
  CHECK(verify_eq14_exact(3, 8, 4).status == Status::inapplicable);   // order 2
  CHECK(verify_eq14_exact(2, 9, 1).status == Status::inapplicable);
  CHECK(verify_eq14_exact(3, 12, 4).status == Status::inapplicable);  // order 3
  CHECK(verify_eq14_exact(3, 8, 2).passed());  // order 4 > 3 is admissible
  CHECK_THROWS_AS(eq14_sum_exact(3, 3, 1), HypothesisViolation);
}

TEST_CASE("eq14 exact is invariant across admissible root exponents") {
  for (std::int64_t a : admissible_exponents_eq14(3, 16)) {
    const auto rep = verify_eq14_exact(3, 16, a);
    CHECK(rep.passed());
    CHECK(rep.computed_real == "-1");
  }
}

// -------------------------------------------------------------- eq14 numeric

TEST_CASE("eq14 numeric point values") {
  auto r1 = verify_eq14_numeric(1, dec("1.0", 128), PrecisionContext(128));
  CHECK(r1.passed());
  CHECK((dec(r1.computed_real) + dec("0.5")).abs() <= MpReal::pow2(-100, 256));

  auto r2 = verify_eq14_numeric(7, dec("1.0", 256), PrecisionContext(256));
  CHECK(r2.passed());
  CHECK(r2.expected == Rational(-2));

  auto r3 = verify_eq14_numeric(
      9, dec("1.41421356237309504880168872420969807856967187537694", 256),
      PrecisionContext(256));
  CHECK(r3.passed());
  CHECK(r3.expected == Rational(-5, 2));
}

TEST_CASE("eq14 numeric flags pole-adjacent angles inapplicable") {
  const MpReal theta = MpReal::from_long(2, 256) * MpReal::pi(256) /
                       MpReal::from_long(3, 256);  // 3*theta = 2*pi
  CHECK(verify_eq14_numeric(3, theta, kCtx192).status == Status::inapplicable);
}

// ---------------------------------------------------------------------- eq15

TEST_CASE("eq15 point values") {
  auto r1 = verify_eq15(1, dec("0.4", 64), PrecisionContext(64));
  CHECK(r1.passed());
  CHECK(r1.expected == Rational(0));

  auto r2 = verify_eq15(5, dec("0.7", 192), kCtx192);
  CHECK(r2.passed());
  CHECK(r2.expected == Rational(-2));
  CHECK((dec(r2.computed_real) + dec("2")).abs() <= MpReal::pow2(-170, 256));

  auto r3 = verify_eq15(11, dec("0.3", 256), PrecisionContext(256));
  CHECK(r3.passed());
  CHECK(r3.expected == Rational(-5));
}

TEST_CASE("eq15 rejects x near pi/k") {
  const MpReal half_pi = MpReal::pi(192) / MpReal::from_long(2, 192);
  CHECK(verify_eq15(3, half_pi, kCtx192).status == Status::inapplicable);
  CHECK(verify_eq15(3, MpReal(192), kCtx192).status == Status::inapplicable);
}

// ---------------------------------------------------------------------- eq22

TEST_CASE("eq22 decomposition routes agree") {
  auto r1 = verify_eq22(1, dec("0.8", 128), PrecisionContext(128));
  CHECK(r1.passed());
  CHECK((dec(r1.computed_real) + dec("0.5")).abs() <= MpReal::pow2(-100, 256));
  CHECK((dec(*r1.computed_imag) + dec("0.5")).abs() <= MpReal::pow2(-100, 256));

  CHECK(verify_eq22(5, dec("1.3", 192), kCtx192).passed());
  CHECK(verify_eq22(7, dec("2.1", 256), PrecisionContext(256)).passed());
}

// ------------------------------------------------------------------- cos_sum

TEST_CASE("cos_sum exact at arbitrary roots") {
  auto r1 = verify_cos_sum_exact(1, 3, 1);
  CHECK(r1.passed());
  CHECK(r1.computed_real == "-1");

  CHECK(verify_cos_sum_exact(3, 5, 1).passed());
  CHECK(verify_cos_sum_exact(9, 1, 0).passed());   // z = 1
  CHECK(verify_cos_sum_exact(7, 14, 7).passed());  // z = -1
  CHECK(verify_cos_sum_exact(2, 5, 1).status == Status::inapplicable);
}

TEST_CASE("cos_sum numeric") {
  auto rep = verify_cos_sum_numeric(7, dec("0.9", 192), kCtx192);
  CHECK(rep.passed());
  CHECK((dec(rep.computed_real) + dec("1")).abs() <= MpReal::pow2(-170, 256));
}

// ---------------------------------------------------------------- sine_ratio

TEST_CASE("sine_ratio exact and numeric") {
  auto r1 = verify_sine_ratio_numeric(1, dec("0.4", 192), kCtx192);
  CHECK(r1.passed());
  CHECK((dec(r1.computed_real) + dec("1")).abs() <= MpReal::pow2(-170, 256));

  auto r2 = verify_sine_ratio_exact(3, 7, 1);
  CHECK(r2.passed());
  CHECK(r2.computed_real == "-2");

  auto r3 = verify_sine_ratio_numeric(9, dec("1.1", 192), kCtx192);
  CHECK(r3.passed());
  CHECK(r3.expected == Rational(-5));
}

// ------------------------------------------------------------------- lemma21

TEST_CASE("lemma21 passes for odd n") {
  CHECK(verify_lemma21(1).passed());
  CHECK(verify_lemma21(1).computed_real == "0");
  CHECK(verify_lemma21(3).passed());
  CHECK(verify_lemma21(101).passed());
  for (std::int64_t n = 1; n <= 99; n += 2) {
    CHECK(lemma21_polynomial(n).is_zero());
  }
}

TEST_CASE("lemma21 detects the even-n counterexamples") {
  auto r2 = verify_lemma21(2);
  CHECK(r2.failed());
  CHECK(r2.computed_real == "-z^-1");

  const auto p4 = lemma21_polynomial(4);
  CHECK(p4.coeff(-4) == 1);
  CHECK(p4.coeff(-3) == -2);
  CHECK(p4.coeff(-1) == -1);
  CHECK(p4.term_count() == 3);
  CHECK(verify_lemma21(4).failed());
}

TEST_CASE("lemma21 polynomial matches an independent enumeration") {
  for (std::int64_t n = 1; n <= 60; ++n) {
    std::map<std::int64_t, long> oracle;
    for (std::int64_t k = 1; k <= n; ++k) {
      std::int64_t j = 0;
      while (2 * j < n - k) {
        oracle[k * (2 * j + k - n)] += (k % 2 == 0) ? 1 : -1;
        ++j;
      }
    }
    const auto p = lemma21_polynomial(n);
    bool all_zero = true;
    for (const auto& [e, c] : oracle) {
      CHECK(p.coeff(e) == Integer(c));
      if (c != 0) all_zero = false;
    }
    CHECK(p.is_zero() == all_zero);
    CHECK(all_zero == (n % 2 == 1));
  }
}

// ---------------------------------------------------------------------- eq16

TEST_CASE("eq16 point values") {
  for (std::int64_t m = 1; m <= 4; ++m) CHECK(verify_eq16(1, m).passed());

  // n=5, m=1 term by term: -B3(2) + 4 B3(3/2) - 9 B3(1) + 16 B3(1/2) - 25 B3(0)
  CHECK(eval_bernoulli(3, Rational(2)) == Rational(3));
  CHECK(eval_bernoulli(3, Rational(3, 2)) == Rational(3, 4));
  CHECK(eval_bernoulli(3, Rational(1)) == Rational(0));
  CHECK(eval_bernoulli(3, Rational(1, 2)) == Rational(0));
  CHECK(eval_bernoulli(3, Rational(0)) == Rational(0));
  auto r = verify_eq16(5, 1);
  CHECK(r.passed());
  CHECK(r.computed_real == "0");

  CHECK(verify_eq16(9, 3).passed());
  CHECK(verify_eq16(4, 1).status == Status::inapplicable);
  CHECK(verify_eq16(5, 0).status == Status::inapplicable);
}

// ------------------------------------------------------------ cor11_expanded

TEST_CASE("cor11_expanded point values and cross-check with eq16") {
  CHECK(verify_cor11_expanded(1, 1).passed());
  CHECK(verify_cor11_expanded(7, 2).passed());

  const auto a = verify_cor11_expanded(5, 1);
  const auto b = verify_eq16(5, 1);
  CHECK(a.passed());
  CHECK(b.passed());
  CHECK(a.computed_real == b.computed_real);  // both exactly zero
}

// ---------------------------------------------------------------------- eq17

TEST_CASE("eq17 point values") {
  auto r1 = verify_eq17(1, 3, 1, 1);  // order 4
  CHECK(r1.passed());
  CHECK(r1.computed_real == "-1/2");

  auto r2 = verify_eq17(2, 2, 3, 1);  // order 8
  CHECK(r2.passed());
  CHECK(r2.computed_real == "-1");

  auto r3 = verify_eq17(3, 5, 5, 3);  // order 28
  CHECK(r3.passed());
  CHECK(r3.computed_real == "-3/2");
}

TEST_CASE("eq17 hypothesis gates") {
  CHECK(verify_eq17(1, 2, 3, 1).status == Status::inapplicable);  // parity
  CHECK(verify_eq17(2, 2, 3, 2).status == Status::inapplicable);  // gcd
  CHECK(verify_eq17(2, 2, 4, 1).status == Status::inapplicable);  // even n
}

TEST_CASE("eq17 sign reduction, checked directly") {
  const std::int64_t l = 2, m = 2, n = 3, a = 1;
  const std::int64_t order = m * n + l;  // 8
  const unsigned nn = static_cast<unsigned>(order);
  for (std::int64_t k = 1; k <= n; ++k) {
    const auto lhs =
        CyclotomicElement::root_power(nn, mulmod_i64(a, k * (k * m + l) / 2, order));
    auto rhs = CyclotomicElement::root_power(
        nn, mod_floor(-mulmod_i64(a, m * k * (n - k) / 2, order), order));
    if (k % 2 == 1) rhs = -rhs;
    CHECK(lhs == rhs);
  }
}

// ---------------------------------------------------------------------- eq18

TEST_CASE("eq18 real part with recorded imaginary part") {
  auto r0 = verify_eq18(0, 1);  // zeta = i: S = -1/2 + i/2
  CHECK(r0.passed());
  CHECK(r0.computed_real == "-1/2");
  REQUIRE(r0.computed_imag.has_value());
  CHECK(*r0.computed_imag == "1/2");

  auto r1 = verify_eq18(1, 1);  // order 10
  CHECK(r1.passed());
  CHECK(r1.computed_real == "-1");
  REQUIRE(r1.computed_imag.has_value());
  CHECK(*r1.computed_imag != "0");  // the full-sum claim genuinely fails here

  auto r2 = verify_eq18(2, 3);  // order 16
  CHECK(r2.passed());
  CHECK(r2.computed_real == "-3/2");

  CHECK(verify_eq18(1, 2).status == Status::inapplicable);  // gcd(2,10) = 2
}

// ---------------------------------------------------------------------- eq11

TEST_CASE("eq11 full-sum values") {
  auto r1 = verify_eq11(1, 1);
  CHECK(r1.passed());
  CHECK(r1.computed_real == "-1");
  CHECK(*r1.computed_imag == "0");

  auto r2 = verify_eq11(2, 1);
  CHECK(r2.passed());
  CHECK(r2.computed_real == "-3/2");

  auto r3 = verify_eq11(3, 2);  // conjugate root, order 11
  CHECK(r3.passed());
  CHECK(r3.computed_real == "-2");

  CHECK(verify_eq11(1, 5).status == Status::inapplicable);  // gcd(5,5) = 5
}

// ---------------------------------------------------------------------- eq12

TEST_CASE("eq12 full-sum values") {
  auto r1 = verify_eq12(1, 1);
  CHECK(r1.passed());
  CHECK(r1.computed_real == "-2");
  CHECK(*r1.computed_imag == "0");

  CHECK(verify_eq12(2, 1).passed());
  CHECK(verify_eq12(2, 1).computed_real == "-3");
  CHECK(verify_eq12(2, 3).computed_real == "-3");
  CHECK(verify_eq12(2, 2).status == Status::inapplicable);
}

// ---------------------------------------------------------------------- eq13

TEST_CASE("eq13 point values") {
  auto r1 = verify_eq13(2, 2, 0, 1);  // order 3, single term
  CHECK(r1.passed());
  CHECK(r1.computed_real == "-1");
  CHECK(r1.expected == Rational(-1));

  auto r2 = verify_eq13(3, 3, 1, 1);  // order 7
  CHECK(r2.passed());
  CHECK(r2.computed_real == "1");

  auto r3 = verify_eq13(4, 5, 0, 3);  // order 19
  CHECK(r3.passed());
  CHECK(r3.computed_real == "2");
}

TEST_CASE("eq13 hypothesis gates and conjugate-root invariance") {
  CHECK(verify_eq13(1, 4, 0, 1).status == Status::inapplicable);
  CHECK(verify_eq13(3, 3, 2, 1).status == Status::inapplicable);
  CHECK(verify_eq13(3, 3, 0, 2).status == Status::inapplicable);  // gcd(2,8)=2
  for (std::int64_t a : primitive_exponents(7)) {
    const auto rep = verify_eq13(3, 3, 1, a);
    CHECK(rep.passed());
    CHECK(rep.computed_real == "1");
  }
}

// ----------------------------------------------------- cross-mode invariants

TEST_CASE("eq14 equivalence chain: exact, sine_ratio, eq15") {
  // q = zeta_16^3, theta = 2 pi 3/16, x = theta/2 = 3 pi/16, z = zeta_32^3
  CHECK(verify_eq14_exact(5, 16, 3).passed());
  CHECK(verify_sine_ratio_exact(5, 32, 3).passed());
  const MpReal x = MpReal::pi(256) * MpReal::from_long(3, 256) /
                   MpReal::from_long(16, 256);
  CHECK(verify_eq15(5, x, kCtx192).passed());
}

TEST_CASE("eq14 exact and numeric agree at the same root") {
  std::mt19937_64 rng(4711);
  for (int i = 0; i < 5; ++i) {
    const std::int64_t n = 1 + 2 * static_cast<std::int64_t>(rng() % 6);
    const std::int64_t order = n + 2 + static_cast<std::int64_t>(rng() % 20);
    const auto exps = admissible_exponents_eq14(n, order);
    REQUIRE_FALSE(exps.empty());
    const std::int64_t a = exps[rng() % exps.size()];

    const auto exact = verify_eq14_exact(n, order, a);
    REQUIRE(exact.passed());
    const MpReal exact_re = MpReal::from_rational(
        Rational::from_string(exact.computed_real), 256);

    const MpReal theta = MpReal::from_long(2, 256) * MpReal::pi(256) *
                         MpReal::from_long(static_cast<long>(a), 256) /
                         MpReal::from_long(static_cast<long>(order), 256);
    const auto numeric = verify_eq14_numeric(n, theta, kCtx192);
    REQUIRE(numeric.passed());
    CHECK((exact_re - dec(numeric.computed_real)).abs() <=
          MpReal::pow2(-176, 256));
  }
}

TEST_CASE("identity verifiers fill the report envelope") {
  const auto rep = verify_eq14_exact(3, 8, 1);
  CHECK(rep.identity == "eq14");
  CHECK(rep.mode == Mode::exact);
  REQUIRE(rep.params.size() == 3);
  CHECK(rep.params[0].first == "n");
  CHECK(rep.params[1].first == "order");
  CHECK(rep.params[2].first == "root_exp");
  CHECK(rep.micros >= 0);

  const auto num = verify_eq15(5, dec("0.7", 192), kCtx192);
  REQUIRE(num.residual.has_value());
  CHECK(num.params[2].first == "precision_bits");
  CHECK(num.params[3].first == "tolerance");
}

TEST_CASE("conjugate-root invariance for eq17 and eq18") {
  for (std::int64_t a : primitive_exponents(2 * 5 + 2)) {  // eq17 l=2 m=2 n=5
    const auto rep = verify_eq17(2, 2, 5, a);
    CHECK(rep.passed());
    CHECK(rep.computed_real == "-3/2");
  }
  for (std::int64_t a : primitive_exponents(16)) {  // eq18 n=2
    const auto rep = verify_eq18(2, a);
    CHECK(rep.passed());
    CHECK(rep.computed_real == "-3/2");
  }
}

TEST_CASE("cos_sum and sine_ratio agree across modes at matching angles") {
  // exact z = zeta_N^a corresponds to theta = 4 pi a/N (cos_sum, z = e^{i theta/2})
  // and to x = 2 pi a/N (sine_ratio, z = e^{ix})
  const std::int64_t n = 7, order = 9, a = 2;
  CHECK(verify_cos_sum_exact(n, order, a).passed());
  const MpReal four_pi_a_over_n =
      MpReal::from_long(4, 256) * MpReal::pi(256) *
      MpReal::from_long(a, 256) / MpReal::from_long(order, 256);
  CHECK(verify_cos_sum_numeric(n, four_pi_a_over_n, kCtx192).passed());

  CHECK(verify_sine_ratio_exact(n, order, a).passed());
  const MpReal two_pi_a_over_n =
      MpReal::from_long(2, 256) * MpReal::pi(256) *
      MpReal::from_long(a, 256) / MpReal::from_long(order, 256);
  CHECK(verify_sine_ratio_numeric(n, two_pi_a_over_n, kCtx192).passed());
}
