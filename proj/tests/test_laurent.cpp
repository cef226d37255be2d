#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "cyclident/laurent.hpp"

using namespace cyclident;

TEST_CASE("empty polynomial is zero") {
  LaurentPolynomial p;
  CHECK(p.is_zero());
  CHECK(p.term_count() == 0);
  CHECK(p.str() == "0");
  CHECK(p.coeff(-3) == 0);
  CHECK_THROWS(p.min_exponent());
}

TEST_CASE("term accumulation and exponent range") {
  LaurentPolynomial p;
  p.add_term(-2, 3);
  p.add_term(5, -1);
  p.add_term(-2, 2);
  CHECK_FALSE(p.is_zero());
  CHECK(p.min_exponent() == -2);
  CHECK(p.max_exponent() == 5);
  CHECK(p.coeff(-2) == 5);
  CHECK(p.coeff(5) == -1);
  CHECK(p.coeff(0) == 0);
  CHECK(p.term_count() == 2);
  CHECK(p.str() == "5*z^-2 - z^5");
}

TEST_CASE("cancellation back to zero") {
  LaurentPolynomial p;
  p.add_term(-1, -1);
  CHECK(p.str() == "-z^-1");
  p.add_term(-1, 1);
  CHECK(p.is_zero());
}

TEST_CASE("zero coefficients are ignored") {
  LaurentPolynomial p;
  p.add_term(7, 0);
  CHECK(p.is_zero());
}

TEST_CASE("equality is structural on the normalized form") {
  LaurentPolynomial a, b;
  a.add_term(0, 2);
  a.add_term(4, 1);
  b.add_term(4, 1);
  b.add_term(0, 1);
  CHECK(a != b);
  b.add_term(0, 1);
  CHECK(a == b);
}

TEST_CASE("random add/cancel property") {
  std::mt19937_64 rng(313);
  for (int round = 0; round < 50; ++round) {
    LaurentPolynomial p;
    std::vector<std::pair<std::int64_t, long>> terms;
    for (int i = 0; i < 40; ++i) {
      const std::int64_t e = static_cast<std::int64_t>(rng() % 61) - 30;
      const long c = static_cast<long>(rng() % 9) - 4;
      terms.emplace_back(e, c);
      p.add_term(e, c);
    }
    for (const auto& [e, c] : terms) p.add_term(e, -c);
    CHECK(p.is_zero());
  }
}
