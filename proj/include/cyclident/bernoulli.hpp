#ifndef CYCLIDENT_BERNOULLI_HPP
#define CYCLIDENT_BERNOULLI_HPP

#include <vector>

#include "cyclident/polynomial.hpp"
#include "cyclident/rational.hpp"

namespace cyclident {

// B_j in the B_1 = -1/2 convention, from the recurrence
// sum_{k=0}^{n} C(n+1, k) B_k = 0 for n >= 1. Lazily extended and cached;
// safe for concurrent callers.
Rational bernoulli_number(unsigned j);

// [B_0, ..., B_max_index]
std::vector<Rational> bernoulli_numbers(unsigned max_index);

// B_j(x) = sum_{i=0}^{j} C(j, i) B_i x^{j-i}, ascending coefficients.
// Monic of degree j with constant term B_j. Cached per degree.
DensePolynomial bernoulli_polynomial(unsigned j);

// Exact Horner evaluation of B_j at a rational argument.
Rational eval_bernoulli(unsigned j, const Rational& x);

}  // namespace cyclident

#endif
