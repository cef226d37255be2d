#include "cyclident/bernoulli.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace cyclident {

namespace {

std::mutex g_bernoulli_mutex;
std::vector<Rational> g_bernoulli{Rational(1), Rational(-1, 2)};

std::mutex g_poly_mutex;
std::map<unsigned, std::unique_ptr<const DensePolynomial>> g_poly_cache;

}  // namespace

Rational bernoulli_number(unsigned j) {
  std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
  while (g_bernoulli.size() <= j) {
    const unsigned long n = g_bernoulli.size();
    if (n % 2 == 1) {
      g_bernoulli.emplace_back(0);  // odd index >= 3
      continue;
    }
    Rational acc(0);
    for (unsigned long k = 0; k < n; ++k) {
      acc += Rational(binomial(n + 1, k)) * g_bernoulli[k];
    }
    g_bernoulli.push_back(-acc / Rational(Integer(n + 1)));
  }
  return g_bernoulli[j];
}

std::vector<Rational> bernoulli_numbers(unsigned max_index) {
  bernoulli_number(max_index);
  std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
  return {g_bernoulli.begin(), g_bernoulli.begin() + max_index + 1};
}

DensePolynomial bernoulli_polynomial(unsigned j) {
  {
    std::lock_guard<std::mutex> lock(g_poly_mutex);
    auto it = g_poly_cache.find(j);
    if (it != g_poly_cache.end()) return *it->second;
  }
  std::vector<Rational> asc(j + 1, Rational(0));
  for (unsigned i = 0; i <= j; ++i) {
    asc[j - i] = Rational(binomial(j, i)) * bernoulli_number(i);
  }
  DensePolynomial p(std::move(asc));
  std::lock_guard<std::mutex> lock(g_poly_mutex);
  auto it = g_poly_cache.find(j);
  if (it == g_poly_cache.end()) {
    it = g_poly_cache.emplace(j, std::make_unique<const DensePolynomial>(p)).first;
  }
  return *it->second;
}

Rational eval_bernoulli(unsigned j, const Rational& x) {
  return bernoulli_polynomial(j).eval(x);
}

}  // namespace cyclident
