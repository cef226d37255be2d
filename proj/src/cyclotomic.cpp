#include "cyclident/cyclotomic.hpp"

#include <cassert>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "cyclident/intmath.hpp"

namespace cyclident {

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  unsigned m = n;
  for (unsigned p = 2; static_cast<unsigned long long>(p) * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

std::mutex g_phi_mutex;
std::map<unsigned, std::unique_ptr<const DensePolynomial>> g_phi_cache;

const DensePolynomial* lookup_phi(unsigned n) {
  std::lock_guard<std::mutex> lock(g_phi_mutex);
  auto it = g_phi_cache.find(n);
  return it == g_phi_cache.end() ? nullptr : it->second.get();
}

const DensePolynomial* store_phi(unsigned n, DensePolynomial value) {
  std::lock_guard<std::mutex> lock(g_phi_mutex);
  auto it = g_phi_cache.find(n);
  if (it == g_phi_cache.end()) {
    it = g_phi_cache
             .emplace(n, std::make_unique<const DensePolynomial>(std::move(value)))
             .first;
  }
  return it->second.get();
}

}  // namespace

const DensePolynomial& cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclotomic_polynomial(0)");
  if (const DensePolynomial* hit = lookup_phi(n)) return *hit;

  DensePolynomial value;
  if (n == 1) {
    value = DensePolynomial({Rational(-1), Rational(1)});  // x - 1
  } else {
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, all divisions exact.
    DensePolynomial divisor = DensePolynomial::constant(1);
    for (unsigned d = 1; d < n; ++d) {
      if (n % d == 0) divisor = divisor * cyclotomic_polynomial(d);
    }
    auto [q, r] = poly_divmod(DensePolynomial::power_minus_one(n), divisor);
    assert(r.is_zero());
    value = std::move(q);
  }
  return *store_phi(n, std::move(value));
}

std::int64_t multiplicative_order(std::int64_t n, std::int64_t a) {
  if (n < 1) throw std::invalid_argument("order requires N >= 1");
  const std::int64_t r = mod_floor(a, n);
  if (r == 0) return 1;
  return n / gcd_i64(n, r);
}

CyclotomicElement::CyclotomicElement(unsigned order, std::vector<Rational> raw)
    : order_(order), c_(std::move(raw)) {
  assert(order_ >= 1);
  c_.resize(order_, Rational(0));
  reduce();
}

void CyclotomicElement::reduce() {
  const DensePolynomial& phi = cyclotomic_polynomial(order_);
  const std::size_t deg_phi = static_cast<std::size_t>(phi.degree());

  bool needs_work = false;
  for (std::size_t j = deg_phi; j < c_.size(); ++j) {
    if (!c_[j].is_zero()) {
      needs_work = true;
      break;
    }
  }
  if (needs_work) {
    auto [q, r] = poly_divmod(DensePolynomial(c_), phi);
    (void)q;
    c_.assign(order_, Rational(0));
    for (std::size_t j = 0; j < r.coeffs().size(); ++j) c_[j] = r.coeffs()[j];
  }
  canonical_ = true;
}

CyclotomicElement CyclotomicElement::zero(unsigned order) {
  return CyclotomicElement(order, std::vector<Rational>(order, Rational(0)));
}

CyclotomicElement CyclotomicElement::constant(unsigned order,
                                              const Rational& value) {
  std::vector<Rational> v(order, Rational(0));
  v[0] = value;
  return CyclotomicElement(order, std::move(v));
}

CyclotomicElement CyclotomicElement::root_power(unsigned order,
                                                std::int64_t e) {
  std::vector<Rational> v(order, Rational(0));
  v[static_cast<std::size_t>(mod_floor(e, order))] = Rational(1);
  return CyclotomicElement(order, std::move(v));
}

CyclotomicElement CyclotomicElement::from_coeffs(unsigned order,
                                                 std::vector<Rational> coeffs) {
  if (coeffs.size() > order) {
    throw std::invalid_argument("coefficient vector longer than the order");
  }
  return CyclotomicElement(order, std::move(coeffs));
}

bool CyclotomicElement::is_zero() const {
  for (const auto& c : c_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool CyclotomicElement::is_rational() const {
  for (std::size_t j = 1; j < c_.size(); ++j) {
    if (!c_[j].is_zero()) return false;
  }
  return true;
}

std::optional<Rational> CyclotomicElement::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return c_[0];
}

CyclotomicElement CyclotomicElement::operator-() const {
  CyclotomicElement r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

namespace {

// Equal orders pass through; a rational constant embeds at the other
// operand's order. Anything else has no common embedding here.
std::pair<CyclotomicElement, CyclotomicElement> aligned(
    const CyclotomicElement& a, const CyclotomicElement& b) {
  if (a.order() == b.order()) return {a, b};
  if (auto r = a.as_rational()) {
    return {CyclotomicElement::constant(b.order(), *r), b};
  }
  if (auto r = b.as_rational()) {
    return {a, CyclotomicElement::constant(a.order(), *r)};
  }
  throw OrderMismatch();
}

}  // namespace

CyclotomicElement operator+(const CyclotomicElement& a,
                            const CyclotomicElement& b) {
  auto [x, y] = aligned(a, b);
  std::vector<Rational> v = x.coeffs();
  for (std::size_t j = 0; j < v.size(); ++j) v[j] += y.coeffs()[j];
  return CyclotomicElement(x.order(), std::move(v));
}

CyclotomicElement operator-(const CyclotomicElement& a,
                            const CyclotomicElement& b) {
  auto [x, y] = aligned(a, b);
  std::vector<Rational> v = x.coeffs();
  for (std::size_t j = 0; j < v.size(); ++j) v[j] -= y.coeffs()[j];
  return CyclotomicElement(x.order(), std::move(v));
}

CyclotomicElement operator*(const CyclotomicElement& a,
                            const CyclotomicElement& b) {
  auto [x, y] = aligned(a, b);
  const unsigned n = x.order();
  // Convolution in Z[x]/(x^N - 1); reduction mod Phi_N happens in the ctor.
  std::vector<Rational> v(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (x.coeffs()[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y.coeffs()[j].is_zero()) continue;
      v[(i + j) % n] += x.coeffs()[i] * y.coeffs()[j];
    }
  }
  return CyclotomicElement(n, std::move(v));
}

CyclotomicElement operator*(const Rational& s, CyclotomicElement a) {
  for (auto& c : a.c_) c *= s;
  return a;
}

bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) {
  if (a.order() == b.order()) return a.coeffs() == b.coeffs();
  auto ra = a.as_rational();
  auto rb = b.as_rational();
  return ra && rb && *ra == *rb;
}

CyclotomicElement mul_root_power(const CyclotomicElement& a, std::int64_t e) {
  const unsigned n = a.order();
  const std::size_t shift = static_cast<std::size_t>(mod_floor(e, n));
  std::vector<Rational> v(n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    if (!a.coeffs()[j].is_zero()) v[(j + shift) % n] = a.coeffs()[j];
  }
  return CyclotomicElement(n, std::move(v));
}

CyclotomicElement conjugate(const CyclotomicElement& a) {
  const unsigned n = a.order();
  std::vector<Rational> v(n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    if (!a.coeffs()[j].is_zero()) v[(n - j) % n] += a.coeffs()[j];
  }
  return CyclotomicElement(n, std::move(v));
}

CyclotomicElement inverse(const CyclotomicElement& a) {
  if (a.is_zero()) throw DivisionByZero();
  if (auto r = a.as_rational()) {
    return CyclotomicElement::constant(a.order(), r->inverse());
  }
  const DensePolynomial& phi = cyclotomic_polynomial(a.order());
  PolyExtGcd e = poly_ext_gcd(DensePolynomial(a.coeffs()), phi);
  // Phi_N is irreducible over Q, so a nonzero canonical representative
  // of lower degree is coprime to it.
  if (e.g != DensePolynomial::constant(1)) {
    throw std::logic_error("nonzero element not invertible mod Phi_N");
  }
  std::vector<Rational> v(a.order(), Rational(0));
  for (std::size_t j = 0; j < e.s.coeffs().size(); ++j) v[j] = e.s.coeffs()[j];
  return CyclotomicElement(a.order(), std::move(v));
}

CyclotomicElement doubled_real_part(const CyclotomicElement& a) {
  return a + conjugate(a);
}

std::string CyclotomicElement::str() const {
  std::ostringstream os;
  bool any = false;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j].is_zero()) continue;
    if (any) os << " + ";
    os << c_[j].str();
    if (j > 0) os << "*z^" << j;
    any = true;
  }
  if (!any) os << "0";
  os << " (N=" << order_ << ")";
  return os.str();
}

}  // namespace cyclident
