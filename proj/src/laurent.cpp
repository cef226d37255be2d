#include "cyclident/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace cyclident {

void LaurentPolynomial::add_term(std::int64_t exponent,
                                 const Integer& coefficient) {
  if (coefficient == 0) return;
  if (c_.empty()) {
    offset_ = exponent;
    c_.push_back(coefficient);
    normalized_ = true;
    return;
  }
  if (exponent < offset_) {
    c_.insert(c_.begin(), static_cast<std::size_t>(offset_ - exponent),
              Integer(0));
    offset_ = exponent;
  } else if (exponent >= offset_ + static_cast<std::int64_t>(c_.size())) {
    c_.resize(static_cast<std::size_t>(exponent - offset_) + 1, Integer(0));
  }
  c_[static_cast<std::size_t>(exponent - offset_)] += coefficient;
  normalized_ = false;
}

void LaurentPolynomial::normalize() const {
  if (normalized_) return;
  std::size_t lo = 0, hi = c_.size();
  while (hi > lo && c_[hi - 1] == 0) --hi;
  while (lo < hi && c_[lo] == 0) ++lo;
  if (lo == hi) {
    c_.clear();
    offset_ = 0;
  } else {
    c_.erase(c_.begin() + static_cast<std::ptrdiff_t>(hi), c_.end());
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lo));
    offset_ += static_cast<std::int64_t>(lo);
  }
  normalized_ = true;
}

bool LaurentPolynomial::is_zero() const {
  normalize();
  return c_.empty();
}

std::int64_t LaurentPolynomial::min_exponent() const {
  normalize();
  if (c_.empty()) throw std::logic_error("exponent range of zero");
  return offset_;
}

std::int64_t LaurentPolynomial::max_exponent() const {
  normalize();
  if (c_.empty()) throw std::logic_error("exponent range of zero");
  return offset_ + static_cast<std::int64_t>(c_.size()) - 1;
}

Integer LaurentPolynomial::coeff(std::int64_t exponent) const {
  normalize();
  if (c_.empty() || exponent < offset_ ||
      exponent >= offset_ + static_cast<std::int64_t>(c_.size())) {
    return Integer(0);
  }
  return c_[static_cast<std::size_t>(exponent - offset_)];
}

std::size_t LaurentPolynomial::term_count() const {
  normalize();
  std::size_t n = 0;
  for (const auto& c : c_) {
    if (c != 0) ++n;
  }
  return n;
}

bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  a.normalize();
  b.normalize();
  return a.offset_ == b.offset_ && a.c_ == b.c_;
}

std::string LaurentPolynomial::str() const {
  normalize();
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Integer a = c_[i];
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
      a = abs(a);
    }
    const std::int64_t e = offset_ + static_cast<std::int64_t>(i);
    if (a != 1 || e == 0) os << a.get_str();
    if (e != 0) {
      if (a != 1) os << "*";
      os << "z^" << e;
    }
  }
  return os.str();
}

}  // namespace cyclident
