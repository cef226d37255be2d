#ifndef CYCLIDENT_INTMATH_HPP
#define CYCLIDENT_INTMATH_HPP

#include <cstdint>
#include <cstdlib>

namespace cyclident {

constexpr std::int64_t gcd_i64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Reduce x into [0, n) for n > 0, correct for negative x.
constexpr std::int64_t mod_floor(std::int64_t x, std::int64_t n) {
  std::int64_t r = x % n;
  return r < 0 ? r + n : r;
}

// (a * b) mod n without overflow, n > 0.
inline std::int64_t mulmod_i64(std::int64_t a, std::int64_t b, std::int64_t n) {
  __int128 p = static_cast<__int128>(mod_floor(a, n)) * mod_floor(b, n);
  return static_cast<std::int64_t>(p % n);
}

}  // namespace cyclident

#endif
