#ifndef CYCLIDENT_IDENTITIES_HPP
#define CYCLIDENT_IDENTITIES_HPP

#include <cstdint>

#include "cyclident/cyclotomic.hpp"
#include "cyclident/laurent.hpp"
#include "cyclident/numeric.hpp"
#include "cyclident/report.hpp"

namespace cyclident {

// Every verifier computes its left-hand side from scratch and compares
// against the closed form, exactly over Q(zeta_N) where the inputs are
// roots of unity and to certified multiprecision tolerance otherwise.
// Hypothesis violations come back as status = inapplicable; a false
// identity comes back as status = fail with the witness value. Neither
// is an exception: a counterexample is data.

struct HypothesisViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// S = sum_{k=1}^{n} (-1)^k q^{-k(n-k)/2} / (1 - q^k) with q = zeta_order^root_exp.
// Requires n odd and the order of q to exceed n; throws
// HypothesisViolation otherwise.
CyclotomicElement eq14_sum_exact(std::int64_t n, std::int64_t order,
                                 std::int64_t root_exp);

// Re(S) = -(n+1)/4, checked as S + conj(S) = -(n+1)/2 in the field.
IdentityReport verify_eq14_exact(std::int64_t n, std::int64_t order,
                                 std::int64_t root_exp);

// Same statement at q = e^{i theta} for angles with no exact home.
IdentityReport verify_eq14_numeric(std::int64_t n, const MpReal& theta,
                                   const PrecisionContext& ctx);

// sum (-1)^k cot(kx) sin(k(n-k)x) = (1-n)/2 for admissible real x.
IdentityReport verify_eq15(std::int64_t n, const MpReal& x,
                           const PrecisionContext& ctx);

// Both routes to Re(S): the direct sum and the half cosine-sum plus half
// cotangent-sum decomposition; checks that they agree.
IdentityReport verify_eq22(std::int64_t n, const MpReal& theta,
                           const PrecisionContext& ctx);

// sum_{k=1}^n (-1)^k cos(k(n-k) theta/2) = -1 (n odd).
IdentityReport verify_cos_sum_exact(std::int64_t n, std::int64_t order,
                                    std::int64_t root_exp);
IdentityReport verify_cos_sum_numeric(std::int64_t n, const MpReal& theta,
                                      const PrecisionContext& ctx);

// sum_{k=1}^n (-1)^k sin(k(n+1-k)x)/sin(kx) = -(n+1)/2. Exact mode uses the
// geometric expansion sum_{j=0}^{n-k} z^{k(2j+k-n)}, which has no poles.
IdentityReport verify_sine_ratio_exact(std::int64_t n, std::int64_t order,
                                       std::int64_t root_exp);
IdentityReport verify_sine_ratio_numeric(std::int64_t n, const MpReal& x,
                                         const PrecisionContext& ctx);

// The formal Laurent polynomial
//   sum_{1<=k<=n, 0<=j<(n-k)/2} (-1)^k z^{k(2j+k-n)}
// and a pass iff it is identically zero (stronger than any pointwise check).
IdentityReport verify_lemma21(std::int64_t n);
LaurentPolynomial lemma21_polynomial(std::int64_t n);

// sum_{k=1}^n (-1)^k k^{2m} B_{2m+1}((n-k)/2) = 0 for odd n, m >= 1.
IdentityReport verify_eq16(std::int64_t n, std::int64_t m);

// The coefficient-comparison form: the double sum
//   sum_k (-1)^k k^{2m} sum_{j=0}^m (2^{2j} B_{2j}/(2j)!) (n-k)^{2m-2j+1}/(2m-2j+1)!
// vanishes, and term-by-term it matches eq16's summands up to the factor
// (2m+1)!/2^{2m+1} and a (2m+1)(n-k)^{2m}/2^{2m+1} correction.
IdentityReport verify_cor11_expanded(std::int64_t n, std::int64_t m);

// Re( sum_{k=1}^n zeta^{k(km+l)/2} / (1 - zeta^{km}) ) = -(n+1)/4 for a
// primitive (mn+l)-th root, l = m (mod 2), n odd. Also re-derives the
// per-k sign reduction zeta^{k(km+l)/2} = (-1)^k zeta^{-mk(n-k)/2}.
IdentityReport verify_eq17(std::int64_t l, std::int64_t m, std::int64_t n,
                           std::int64_t root_exp);

// sum_{k=1}^{2n+1} zeta^{k(3k+1)/2} / (1 - zeta^{3k}) for a primitive
// (6n+4)-th root: the real part must be -(n+1)/2; the imaginary part is
// recorded (exactly when 4 | 6n+4) but does not gate pass/fail.
IdentityReport verify_eq18(std::int64_t n, std::int64_t root_exp);

// sum_{k=1}^{2n+1} (-1)^k w^{k(3k+1)/2} / (1 - w^{3k}) = -(n+1)/2 as a
// full equality, w a primitive (3n+2)-th root.
IdentityReport verify_eq11(std::int64_t n, std::int64_t root_exp);

// sum_{k=1}^{2n+1} ( y^k/(1+y^{3k}) + (-y)^k/(1-y^{3k}) ) = -n-1 as a
// full equality, y a primitive (6n+4)-th root.
IdentityReport verify_eq12(std::int64_t n, std::int64_t root_exp);

// Re( sum_{k=1}^{n-1} ( zeta^k/(1+zeta^{km})
//                       - (-1)^{n+delta} (-zeta)^k/(1-zeta^{km}) ) )
//   = (-1)^{n-1} floor(n/2)
// for a primitive (m(n-delta)-(-1)^delta)-th root, m, n >= 2.
IdentityReport verify_eq13(std::int64_t m, std::int64_t n, std::int64_t delta,
                           std::int64_t root_exp);

// Root exponents a for which verify_eq14_exact applies at this order
// (order of zeta_order^a exceeds n), ascending.
std::vector<std::int64_t> admissible_exponents_eq14(std::int64_t n,
                                                    std::int64_t order);
// a in [1, order) with gcd(a, order) = 1, ascending.
std::vector<std::int64_t> primitive_exponents(std::int64_t order);

}  // namespace cyclident

#endif
