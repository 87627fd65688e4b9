#pragma once

#include "exact.hpp"
#include "real.hpp"

namespace pfun {

/* sign * e^{i pi rho} with rho an exact rational reduced into [0,2); for the
 * eta-multiplier values used here, 12k*rho is an integer. */
struct RootOfUnity {
    int sign = 1;
    BigRat rho;
};

/* The 24k-th root of unity attached to (h,k) in the circle-method series,
 * evaluated from the two-branch closed form with Kronecker symbols and any
 * h' solving h*h' = -1 (mod k).  Requires 0 <= h < k, gcd(h,k) = 1. */
RootOfUnity omega(long h, long k);

// default working precision in decimal digits: max(60, 30 + ceil(1.2 sqrt n))
int default_digits(long n);

/* Kloosterman-type sum A_k(n) = sum_h omega(h,k) e^{-2 pi i n h / k}.  The
 * angles are reduced exactly as rationals before any trigonometry; the
 * imaginary residue must stay below 10^-(digits-5) or a precision error is
 * thrown. */
Real kloosterman_A(long n, long k, int digits);

/* k-th term of the convergent series for p(n):
 * sqrt(k) A_k(n) / (pi sqrt 2) * d/dn [ sinh(c_k sqrt(x)) / sqrt(x) ]
 * with x = n - 1/24 and c_k = (pi/k) sqrt(2/3). */
Real hrr_term(long n, long k, int digits);

// first term of the series (k = 1)
Real p_R(long n, int digits);

// the same value via the printed cosh/sinh closed form; cross-check route
Real p_R_printed(long n, int digits);

/* p(n) from the truncated series, rounded to the nearest integer.  Default
 * truncation isqrt(n)+5 terms; if the sum lands 1/4 or farther from an
 * integer, one retry with more terms and digits is made before giving up. */
BigInt hrr_p(long n, int terms = 0, int digits = 0);

/* Conjectured bound on |p(n) - p_D(n)|:
 * 2 (n/4)^{nu-1} / (nu Gamma(nu+1) Gamma(nu/2+1) Gamma(nu/2)),
 * nu = (27/50)(2 + sqrt n); evaluated through log-Gamma. */
Real conjecture_bound(long n, int digits);

// Rademacher's printed majorant for |p(n) - p_R(n)|, n >= 2
Real rademacher_bound(long n, int digits);

// Lehner's asymptotic for r1(n): sqrt(15+3 sqrt 5) (60n-1)^{-3/4} e^{pi sqrt(60n-1)/15}
Real lehner_estimate(long n, int digits);

}  // namespace pfun
