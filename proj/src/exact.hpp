#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace pfun {

/* All combinatorial counting runs in exact arbitrary-precision integer or
 * rational arithmetic.  Floating point is confined to the analytic module. */
using BigInt = mpz_class;
using BigRat = mpq_class;

// num/den in lowest terms, denominator > 0
BigRat make_rat(const BigInt& num, const BigInt& den);
BigRat make_rat(long num, long den);

BigInt factorial(unsigned long n);

// C(n, j) for arbitrary integer n and j >= 0; zero when 0 <= n < j
BigInt binomial(const BigInt& n, unsigned long j);

// Kronecker symbol (a|b); agrees with the Legendre symbol for odd prime b
int kronecker(const BigInt& a, const BigInt& b);
int kronecker(long a, long b);

// floor(sqrt(n)), integer arithmetic only; throws std::domain_error for n < 0
BigInt isqrt(const BigInt& n);
long isqrt_long(long n);

BigInt lcm_1_to(int k);

}  // namespace pfun
