#pragma once

#include <vector>

#include "exact.hpp"
#include "partition.hpp"

namespace pfun {

/* Ground-truth counting routes: direct enumeration, Euler's pentagonal
 * recurrence, and exact q-series expansion.  Every fast path in the toolkit
 * is validated against these. */

// p(n) by the pentagonal-number recurrence; memoized
BigInt p_euler(long n);

// partitions of n with Durfee square of side k, by enumeration; D(0,0) = 1
BigInt D_brute(long n, int k);

/* Coefficients of q^{k^2} / prod_{j=1..k} (1-q^j)^2 through q^N, by iterated
 * in-place convolution.  Index n of the result is the coefficient of q^n
 * (zero below k^2).  Requires N >= k^2. */
std::vector<BigInt> genfun_D(int k, long N);

/* Coefficients through q^N of sum_{k>=0} q^{k^2} / prod_{j=1..k} (1+q^j)^2,
 * the third-order mock theta series; the sum truncates at k = isqrt(N). */
std::vector<BigInt> genfun_mock(long N);

// even-rank minus odd-rank count over Durfee-order-k partitions of n
BigInt rank_parity_D(long n, int k);

BigInt q_distinct(long n);  // partitions of n into distinct parts
BigInt q_odd(long n);       // partitions of n into odd parts

// partitions of n with every part <= max_part, by dynamic programming
BigInt count_partitions_max_part(long n, int max_part);

/* r1(n,k): partitions of n with exactly k parts mutually differing by >= 2;
 * equals the number of partitions of n-k^2 with parts <= k.  r2 additionally
 * requires every part to exceed 1.  Both via restricted-partition DP. */
BigInt r1_count(long n, int k);
BigInt r2_count(long n, int k);
BigInt r1_total(long n);  // sum of r1_count(n,k) over 1 <= k <= isqrt(n)

}  // namespace pfun
