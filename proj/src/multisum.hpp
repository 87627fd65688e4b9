#pragma once

#include <vector>

#include "exact.hpp"
#include "partition.hpp"

namespace pfun {

/* Iterative evaluation of the (k-1)-fold multisums over the indices
 * (m_2, ..., m_k), where m_1 = n - k^2 - sum_{h=2..k} h*m_h is determined.
 * Every tuple visited contributes one summand; the engine walks the index
 * ranges as an odometer with an incrementally maintained residual and
 * suffix product, so the work per term stays O(1) beyond the product. */

struct OpCounter {
    BigInt additions{0};
    BigInt multiplications{0};
    BigInt total() const { return additions + multiplications; }
};

// partial assignment of the summation indices; m[j] is the multiplicity of j
struct MultiIndex {
    int k = 1;
    std::vector<long> m;  // indexed by part size, entries 2..k meaningful

    explicit MultiIndex(int k_) : k(k_), m(static_cast<size_t>(k_) + 1, 0) {}
    long m1(long n) const;
};

/* U_j(n,k) = floor((n - k^2 - sum_{h=j+1..k} h*m_h) / j), the inclusive upper
 * bound for index m_j once the higher indices are fixed. */
long upper_bound_U(long n, int k, int j, const MultiIndex& fixed);
long upper_bound_U(long n, int k, int j);  // no higher index fixed

/* D(n,k) via the multisum: each summand is (1+m_1) * prod_{i=2..k} (m_i+1),
 * a positive integer.  An attached counter tallies every big-integer add and
 * multiply spent on summand formation and accumulation (loop bookkeeping is
 * not counted). */
BigInt D_multisum(long n, int k, OpCounter* counter = nullptr);

// p(n) = sum_{k=1..isqrt(n)} D_multisum(n,k), n >= 1
BigInt p_multisum(long n, OpCounter* counter = nullptr);

// independent route: sum over partitions of n-k^2 with parts <= k of prod (m_i+1)
BigInt D_partition_sum(long n, int k);

// number of index tuples the multisum visits, and those with m_k > 0
BigInt term_count(long n, int k);
BigInt terms_with_mk_positive(long n, int k);

/* Map a partition with parts <= k to a length-k partition with gaps >= 2 and
 * weight |lambda| + k^2: pad the conjugate to length k and add the staircase
 * 2(k-j)+1.  Throws std::domain_error when a part exceeds k. */
Partition rr_bijection(const Partition& lambda, int k);

// Durfee-order-k partitions of n with all parts distinct
BigInt delta_multisum(long n, int k);

// signed multisum equal to the even-minus-odd rank count r(n,k)
BigInt mock_r_multisum(long n, int k);

// coefficient of q^n in the third-order mock theta series, n >= 1
BigInt mock_f_coeff(long n);

}  // namespace pfun
