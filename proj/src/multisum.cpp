#include "multisum.hpp"

#include <vector>

namespace pfun {

long MultiIndex::m1(long n) const {
    long r = n - static_cast<long>(k) * k;
    for (int h = 2; h <= k; ++h)
        r -= static_cast<long>(h) * m[static_cast<size_t>(h)];
    return r;
}

long upper_bound_U(long n, int k, int j, const MultiIndex& fixed) {
    if (j < 2 || j > k)
        throw std::invalid_argument("upper_bound_U: j out of range");
    long num = n - static_cast<long>(k) * k;
    for (int h = j + 1; h <= k; ++h)
        num -= static_cast<long>(h) * fixed.m[static_cast<size_t>(h)];
    if (num < 0)
        throw std::invalid_argument("upper_bound_U: fixed indices exceed the residual");
    return num / j;
}

long upper_bound_U(long n, int k, int j) {
    return upper_bound_U(n, k, j, MultiIndex(k));
}

namespace {

/* Explicit odometer over the index tuple (m_k, ..., m_2): no recursion, and
 * the residual n - k^2 - sum h*m_h is maintained incrementally, so nothing is
 * recomputed from scratch when an index carries.  Each level j in 3..k keeps
 * a policy state (suffix product, parity, ...) derived from the level above;
 * the innermost index m_2 runs in a flat loop with m_1 read off the residual.
 *
 * A policy provides: State, top(), lower(j), step(above, j, m_j), and
 * inner(state, rem) which consumes the m_2 range for one prefix.
 */
template <class Policy>
void run_odometer(int k, long rem_total, Policy& pol) {
    if (k == 2) {
        pol.inner(pol.top(), rem_total);
        return;
    }
    const size_t n = static_cast<size_t>(k) + 2;
    std::vector<long> m(n, 0);
    std::vector<long> rem(n, 0);
    std::vector<typename Policy::State> st(n);
    rem[static_cast<size_t>(k) + 1] = rem_total;
    st[static_cast<size_t>(k) + 1] = pol.top();

    int j = k;
    bool descending = true;
    while (true) {
        if (descending) {
            if (j == 2) {
                pol.inner(st[3], rem[3]);
                descending = false;
                j = 3;
                continue;
            }
            const long lb = pol.lower(j, k);
            if (lb * j > rem[static_cast<size_t>(j) + 1]) {
                // no admissible m_j under this prefix: carry one level up
                descending = false;
                ++j;
                continue;
            }
            m[static_cast<size_t>(j)] = lb;
            rem[static_cast<size_t>(j)] = rem[static_cast<size_t>(j) + 1] - lb * j;
            st[static_cast<size_t>(j)] =
                pol.step(st[static_cast<size_t>(j) + 1], j, lb);
            --j;
        } else {
            if (j > k)
                return;  // the outermost index is exhausted
            const long next = m[static_cast<size_t>(j)] + 1;
            if (next * j > rem[static_cast<size_t>(j) + 1]) {
                ++j;
                continue;
            }
            m[static_cast<size_t>(j)] = next;
            rem[static_cast<size_t>(j)] = rem[static_cast<size_t>(j) + 1] - next * j;
            st[static_cast<size_t>(j)] =
                pol.step(st[static_cast<size_t>(j) + 1], j, next);
            descending = true;
            --j;
        }
    }
}

/* Summand (1+m_1) * prod_{i=2..k} (m_i+1).  Accounting mirrors evaluating the
 * sum by hand: one machine multiplication per summand for (m_1+1)(m_2+1), one
 * more against the suffix product when it is nontrivial, one multiplication
 * per carry extending that product, and T-1 additions to accumulate T terms. */
struct DSumPolicy {
    struct State {
        BigInt prod{1};
        bool is_one = true;
    };

    BigInt acc{0};
    unsigned long long terms = 0;
    unsigned long long deep_terms = 0;
    unsigned long long carry_muls = 0;

    State top() const { return State{}; }
    static long lower(int, int) { return 0; }

    State step(const State& above, int /*j*/, long mj) {
        if (mj == 0)
            return above;
        ++carry_muls;
        return State{BigInt(above.prod * static_cast<unsigned long>(mj + 1)), false};
    }

    void inner(const State& s, long rem) {
        for (long m2 = 0; 2 * m2 <= rem; ++m2) {
            const long m1 = rem - 2 * m2;
            // every summand is a positive integer; a violation means broken bounds
            if (m1 < 0)
                throw std::logic_error("D_multisum: negative residual in a visited term");
            const unsigned long summand =
                static_cast<unsigned long>(m1 + 1) * static_cast<unsigned long>(m2 + 1);
            ++terms;
            if (s.is_one) {
                mpz_add_ui(acc.get_mpz_t(), acc.get_mpz_t(), summand);
            } else {
                ++deep_terms;
                mpz_addmul_ui(acc.get_mpz_t(), s.prod.get_mpz_t(), summand);
            }
        }
    }

    void charge(OpCounter* counter) const {
        if (!counter)
            return;
        counter->multiplications +=
            static_cast<unsigned long>(terms + deep_terms + carry_muls);
        if (terms > 1)
            counter->additions += static_cast<unsigned long>(terms - 1);
    }
};

}  // namespace

BigInt D_multisum(long n, int k, OpCounter* counter) {
    if (k < 1)
        throw std::invalid_argument("D_multisum: k must be positive");
    const long k2 = static_cast<long>(k) * k;
    if (n < k2)
        return 0;
    if (k == 1)
        return n;  // single term with m_1 = n-1; no multiplications
    DSumPolicy pol;
    run_odometer(k, n - k2, pol);
    pol.charge(counter);
    return pol.acc;
}

BigInt p_multisum(long n, OpCounter* counter) {
    if (n < 1)
        throw std::invalid_argument("p_multisum: n must be positive");
    BigInt acc = 0;
    long summands = 0;
    for (long k = 1; k * k <= n; ++k) {
        acc += D_multisum(n, static_cast<int>(k), counter);
        ++summands;
    }
    if (counter && summands > 1)
        counter->additions += summands - 1;
    return acc;
}

BigInt D_partition_sum(long n, int k) {
    if (k < 1)
        throw std::invalid_argument("D_partition_sum: k must be positive");
    const long k2 = static_cast<long>(k) * k;
    if (n < k2)
        return 0;
    BigInt acc = 0;
    for_each_partition(n - k2, k, [&](const std::vector<int>& parts) {
        BigInt prod = 1;
        size_t i = 0;
        while (i < parts.size()) {
            size_t j = i;
            while (j < parts.size() && parts[j] == parts[i])
                ++j;
            prod *= static_cast<unsigned long>(j - i + 1);  // m_i + 1
            i = j;
        }
        acc += prod;
    });
    return acc;
}

namespace {

// counts tuples, split by whether the outermost index m_k is zero
struct CountPolicy {
    struct State {
        bool mk_positive = false;
    };

    int k;
    BigInt total{0};
    BigInt with_mk_positive{0};

    explicit CountPolicy(int k_) : k(k_) {}

    State top() const { return State{}; }
    static long lower(int, int) { return 0; }

    State step(const State& above, int j, long mj) {
        if (j == k)
            return State{mj > 0};
        return above;
    }

    void inner(const State& s, long rem) {
        const unsigned long count = static_cast<unsigned long>(rem / 2 + 1);
        mpz_add_ui(total.get_mpz_t(), total.get_mpz_t(), count);
        if (k == 2) {
            // here m_2 is the outermost index; all but the m_2 = 0 tuple count
            mpz_add_ui(with_mk_positive.get_mpz_t(), with_mk_positive.get_mpz_t(), count - 1);
        } else if (s.mk_positive) {
            mpz_add_ui(with_mk_positive.get_mpz_t(), with_mk_positive.get_mpz_t(), count);
        }
    }
};

}  // namespace

BigInt term_count(long n, int k) {
    if (k < 1)
        throw std::invalid_argument("term_count: k must be positive");
    const long k2 = static_cast<long>(k) * k;
    if (n < k2)
        return 0;
    if (k == 1)
        return 1;
    CountPolicy pol(k);
    run_odometer(k, n - k2, pol);
    return pol.total;
}

BigInt terms_with_mk_positive(long n, int k) {
    if (k < 1)
        throw std::invalid_argument("terms_with_mk_positive: k must be positive");
    const long k2 = static_cast<long>(k) * k;
    if (n < k2)
        return 0;
    if (k == 1)
        return n > 1 ? 1 : 0;  // the single tuple has m_1 = n-1
    CountPolicy pol(k);
    run_odometer(k, n - k2, pol);
    return pol.with_mk_positive;
}

Partition rr_bijection(const Partition& lambda, int k) {
    if (k < 1)
        throw std::invalid_argument("rr_bijection: k must be positive");
    if (!lambda.empty() && lambda.part(1) > k)
        throw std::domain_error("rr_bijection: a part exceeds k");
    Partition nu = conjugate(lambda);
    std::vector<int> mu;
    for (int j = 1; j <= k; ++j) {
        const int nj = j <= nu.length() ? nu.part(j) : 0;
        mu.push_back(nj + 2 * (k - j) + 1);
    }
    return Partition(std::move(mu));
}

namespace {

/* Distinct-part multisum: m_k runs from 0, the indices m_{k-1}..m_2 from 1,
 * and a tuple contributes 2^{b_1+...+b_k} when m_1 != 0, where b_i = 1
 * exactly when m_i > 1. */
struct DeltaPolicy {
    struct State {
        int bits = 0;
    };

    int k;
    BigInt acc{0};

    explicit DeltaPolicy(int k_) : k(k_) {}

    State top() const { return State{}; }
    static long lower(int j, int k) { return j == k ? 0 : 1; }

    State step(const State& above, int /*j*/, long mj) {
        return State{above.bits + (mj > 1 ? 1 : 0)};
    }

    void inner(const State& s, long rem) {
        const long lb = (k == 2) ? 0 : 1;
        for (long m2 = lb; 2 * m2 <= rem; ++m2) {
            const long m1 = rem - 2 * m2;
            if (m1 == 0)
                continue;
            const int e = s.bits + (m2 > 1 ? 1 : 0) + (m1 > 1 ? 1 : 0);
            mpz_add_ui(acc.get_mpz_t(), acc.get_mpz_t(), 1UL << e);
        }
    }
};

}  // namespace

BigInt delta_multisum(long n, int k) {
    if (k < 1)
        throw std::invalid_argument("delta_multisum: k must be positive");
    const long k2 = static_cast<long>(k) * k;
    if (n < k2)
        return 0;
    if (k == 1) {
        /* The 1x1 square alone is the one distinct partition with m_1 = 0;
         * otherwise the count is 2^{b_1}: (n) always, and (n-1,1) once the
         * largest part can exceed 1. */
        if (n == 1)
            return 1;
        return n == 2 ? 1 : 2;
    }
    DeltaPolicy pol(k);
    run_odometer(k, n - k2, pol);
    return pol.acc;
}

namespace {

// signed multisum: (-1)^{m_1+...+m_k} * prod_{i=1..k} (m_i+1)
struct MockPolicy {
    struct State {
        BigInt prod{1};
        int parity = 0;
    };

    BigInt acc{0};

    State top() const { return State{}; }
    static long lower(int, int) { return 0; }

    State step(const State& above, int /*j*/, long mj) {
        if (mj == 0)
            return above;
        return State{BigInt(above.prod * static_cast<unsigned long>(mj + 1)),
                     (above.parity + static_cast<int>(mj)) & 1};
    }

    void inner(const State& s, long rem) {
        for (long m2 = 0; 2 * m2 <= rem; ++m2) {
            const long m1 = rem - 2 * m2;
            const unsigned long summand =
                static_cast<unsigned long>(m1 + 1) * static_cast<unsigned long>(m2 + 1);
            if ((s.parity + m2 + m1) % 2 == 0)
                mpz_addmul_ui(acc.get_mpz_t(), s.prod.get_mpz_t(), summand);
            else
                mpz_submul_ui(acc.get_mpz_t(), s.prod.get_mpz_t(), summand);
        }
    }
};

}  // namespace

BigInt mock_r_multisum(long n, int k) {
    if (k < 1)
        throw std::invalid_argument("mock_r_multisum: k must be positive");
    const long k2 = static_cast<long>(k) * k;
    if (n < k2)
        throw std::invalid_argument("mock_r_multisum: requires n >= k^2");
    if (k == 1) {
        const long m1 = n - 1;
        BigInt v(m1 + 1);
        return (m1 % 2 == 0) ? v : BigInt(-v);
    }
    MockPolicy pol;
    run_odometer(k, n - k2, pol);
    return pol.acc;
}

BigInt mock_f_coeff(long n) {
    if (n < 1)
        throw std::invalid_argument("mock_f_coeff: n must be positive");
    BigInt acc = 0;
    for (long k = 1; k * k <= n; ++k)
        acc += mock_r_multisum(n, static_cast<int>(k));
    return acc;
}

}  // namespace pfun
