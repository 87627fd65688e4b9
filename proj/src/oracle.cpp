#include "oracle.hpp"

#include <mutex>

namespace pfun {

namespace {
std::mutex g_euler_mutex;
std::vector<BigInt> g_euler_table;  // p(0), p(1), ...
}  // namespace

BigInt p_euler(long n) {
    if (n < 0)
        return 0;
    std::lock_guard<std::mutex> lock(g_euler_mutex);
    if (g_euler_table.empty())
        g_euler_table.push_back(1);
    /* p(n) = sum_{j>=1} (-1)^{j-1} [ p(n - j(3j-1)/2) + p(n - j(3j+1)/2) ] */
    while (static_cast<long>(g_euler_table.size()) <= n) {
        const long m = static_cast<long>(g_euler_table.size());
        BigInt acc = 0;
        for (long j = 1;; ++j) {
            const long g1 = j * (3 * j - 1) / 2;
            const long g2 = j * (3 * j + 1) / 2;
            if (g1 > m)
                break;
            const bool plus = (j % 2 == 1);
            if (plus)
                acc += g_euler_table[static_cast<size_t>(m - g1)];
            else
                acc -= g_euler_table[static_cast<size_t>(m - g1)];
            if (g2 <= m) {
                if (plus)
                    acc += g_euler_table[static_cast<size_t>(m - g2)];
                else
                    acc -= g_euler_table[static_cast<size_t>(m - g2)];
            }
        }
        g_euler_table.push_back(acc);
    }
    return g_euler_table[static_cast<size_t>(n)];
}

BigInt D_brute(long n, int k) {
    if (n < 0)
        return 0;
    if (n == 0)
        return k == 0 ? 1 : 0;
    if (k <= 0 || static_cast<long>(k) * k > n)
        return 0;
    BigInt count = 0;
    for_each_partition(n, 0, [&](const std::vector<int>& parts) {
        int d = 0;
        while (d < static_cast<int>(parts.size()) && parts[static_cast<size_t>(d)] >= d + 1)
            ++d;
        if (d == k)
            ++count;
    });
    return count;
}

std::vector<BigInt> genfun_D(int k, long N) {
    if (k < 1)
        throw std::invalid_argument("genfun_D: k must be positive");
    const long k2 = static_cast<long>(k) * k;
    if (N < k2)
        throw std::invalid_argument("genfun_D: N below k^2");
    std::vector<BigInt> a(static_cast<size_t>(N) + 1);
    a[static_cast<size_t>(k2)] = 1;
    /* dividing by (1-q^j) is the in-place prefix recurrence a[i] += a[i-j] */
    for (int j = 1; j <= k; ++j)
        for (int pass = 0; pass < 2; ++pass)
            for (long i = j; i <= N; ++i)
                a[static_cast<size_t>(i)] += a[static_cast<size_t>(i - j)];
    return a;
}

std::vector<BigInt> genfun_mock(long N) {
    if (N < 0)
        throw std::invalid_argument("genfun_mock: negative order");
    std::vector<BigInt> acc(static_cast<size_t>(N) + 1);
    std::vector<BigInt> t(static_cast<size_t>(N) + 1);
    t[0] = 1;
    acc[0] = 1;  // k = 0 term
    const long kmax = isqrt_long(N);
    for (long k = 1; k <= kmax; ++k) {
        /* t <- t / (1+q^k)^2, via b[i] = a[i] - b[i-k] run twice */
        for (int pass = 0; pass < 2; ++pass)
            for (long i = k; i <= N; ++i)
                t[static_cast<size_t>(i)] -= t[static_cast<size_t>(i - k)];
        const long k2 = k * k;
        for (long n = k2; n <= N; ++n)
            acc[static_cast<size_t>(n)] += t[static_cast<size_t>(n - k2)];
    }
    return acc;
}

BigInt rank_parity_D(long n, int k) {
    if (n < 1 || k < 1)
        throw std::invalid_argument("rank_parity_D: requires n >= 1, k >= 1");
    BigInt acc = 0;
    for_each_partition(n, 0, [&](const std::vector<int>& parts) {
        int d = 0;
        while (d < static_cast<int>(parts.size()) && parts[static_cast<size_t>(d)] >= d + 1)
            ++d;
        if (d != k)
            return;
        const long r = parts[0] - static_cast<long>(parts.size());
        if (r % 2 == 0)
            ++acc;
        else
            --acc;
    });
    return acc;
}

BigInt q_distinct(long n) {
    if (n < 0)
        return 0;
    std::vector<BigInt> f(static_cast<size_t>(n) + 1);
    f[0] = 1;
    for (long j = 1; j <= n; ++j)
        for (long w = n; w >= j; --w)  // each part at most once
            f[static_cast<size_t>(w)] += f[static_cast<size_t>(w - j)];
    return f[static_cast<size_t>(n)];
}

BigInt q_odd(long n) {
    if (n < 0)
        return 0;
    std::vector<BigInt> f(static_cast<size_t>(n) + 1);
    f[0] = 1;
    for (long j = 1; j <= n; j += 2)
        for (long w = j; w <= n; ++w)
            f[static_cast<size_t>(w)] += f[static_cast<size_t>(w - j)];
    return f[static_cast<size_t>(n)];
}

BigInt count_partitions_max_part(long n, int max_part) {
    if (n < 0)
        return 0;
    if (n == 0)
        return 1;
    if (max_part <= 0)
        return 0;
    std::vector<BigInt> f(static_cast<size_t>(n) + 1);
    f[0] = 1;
    for (long j = 1; j <= max_part; ++j)
        for (long w = j; w <= n; ++w)
            f[static_cast<size_t>(w)] += f[static_cast<size_t>(w - j)];
    return f[static_cast<size_t>(n)];
}

BigInt r1_count(long n, int k) {
    if (k < 1)
        throw std::invalid_argument("r1_count: k must be positive");
    return count_partitions_max_part(n - static_cast<long>(k) * k, k);
}

BigInt r2_count(long n, int k) {
    if (k < 1)
        throw std::invalid_argument("r2_count: k must be positive");
    return count_partitions_max_part(n - static_cast<long>(k) * k - k, k);
}

BigInt r1_total(long n) {
    BigInt acc = 0;
    for (long k = 1; k * k <= n; ++k)
        acc += r1_count(n, static_cast<int>(k));
    return acc;
}

}  // namespace pfun
