#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "exact.hpp"
#include "series.hpp"

using namespace pfun;

TEST_CASE("make_rat canonicalizes") {
    BigRat r = make_rat(6L, -8L);
    CHECK(r.get_num() == -3);
    CHECK(r.get_den() == 4);
    CHECK(make_rat(0L, 5L) == 0);
    CHECK_THROWS_AS(make_rat(1L, 0L), std::domain_error);
}

TEST_CASE("rational arithmetic is exact") {
    std::mt19937 rng(12345u);
    std::uniform_int_distribution<long> d(-50, 50);
    for (int rep = 0; rep < 200; ++rep) {
        long a = d(rng), c = d(rng);
        long b = d(rng), e = d(rng);
        if (b == 0 || e == 0)
            continue;
        BigRat sum = make_rat(a, b) + make_rat(c, e);
        // (a/b + c/e) * b * e = a*e + c*b as an integer identity
        BigRat lhs = sum * BigInt(b) * BigInt(e);
        CHECK(lhs == BigRat(BigInt(a) * e + BigInt(c) * b));
    }
}

TEST_CASE("binomial") {
    CHECK(binomial(BigInt(5), 2) == 10);
    CHECK(binomial(BigInt(7), 0) == 1);
    CHECK(binomial(BigInt(9), 9) == 1);
    CHECK(binomial(BigInt(3), 5) == 0);  // 0 <= n < j
    CHECK(binomial(BigInt(40), 20) == BigInt("137846528820"));
}

TEST_CASE("kronecker") {
    CHECK(kronecker(1L, 3L) == 1);
    CHECK(kronecker(2L, 3L) == -1);
    for (long a = -7; a <= 7; ++a)
        CHECK(kronecker(a, 1L) == 1);
    CHECK(kronecker(3L, 9L) == 0);
}

TEST_CASE("kronecker matches residue search for odd primes") {
    for (long p : {3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L, 43L, 47L}) {
        for (long a = -p; a <= p; ++a) {
            int direct = 0;
            if (((a % p) + p) % p != 0) {
                direct = -1;
                for (long x = 1; x < p; ++x)
                    if (((x * x - a) % p + p) % p == 0) {
                        direct = 1;
                        break;
                    }
            }
            CAPTURE(a);
            CAPTURE(p);
            CHECK(kronecker(a, p) == direct);
        }
    }
}

TEST_CASE("isqrt") {
    CHECK(isqrt(BigInt(0)) == 0);
    CHECK(isqrt(BigInt(24)) == 4);
    CHECK(isqrt(BigInt(25)) == 5);
    CHECK_THROWS_AS(isqrt(BigInt(-1)), std::domain_error);
    std::mt19937_64 rng(777u);
    for (int rep = 0; rep < 200; ++rep) {
        BigInt n(static_cast<unsigned long>(rng() % 1000000007ULL));
        BigInt r = isqrt(n);
        CHECK(r * r <= n);
        CHECK((r + 1) * (r + 1) > n);
    }
}

TEST_CASE("lcm_1_to") {
    CHECK(lcm_1_to(1) == 1);
    CHECK(lcm_1_to(4) == 12);
    CHECK(lcm_1_to(5) == 60);
    CHECK(lcm_1_to(10) == 2520);
}

TEST_CASE("series_mul basics") {
    SeriesAtOne one_plus({BigRat(1), BigRat(1)}, 2);
    SeriesAtOne one_minus({BigRat(1), BigRat(-1)}, 2);
    SeriesAtOne prod = series_mul(one_plus, one_minus, 2);
    CHECK(prod == SeriesAtOne({BigRat(1), BigRat(0), BigRat(-1)}, 2));

    SeriesAtOne a({make_rat(2L, 3L), BigRat(5), make_rat(-1L, 7L)}, 2);
    CHECK(series_mul(a, SeriesAtOne::constant(BigRat(1), 2), 2) == a);

    SeriesAtOne p1({BigRat(1), BigRat(1)}, 1);
    CHECK(series_mul(p1, p1, 1) == SeriesAtOne({BigRat(1), BigRat(2)}, 1));  // t^2 dropped
}

TEST_CASE("series_inv basics") {
    SeriesAtOne geom = series_inv(SeriesAtOne({BigRat(1), BigRat(-1)}, 3), 3);
    CHECK(geom == SeriesAtOne({BigRat(1), BigRat(1), BigRat(1), BigRat(1)}, 3));

    SeriesAtOne half = series_inv(SeriesAtOne::constant(BigRat(2), 2), 2);
    CHECK(half == SeriesAtOne::constant(make_rat(1L, 2L), 2));

    SeriesAtOne sq({BigRat(1), BigRat(2), BigRat(1)}, 2);
    SeriesAtOne inv = series_inv(sq, 2);
    CHECK(inv == SeriesAtOne({BigRat(1), BigRat(-2), BigRat(3)}, 2));
    CHECK(series_mul(sq, inv, 2) == SeriesAtOne::constant(BigRat(1), 2));

    CHECK_THROWS_AS(series_inv(SeriesAtOne({BigRat(0), BigRat(1)}, 1), 1), std::domain_error);
}

TEST_CASE("series inverse round-trip on random inputs") {
    std::mt19937 rng(424242u);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 6);
    for (int rep = 0; rep < 60; ++rep) {
        const int order = 1 + static_cast<int>(rng() % 16);
        std::vector<BigRat> c(static_cast<size_t>(order) + 1);
        for (auto& x : c)
            x = make_rat(num(rng), den(rng));
        if (sgn(c[0]) == 0)
            c[0] = 1;
        SeriesAtOne a(std::move(c), order);
        CHECK(series_mul(a, series_inv(a, order), order) ==
              SeriesAtOne::constant(BigRat(1), order));
    }
}

TEST_CASE("series truncation preconditions") {
    SeriesAtOne s({BigRat(1), BigRat(1)}, 1);
    CHECK_THROWS_AS(series_mul(s, s, 3), std::invalid_argument);
    CHECK_THROWS_AS(series_inv(s, 2), std::invalid_argument);
}
