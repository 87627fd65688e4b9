#include "exact.hpp"

namespace pfun {

BigRat make_rat(const BigInt& num, const BigInt& den) {
    if (sgn(den) == 0)
        throw std::domain_error("make_rat: zero denominator");
    BigRat r(num, den);
    r.canonicalize();
    return r;
}

BigRat make_rat(long num, long den) {
    return make_rat(BigInt(num), BigInt(den));
}

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(const BigInt& n, unsigned long j) {
    BigInt r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), j);
    return r;
}

int kronecker(const BigInt& a, const BigInt& b) {
    return mpz_kronecker(a.get_mpz_t(), b.get_mpz_t());
}

int kronecker(long a, long b) {
    return kronecker(BigInt(a), BigInt(b));
}

BigInt isqrt(const BigInt& n) {
    if (sgn(n) < 0)
        throw std::domain_error("isqrt: negative argument");
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

long isqrt_long(long n) {
    return isqrt(BigInt(n)).get_si();
}

BigInt lcm_1_to(int k) {
    BigInt l = 1;
    for (int j = 2; j <= k; ++j)
        mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), static_cast<unsigned long>(j));
    return l;
}

}  // namespace pfun
