#include "analytic.hpp"

#include <numeric>

namespace pfun {

namespace {

// reduce an exact rational into [0, 2)
BigRat reduce_mod2(const BigRat& r) {
    BigInt fl;
    mpz_fdiv_q(fl.get_mpz_t(), r.get_num().get_mpz_t(), BigInt(2 * r.get_den()).get_mpz_t());
    BigRat out = r - 2 * BigRat(fl);
    return out;
}

}  // namespace

RootOfUnity omega(long h, long k) {
    if (k < 1 || h < 0 || h >= k)
        throw std::domain_error("omega: requires 0 <= h < k");
    if (std::gcd(h, k) != 1)
        throw std::domain_error("omega: h and k must be coprime");
    RootOfUnity w;
    if (k == 1) {
        w.sign = 1;
        w.rho = 0;
        return w;
    }
    BigInt inv;
    if (mpz_invert(inv.get_mpz_t(), BigInt(h).get_mpz_t(), BigInt(k).get_mpz_t()) == 0)
        throw std::domain_error("omega: h not invertible mod k");
    const BigInt hp = BigInt(k) - inv;  // least positive solution of h h' = -1 (mod k)
    const BigInt hh(h), kk(k);
    const BigInt core = 2 * hh - hp + hh * hh * hp;
    // (k - 1/k) * core = (k^2 - 1) core / k
    const BigRat frac = make_rat((kk * kk - 1) * core, kk);
    BigRat e;
    if (k % 2 == 1) {
        w.sign = kronecker(BigInt(-h), kk);
        e = BigRat(3 * (kk - 1)) + frac;
    } else {
        // k even forces h odd
        w.sign = kronecker(-kk, hh);
        e = BigRat(3 * (2 - hh * kk - hh)) + frac;
    }
    if (w.sign == 0)
        throw std::logic_error("omega: vanishing Kronecker symbol");
    /* The exponent carries an overall minus sign: with it, these values agree
     * with e^{pi i s(h,k)} (Dedekind sums) for every coprime pair, and the
     * series then converges to p(n); without it they do not. */
    w.rho = reduce_mod2(-e / 12);
    return w;
}

int default_digits(long n) {
    if (n < 0)
        n = 0;
    // least m with 25 m^2 >= 36 n, i.e. m = ceil(1.2 sqrt n), in integers
    long m = isqrt_long(36 * n / 25);
    while (25 * m * m < 36 * n)
        ++m;
    return std::max(60L, 30 + m);
}

Real kloosterman_A(long n, long k, int digits) {
    if (k < 1 || n < 0)
        throw std::invalid_argument("kloosterman_A: requires k >= 1, n >= 0");
    Real re = Real::of(0L, digits);
    Real im = Real::of(0L, digits);
    const Real pi = Real::pi(digits);
    for (long h = 0; h < k; ++h) {
        if (std::gcd(h, k) != 1)
            continue;  // also skips h = 0 except when k = 1
        RootOfUnity w = omega(h, k);
        // omega(h,k) e^{-2 pi i n h / k} = sign * e^{i pi theta}
        BigRat theta = reduce_mod2(w.rho - make_rat(2 * BigInt(n) * h, BigInt(k)));
        Real ang(digits);
        mpfr_mul_q(ang.raw(), pi.raw(), theta.get_mpq_t(), MPFR_RNDN);
        Real c(digits), s(digits);
        mpfr_cos(c.raw(), ang.raw(), MPFR_RNDN);
        mpfr_sin(s.raw(), ang.raw(), MPFR_RNDN);
        if (w.sign > 0) {
            re = re + c;
            im = im + s;
        } else {
            re = re - c;
            im = im - s;
        }
    }
    const Real tol = Real::pow10(-(digits - 5), digits);
    if (!(im.abs() < tol))
        throw std::runtime_error("kloosterman_A: imaginary residue above threshold");
    return re;
}

Real hrr_term(long n, long k, int digits) {
    if (n < 1 || k < 1)
        throw std::invalid_argument("hrr_term: requires n >= 1, k >= 1");
    const Real pi = Real::pi(digits);
    const Real x = Real::of(make_rat(24 * BigInt(n) - 1, BigInt(24)), digits);
    const Real ck = pi / Real::of(k, digits) * sqrt(Real::of(make_rat(2L, 3L), digits));
    const Real sx = sqrt(x);
    const Real arg = ck * sx;
    const Real two = Real::of(2L, digits);
    // d/dn [ sinh(c sqrt x)/sqrt x ] = (c/2x) cosh(c sqrt x) - sinh(c sqrt x)/(2 x^{3/2})
    const Real bracket = ck / (two * x) * cosh(arg) - sinh(arg) / (two * x * sx);
    const Real prefactor =
        sqrt(Real::of(k, digits)) * kloosterman_A(n, k, digits) / (pi * sqrt(two));
    return prefactor * bracket;
}

Real p_R(long n, int digits) {
    return hrr_term(n, 1, digits);
}

Real p_R_printed(long n, int digits) {
    if (n < 1)
        throw std::invalid_argument("p_R_printed: n must be positive");
    const Real pi = Real::pi(digits);
    const Real x = Real::of(make_rat(24 * BigInt(n) - 1, BigInt(24)), digits);
    const Real two = Real::of(2L, digits);
    const Real three = Real::of(3L, digits);
    const Real arg = pi * sqrt(two / three * x);
    return cosh(arg) / (two * sqrt(three) * x) - sinh(arg) / (two * pi * sqrt(two) * x * sqrt(x));
}

BigInt hrr_p(long n, int terms, int digits) {
    if (n < 1)
        throw std::invalid_argument("hrr_p: n must be positive");
    int K = terms > 0 ? terms : static_cast<int>(isqrt_long(n)) + 5;
    int d = digits > 0 ? digits : default_digits(n);
    for (int attempt = 0; attempt < 2; ++attempt) {
        Real sum = Real::of(0L, d);
        for (long k = 1; k <= K; ++k)
            sum = sum + hrr_term(n, k, d);
        BigInt z = sum.round_nearest();
        Real dist = (sum - Real::of(z, d)).abs();
        if (dist < Real::of(make_rat(1L, 4L), d))
            return z;
        K += 8;
        d += 30;
    }
    throw std::runtime_error("hrr_p: truncated series did not settle near an integer");
}

Real conjecture_bound(long n, int digits) {
    if (n < 1)
        throw std::invalid_argument("conjecture_bound: n must be positive");
    const Real nu = Real::of(make_rat(27L, 50L), digits) *
                    (Real::of(2L, digits) + sqrt(Real::of(n, digits)));
    const Real one = Real::of(1L, digits);
    const Real two = Real::of(2L, digits);
    const Real half_nu = nu / two;
    const Real ln_bound = log(two) + (nu - one) * log(Real::of(make_rat(BigInt(n), BigInt(4)), digits)) -
                          log(nu) - lngamma(nu + one) - lngamma(half_nu + one) - lngamma(half_nu);
    return exp(ln_bound);
}

Real rademacher_bound(long n, int digits) {
    if (n < 2)
        throw std::invalid_argument("rademacher_bound: requires n >= 2");
    const Real pi = Real::pi(digits);
    const Real two = Real::of(2L, digits);
    const Real three = Real::of(3L, digits);
    const Real C = pi * sqrt(two / three);
    const Real sq2 = sqrt(two);
    const Real rn = Real::of(n, digits);
    const Real rn1 = Real::of(n - 1, digits);

    const Real t1 = Real::of(10L, digits) * sq2 / (Real::of(99L, digits) * pi) * C * C * C;
    const Real csn = C * sqrt(rn);
    const Real t2 = Real::of(8L, digits) * sq2 / (Real::of(11L, digits) * pi) /
                    (rn * sqrt(rn)) * (sinh(csn) - csn);
    const Real inner = Real::of(1L, digits) / (Real::of(5L, digits) * sqrt(three)) +
                       Real::of(1L, digits) / (Real::of(9L, digits) * pi * sq2) / sqrt(rn1);
    const Real t3 = two * exp(C * sqrt(rn1)) * Real::of(4L, digits) / rn1 * inner;
    return t1 + t2 + t3;
}

Real lehner_estimate(long n, int digits) {
    if (n < 1)
        throw std::invalid_argument("lehner_estimate: n must be positive");
    const Real five = Real::of(5L, digits);
    const Real m = Real::of(60 * n - 1, digits);
    const Real pref = sqrt(Real::of(15L, digits) + Real::of(3L, digits) * sqrt(five));
    const Real power = pow(m, Real::of(make_rat(-3L, 4L), digits));
    return pref * power * exp(Real::pi(digits) * sqrt(m) / Real::of(15L, digits));
}

}  // namespace pfun
