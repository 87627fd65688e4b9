#pragma once

#include <mpfr.h>

#include <string>

#include "exact.hpp"

namespace pfun {

/* Floating value carrying an explicit decimal-digit precision contract.
 * Internally an mpfr number at ceil(digits*log2(10)) + 32 guard bits; every
 * operation rounds to nearest at the wider operand's precision. */
class Real {
public:
    explicit Real(int digits);
    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    static mpfr_prec_t bits_for(int digits);
    static Real of(long v, int digits);
    static Real of(const BigInt& v, int digits);
    static Real of(const BigRat& v, int digits);
    static Real pi(int digits);
    static Real pow10(int e, int digits);  // 10^e

    int digits() const { return digits_; }
    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

    int sign() const { return mpfr_sgn(v_); }
    Real abs() const;
    Real neg() const;
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    BigInt round_nearest() const;

    // fixed-point decimal with exactly `decimals` fractional digits,
    // round-half-even at the last emitted digit
    std::string fixed(int decimals) const;

    int cmp(const Real& o) const { return mpfr_cmp(v_, o.v_); }
    bool operator<(const Real& o) const { return cmp(o) < 0; }
    bool operator>(const Real& o) const { return cmp(o) > 0; }
    bool operator<=(const Real& o) const { return cmp(o) <= 0; }
    bool operator>=(const Real& o) const { return cmp(o) >= 0; }

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);

    friend Real sqrt(const Real& x);
    friend Real exp(const Real& x);
    friend Real log(const Real& x);
    friend Real sinh(const Real& x);
    friend Real cosh(const Real& x);
    friend Real pow(const Real& x, const Real& y);
    friend Real lngamma(const Real& x);  // x > 0

private:
    mpfr_t v_;
    int digits_;
};

}  // namespace pfun
