#include "real.hpp"

#include <algorithm>

namespace pfun {

mpfr_prec_t Real::bits_for(int digits) {
    if (digits < 1)
        throw std::invalid_argument("Real: precision must be at least one digit");
    return static_cast<mpfr_prec_t>(digits * 3.3219280948873626) + 32;
}

Real::Real(int digits) : digits_(digits) {
    mpfr_init2(v_, bits_for(digits));
    mpfr_set_nan(v_);
}

Real::Real(const Real& o) : digits_(o.digits_) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept : digits_(o.digits_) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
        digits_ = o.digits_;
    }
    return *this;
}

Real& Real::operator=(Real&& o) noexcept {
    if (this != &o) {
        mpfr_swap(v_, o.v_);
        digits_ = o.digits_;
    }
    return *this;
}

Real::~Real() {
    mpfr_clear(v_);
}

Real Real::of(long v, int digits) {
    Real r(digits);
    mpfr_set_si(r.v_, v, MPFR_RNDN);
    return r;
}

Real Real::of(const BigInt& v, int digits) {
    Real r(digits);
    mpfr_set_z(r.v_, v.get_mpz_t(), MPFR_RNDN);
    return r;
}

Real Real::of(const BigRat& v, int digits) {
    Real r(digits);
    mpfr_set_q(r.v_, v.get_mpq_t(), MPFR_RNDN);
    return r;
}

Real Real::pi(int digits) {
    Real r(digits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

Real Real::pow10(int e, int digits) {
    Real r(digits);
    mpfr_set_si(r.v_, 10, MPFR_RNDN);
    mpfr_pow_si(r.v_, r.v_, e, MPFR_RNDN);
    return r;
}

Real Real::abs() const {
    Real r(digits_);
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

Real Real::neg() const {
    Real r(digits_);
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigInt Real::round_nearest() const {
    BigInt z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
    return z;
}

std::string Real::fixed(int decimals) const {
    if (decimals < 0)
        throw std::invalid_argument("Real::fixed: negative digit count");
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(decimals));
    mpfr_t tmp;
    mpfr_init2(tmp, mpfr_get_prec(v_) + 64);
    mpfr_mul_z(tmp, v_, scale.get_mpz_t(), MPFR_RNDN);
    BigInt z;
    mpfr_get_z(z.get_mpz_t(), tmp, MPFR_RNDN);  // nearest, ties to even
    mpfr_clear(tmp);

    const bool negative = sgn(z) < 0;
    std::string digits = BigInt(::abs(z)).get_str();
    if (static_cast<int>(digits.size()) <= decimals)
        digits.insert(0, static_cast<size_t>(decimals) + 1 - digits.size(), '0');
    std::string out;
    if (negative)
        out += '-';
    out += digits.substr(0, digits.size() - static_cast<size_t>(decimals));
    if (decimals > 0) {
        out += '.';
        out += digits.substr(digits.size() - static_cast<size_t>(decimals));
    }
    return out;
}

namespace {
int join_digits(const Real& a, const Real& b) {
    return std::max(a.digits(), b.digits());
}
}  // namespace

Real operator+(const Real& a, const Real& b) {
    Real r(join_digits(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator-(const Real& a, const Real& b) {
    Real r(join_digits(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator*(const Real& a, const Real& b) {
    Real r(join_digits(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator/(const Real& a, const Real& b) {
    Real r(join_digits(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real sqrt(const Real& x) {
    Real r(x.digits());
    mpfr_sqrt(r.v_, x.v_, MPFR_RNDN);
    return r;
}

Real exp(const Real& x) {
    Real r(x.digits());
    mpfr_exp(r.v_, x.v_, MPFR_RNDN);
    return r;
}

Real log(const Real& x) {
    Real r(x.digits());
    mpfr_log(r.v_, x.v_, MPFR_RNDN);
    return r;
}

Real sinh(const Real& x) {
    Real r(x.digits());
    mpfr_sinh(r.v_, x.v_, MPFR_RNDN);
    return r;
}

Real cosh(const Real& x) {
    Real r(x.digits());
    mpfr_cosh(r.v_, x.v_, MPFR_RNDN);
    return r;
}

Real pow(const Real& x, const Real& y) {
    Real r(join_digits(x, y));
    mpfr_pow(r.v_, x.v_, y.v_, MPFR_RNDN);
    return r;
}

Real lngamma(const Real& x) {
    if (x.sign() <= 0)
        throw std::domain_error("lngamma: requires positive argument");
    Real r(x.digits());
    mpfr_lngamma(r.v_, x.v_, MPFR_RNDN);
    return r;
}

}  // namespace pfun
