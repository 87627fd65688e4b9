#pragma once

#include <utility>
#include <vector>

#include "exact.hpp"
#include "series.hpp"

namespace pfun {

// dense polynomial with exact rational coefficients, ascending powers
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<BigRat> coeffs);  // trims trailing zeros

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    BigRat coeff(int i) const;  // zero beyond the degree
    const std::vector<BigRat>& coeffs() const { return coeffs_; }

    BigRat eval(const BigInt& n) const;
    BigRat eval(long n) const { return eval(BigInt(n)); }

    RationalPolynomial& operator+=(const RationalPolynomial& other);
    RationalPolynomial& operator*=(const BigRat& s);
    // multiply by the linear factor (x + a)
    RationalPolynomial& mul_linear(const BigRat& a);

    bool operator==(const RationalPolynomial&) const = default;

private:
    void trim();
    std::vector<BigRat> coeffs_;
};

/* Taylor coefficients at q = 1, through order 2k-1, of
 * F_k(q) = (1-q)^{2k} * q^{k^2} / prod_{j=1..k} (1-q^j)^2
 *        = (1+t)^{k^2} / prod_{j=1..k} ((1+t)^j - 1)^2 * t^{2k},
 * computed by exact series substitution q = 1 + t. */
SeriesAtOne taylor_F(int k);

// closed forms for the four top pole coefficients at q=1 (k >= 2)
struct TopPoleCoeffs {
    BigRat c_2k;    // 1/(k!)^2
    BigRat c_2k_1;  // (k+1)/(2 (k-1)! k!)
    BigRat c_2k_2;  // (9k^2+25k+13)/(72 (k-2)! k!)
    BigRat c_2k_3;  // (3k^4+10k^3-4k^2-31k-14)/(144 (k-2)! k!)
};
TopPoleCoeffs top_pole_closed_forms(int k);

/* Principal part of D_k(q) at q = 1 written over powers of 1/(1-q):
 * sum_{l=1..2k} c_l / (1-q)^l.  The coefficients over powers of the first
 * cyclotomic polynomial q-1 are recovered as (-1)^l * c(l); that sign bridge
 * lives here and only here. */
class PrincipalPartAtOne {
public:
    explicit PrincipalPartAtOne(int k);

    int k() const { return k_; }
    const BigRat& c(int l) const;    // l = 1..2k
    BigRat phi1_coeff(int l) const;  // coefficient over (q-1)^l, = (-1)^l c(l)

private:
    int k_;
    std::vector<BigRat> c_;  // index 0 unused
};

// quasiperiod-1 component of D(n,k) as an exact polynomial of degree 2k-1
RationalPolynomial tilde_D_poly(int k);
BigRat tilde_D(long n, int k);

// polynomial approximation p_D(n) = sum_{k=1..isqrt(n)} tilde_D(n,k), n >= 1
BigRat p_D(long n);

class Quasipolynomial {
public:
    Quasipolynomial(long period, std::vector<RationalPolynomial> polys, long n_min);

    long period() const { return period_; }
    long n_min() const { return n_min_; }
    const RationalPolynomial& residue_poly(long r) const;

    BigRat value_rat(long n) const;
    BigInt value(long n) const;  // checks integrality

private:
    long period_;
    std::vector<RationalPolynomial> polys_;
    long n_min_;
};

/* Exact quasipolynomial for D(n,k): period lcm(1..k), degree 2k-1.  Each
 * residue class is fitted through 2k exact values of D(n,k) (generated from
 * the product form of its generating function, the same integers the
 * multisum produces) and verified on the next 2k values; on a verification
 * failure the window shifts up by one period and the fit repeats. */
Quasipolynomial quasipoly_interpolate(int k);

/* The closed quasipolynomial forms for k <= 4, evaluated exactly with the
 * root-of-unity pieces replaced by integer residue tables.  For k = 4 the
 * default flips the sign of the 3*(n|3) term, which is what matches the
 * multisum; verbatim = true evaluates the uncorrected form. */
BigRat printed_D(long n, int k, bool verbatim = false);

// leading and subleading coefficient of D(n,k) in n, for k >= 2
std::pair<BigRat, BigRat> quasipoly_leading_terms(int k);

}  // namespace pfun
