#include "quasipoly.hpp"

#include <map>
#include <mutex>

#include "oracle.hpp"

namespace pfun {

RationalPolynomial::RationalPolynomial(std::vector<BigRat> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

void RationalPolynomial::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0)
        coeffs_.pop_back();
}

BigRat RationalPolynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size()))
        return BigRat(0);
    return coeffs_[static_cast<size_t>(i)];
}

BigRat RationalPolynomial::eval(const BigInt& n) const {
    BigRat acc(0);
    for (size_t i = coeffs_.size(); i-- > 0;) {
        acc *= n;
        acc += coeffs_[i];
    }
    return acc;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size())
        coeffs_.resize(other.coeffs_.size());
    for (size_t i = 0; i < other.coeffs_.size(); ++i)
        coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const BigRat& s) {
    if (sgn(s) == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_)
        c *= s;
    return *this;
}

RationalPolynomial& RationalPolynomial::mul_linear(const BigRat& a) {
    coeffs_.insert(coeffs_.begin(), BigRat(0));  // times x
    for (size_t i = 0; i + 1 < coeffs_.size(); ++i)
        coeffs_[i] += a * coeffs_[i + 1];
    trim();
    return *this;
}

SeriesAtOne taylor_F(int k) {
    if (k < 1)
        throw std::invalid_argument("taylor_F: k must be positive");
    const int order = 2 * k - 1;
    /* (1 + q + ... + q^{j-1}) at q = 1+t equals ((1+t)^j - 1)/t, whose t^m
     * coefficient is C(j, m+1). */
    SeriesAtOne denom = SeriesAtOne::constant(BigRat(1), order);
    for (int j = 2; j <= k; ++j) {
        std::vector<BigRat> g;
        for (int m = 0; m <= order; ++m)
            g.emplace_back(BigRat(binomial(BigInt(j), static_cast<unsigned long>(m + 1))));
        SeriesAtOne gj(std::move(g), order);
        denom = series_mul(denom, series_mul(gj, gj, order), order);
    }
    std::vector<BigRat> num;
    const BigInt ksq(static_cast<long>(k) * k);
    for (int m = 0; m <= order; ++m)
        num.emplace_back(BigRat(binomial(ksq, static_cast<unsigned long>(m))));
    return series_mul(SeriesAtOne(std::move(num), order), series_inv(denom, order), order);
}

TopPoleCoeffs top_pole_closed_forms(int k) {
    if (k < 2)
        throw std::invalid_argument("top_pole_closed_forms: requires k >= 2");
    const BigInt kk(k);
    const BigInt fk = factorial(static_cast<unsigned long>(k));
    const BigInt fk1 = factorial(static_cast<unsigned long>(k - 1));
    const BigInt fk2 = factorial(static_cast<unsigned long>(k - 2));
    TopPoleCoeffs c;
    c.c_2k = make_rat(BigInt(1), fk * fk);
    c.c_2k_1 = make_rat(kk + 1, 2 * fk1 * fk);
    c.c_2k_2 = make_rat(9 * kk * kk + 25 * kk + 13, 72 * fk2 * fk);
    c.c_2k_3 = make_rat(3 * kk * kk * kk * kk + 10 * kk * kk * kk - 4 * kk * kk - 31 * kk - 14,
                        144 * fk2 * fk);
    return c;
}

PrincipalPartAtOne::PrincipalPartAtOne(int k) : k_(k), c_(static_cast<size_t>(2 * k) + 1) {
    SeriesAtOne f = taylor_F(k);
    /* t^j = (-1)^j (1-q)^j, so the 1/(1-q)^l coefficient picks up (-1)^l
     * relative to the Taylor coefficient at order 2k-l. */
    for (int l = 1; l <= 2 * k; ++l) {
        const BigRat& a = f.coeff(2 * k - l);
        c_[static_cast<size_t>(l)] = (l % 2 == 0) ? a : BigRat(-a);
    }
}

const BigRat& PrincipalPartAtOne::c(int l) const {
    if (l < 1 || l > 2 * k_)
        throw std::out_of_range("PrincipalPartAtOne::c");
    return c_[static_cast<size_t>(l)];
}

BigRat PrincipalPartAtOne::phi1_coeff(int l) const {
    const BigRat& v = c(l);
    return (l % 2 == 0) ? v : BigRat(-v);
}

namespace {

std::mutex g_tilde_mutex;
std::map<int, RationalPolynomial> g_tilde_cache;

RationalPolynomial tilde_D_poly_uncached(int k) {
    PrincipalPartAtOne pp(k);
    /* 1/(1-q)^l expands with coefficient C(n+l-1, l-1), a polynomial in n:
     * prod_{i=1..l-1} (n+i) / (l-1)!. */
    RationalPolynomial result;
    RationalPolynomial binom(std::vector<BigRat>{BigRat(1)});  // C(n+l-1, l-1) * (l-1)!
    BigRat fact(1);
    for (int l = 1; l <= 2 * k; ++l) {
        if (l > 1) {
            binom.mul_linear(BigRat(l - 1));
            fact *= (l - 1);
        }
        RationalPolynomial term = binom;
        term *= BigRat(pp.c(l) / fact);
        result += term;
    }
    return result;
}

}  // namespace

RationalPolynomial tilde_D_poly(int k) {
    if (k < 1)
        throw std::invalid_argument("tilde_D_poly: k must be positive");
    std::lock_guard<std::mutex> lock(g_tilde_mutex);
    auto it = g_tilde_cache.find(k);
    if (it == g_tilde_cache.end())
        it = g_tilde_cache.emplace(k, tilde_D_poly_uncached(k)).first;
    return it->second;
}

BigRat tilde_D(long n, int k) {
    return tilde_D_poly(k).eval(n);
}

BigRat p_D(long n) {
    if (n < 1)
        throw std::invalid_argument("p_D: n must be positive");
    BigRat acc(0);
    for (long k = 1; k * k <= n; ++k)
        acc += tilde_D(n, static_cast<int>(k));
    return acc;
}

Quasipolynomial::Quasipolynomial(long period, std::vector<RationalPolynomial> polys, long n_min)
    : period_(period), polys_(std::move(polys)), n_min_(n_min) {
    if (period_ < 1 || static_cast<long>(polys_.size()) != period_)
        throw std::invalid_argument("Quasipolynomial: period/polys mismatch");
}

const RationalPolynomial& Quasipolynomial::residue_poly(long r) const {
    if (r < 0 || r >= period_)
        throw std::out_of_range("Quasipolynomial::residue_poly");
    return polys_[static_cast<size_t>(r)];
}

BigRat Quasipolynomial::value_rat(long n) const {
    return polys_[static_cast<size_t>(n % period_)].eval(n);
}

BigInt Quasipolynomial::value(long n) const {
    BigRat v = value_rat(n);
    if (v.get_den() != 1)
        throw std::logic_error("Quasipolynomial::value: non-integer value");
    return v.get_num();
}

namespace {

// Newton interpolation through (x_i, y_i), exact
RationalPolynomial newton_fit(const std::vector<long>& xs, const std::vector<BigInt>& ys) {
    const size_t m = xs.size();
    std::vector<BigRat> dd(m);
    for (size_t i = 0; i < m; ++i)
        dd[i] = BigRat(ys[i]);
    for (size_t level = 1; level < m; ++level)
        for (size_t i = m - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / BigRat(xs[i] - xs[i - level]);
    RationalPolynomial poly;
    for (size_t i = m; i-- > 0;) {
        poly.mul_linear(BigRat(-xs[i]));
        poly += RationalPolynomial(std::vector<BigRat>{dd[i]});
    }
    return poly;
}

}  // namespace

Quasipolynomial quasipoly_interpolate(int k) {
    if (k < 1)
        throw std::invalid_argument("quasipoly_interpolate: k must be positive");
    BigInt lcm_big = lcm_1_to(k);
    if (!lcm_big.fits_slong_p())
        throw std::invalid_argument("quasipoly_interpolate: period overflow");
    const long period = lcm_big.get_si();
    const long k2 = static_cast<long>(k) * k;
    const int samples = 2 * k;  // fit window per residue; same again to verify

    long n_min = k2;
    for (int attempt = 0; attempt < 64; ++attempt, n_min += period) {
        const long n_max = n_min + period * (2L * samples) + period;
        const std::vector<BigInt> d = genfun_D(k, n_max);
        std::vector<RationalPolynomial> polys(static_cast<size_t>(period));
        bool ok = true;
        for (long r = 0; r < period && ok; ++r) {
            long n0 = n_min + ((r - n_min) % period + period) % period;
            std::vector<long> xs;
            std::vector<BigInt> ys;
            for (int i = 0; i < samples; ++i) {
                const long x = n0 + period * i;
                xs.push_back(x);
                ys.push_back(d[static_cast<size_t>(x)]);
            }
            RationalPolynomial poly = newton_fit(xs, ys);
            for (int i = samples; i < 2 * samples; ++i) {
                const long x = n0 + period * i;
                if (poly.eval(x) != BigRat(d[static_cast<size_t>(x)])) {
                    ok = false;
                    break;
                }
            }
            polys[static_cast<size_t>(r)] = std::move(poly);
        }
        if (ok)
            return Quasipolynomial(period, std::move(polys), n_min);
    }
    throw std::runtime_error("quasipoly_interpolate: fit did not stabilize");
}

namespace {

// omega^n + omega^{-n} for omega = e^{2 pi i / 3}, and i^n + i^{-n}
long cube_root_pair(long n) {
    static const long table[3] = {2, -1, -1};
    return table[((n % 3) + 3) % 3];
}

long fourth_root_pair(long n) {
    static const long table[4] = {2, 0, -2, 0};
    return table[((n % 4) + 4) % 4];
}

long parity_sign(long n) {
    return n % 2 == 0 ? 1 : -1;
}

}  // namespace

BigRat printed_D(long n, int k, bool verbatim) {
    const BigInt nn(n);
    switch (k) {
        case 1:
            return BigRat(nn);
        case 2: {
            BigRat a = make_rat((nn - 1) * (2 * nn * nn - 4 * nn - 3), BigInt(48));
            BigRat b = make_rat(parity_sign(n) * (nn - 1), BigInt(16));
            return a + b;
        }
        case 3: {
            BigRat a = make_rat(
                (nn - 3) * (6 * nn * nn * nn * nn - 72 * nn * nn * nn + 184 * nn * nn + 192 * nn - 235),
                BigInt(25920));
            BigRat b = make_rat(parity_sign(n) * (nn - 3), BigInt(64));
            BigRat c = make_rat(cube_root_pair(n) * (nn - 3) + kronecker(n, 3), BigInt(81));
            return a - b + c;
        }
        case 4: {
            BigInt poly = 6 * nn * nn * nn * nn * nn * nn - 216 * nn * nn * nn * nn * nn +
                          2610 * nn * nn * nn * nn - 10800 * nn * nn * nn - 2451 * nn * nn +
                          60516 * nn - 23905;
            BigRat a = make_rat((nn - 6) * poly, BigInt(17418240));
            BigRat b = make_rat(parity_sign(n) * (nn - 1) * (nn - 6) * (nn - 11), BigInt(6144));
            const long leg_sign = verbatim ? 3 : -3;
            BigRat c = make_rat(cube_root_pair(n) * (nn - 6) + leg_sign * kronecker(n, 3),
                                BigInt(243));
            BigRat e = make_rat(fourth_root_pair(n) * (nn - 6) + 2 * fourth_root_pair(n - 1),
                                BigInt(256));
            return a + b - c + e;
        }
        default:
            throw std::invalid_argument("printed_D: closed forms exist for k = 1..4 only");
    }
}

std::pair<BigRat, BigRat> quasipoly_leading_terms(int k) {
    if (k < 2)
        throw std::invalid_argument("quasipoly_leading_terms: requires k >= 2");
    const BigInt fk = factorial(static_cast<unsigned long>(k));
    BigRat lead = make_rat(BigInt(1), fk * fk * factorial(static_cast<unsigned long>(2 * k - 1)));
    BigRat sub = make_rat(BigInt(-1), 2 * factorial(static_cast<unsigned long>(2 * k - 2)) * fk *
                                          factorial(static_cast<unsigned long>(k - 2)));
    return {lead, sub};
}

}  // namespace pfun
