#include "series.hpp"

namespace pfun {

SeriesAtOne::SeriesAtOne(std::vector<BigRat> coeffs, int order) {
    if (order < 0)
        throw std::invalid_argument("SeriesAtOne: negative order");
    coeffs.resize(static_cast<size_t>(order) + 1);
    coeffs_ = std::move(coeffs);
}

SeriesAtOne SeriesAtOne::constant(const BigRat& c, int order) {
    std::vector<BigRat> v(static_cast<size_t>(order) + 1);
    v[0] = c;
    return SeriesAtOne(std::move(v), order);
}

const BigRat& SeriesAtOne::coeff(int j) const {
    if (j < 0 || j > order())
        throw std::out_of_range("SeriesAtOne::coeff");
    return coeffs_[static_cast<size_t>(j)];
}

SeriesAtOne series_mul(const SeriesAtOne& a, const SeriesAtOne& b, int order) {
    if (a.order() < order || b.order() < order)
        throw std::invalid_argument("series_mul: inputs truncated below requested order");
    std::vector<BigRat> c(static_cast<size_t>(order) + 1);
    for (int i = 0; i <= order; ++i) {
        if (sgn(a.coeff(i)) == 0)
            continue;
        for (int j = 0; i + j <= order; ++j)
            c[static_cast<size_t>(i + j)] += a.coeff(i) * b.coeff(j);
    }
    return SeriesAtOne(std::move(c), order);
}

SeriesAtOne series_inv(const SeriesAtOne& a, int order) {
    if (a.order() < order)
        throw std::invalid_argument("series_inv: input truncated below requested order");
    if (sgn(a.coeff(0)) == 0)
        throw std::domain_error("series_inv: constant term is zero");
    /* b_0 = 1/a_0 and, for m >= 1, b_m = -(sum_{i=1..m} a_i b_{m-i}) / a_0. */
    std::vector<BigRat> b(static_cast<size_t>(order) + 1);
    b[0] = 1 / a.coeff(0);
    for (int m = 1; m <= order; ++m) {
        BigRat s;
        for (int i = 1; i <= m; ++i)
            s += a.coeff(i) * b[static_cast<size_t>(m - i)];
        b[static_cast<size_t>(m)] = -s / a.coeff(0);
    }
    return SeriesAtOne(std::move(b), order);
}

}  // namespace pfun
