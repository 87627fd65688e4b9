#pragma once

#include <vector>

#include "exact.hpp"

namespace pfun {

/* Truncated power series in t = q - 1 with exact rational coefficients:
 * sum_{j=0..M} a_j t^j + O(t^{M+1}).  Arithmetic never consults coefficients
 * beyond the truncation order. */
class SeriesAtOne {
public:
    SeriesAtOne() : coeffs_(1) {}

    // pads with zeros / drops terms so that exactly order+1 coefficients are kept
    SeriesAtOne(std::vector<BigRat> coeffs, int order);

    static SeriesAtOne constant(const BigRat& c, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const BigRat& coeff(int j) const;
    const std::vector<BigRat>& coeffs() const { return coeffs_; }

    bool operator==(const SeriesAtOne&) const = default;

private:
    std::vector<BigRat> coeffs_;  // a_0 .. a_M
};

// Cauchy product truncated at `order`; both inputs must carry at least that many terms
SeriesAtOne series_mul(const SeriesAtOne& a, const SeriesAtOne& b, int order);

// multiplicative inverse mod t^{order+1}; throws std::domain_error when a_0 = 0
SeriesAtOne series_inv(const SeriesAtOne& a, int order);

}  // namespace pfun
