#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "multisum.hpp"
#include "oracle.hpp"
#include "quasipoly.hpp"

using namespace pfun;

TEST_CASE("taylor_F seeds") {
    const SeriesAtOne f1 = taylor_F(1);
    CHECK(f1.order() == 1);
    CHECK(f1.coeff(0) == 1);
    CHECK(f1.coeff(1) == 1);
    CHECK(taylor_F(2).coeff(2) == make_rat(11L, 16L));
    CHECK(taylor_F(3).coeff(0) == make_rat(1L, 36L));  // 1/(k!)^2 at k=3
}

TEST_CASE("taylor_F matches the closed forms for k <= 12") {
    for (int k = 2; k <= 12; ++k) {
        const SeriesAtOne f = taylor_F(k);
        const TopPoleCoeffs c = top_pole_closed_forms(k);
        CAPTURE(k);
        CHECK(f.coeff(0) == c.c_2k);
        CHECK(f.coeff(1) == c.c_2k_1);
        CHECK(f.coeff(2) == c.c_2k_2);
        CHECK(f.coeff(3) == c.c_2k_3);
    }
}

TEST_CASE("top_pole_closed_forms at k = 2") {
    const TopPoleCoeffs c = top_pole_closed_forms(2);
    CHECK(c.c_2k == make_rat(1L, 4L));
    CHECK(c.c_2k_1 == make_rat(3L, 4L));
    CHECK(c.c_2k_2 == make_rat(11L, 16L));
    CHECK(c.c_2k_3 == make_rat(1L, 8L));
    CHECK_THROWS_AS(top_pole_closed_forms(1), std::invalid_argument);
}

TEST_CASE("difference-equation structure of the pole coefficients") {
    // k^2 c_{0,1,2k}(k) = c_{0,1,2k-2}(k-1), and the order-3 analogue
    for (int k = 2; k <= 12; ++k) {
        const SeriesAtOne fk = taylor_F(k);
        const SeriesAtOne fk1 = taylor_F(k - 1);
        const BigRat k2(static_cast<long>(k) * k);
        const BigRat k3(static_cast<long>(k) * k * k);
        CHECK(k2 * fk.coeff(0) == fk1.coeff(0));
        if (k >= 2)
            CHECK(k2 * fk.coeff(1) - k3 * fk.coeff(0) == fk1.coeff(1));
    }
}

TEST_CASE("coefficient pattern in k has a +k second term, not -k") {
    /* c_{0,1,2k-1}(k) * 2 * (k!)^2 = k^2 + k: the k-coefficient is
     * (10j - j^2)/9 = +1 at j = 1 (the sign differs from the displayed
     * pattern, which does not match the closed forms). */
    for (int k = 2; k <= 10; ++k) {
        const BigRat scaled = top_pole_closed_forms(k).c_2k_1 * 2 *
                              BigRat(factorial(static_cast<unsigned long>(k)) *
                                     factorial(static_cast<unsigned long>(k)));
        const BigInt kk(k);
        CHECK(scaled == BigRat(kk * kk + kk));
    }
}

TEST_CASE("principal_part signs") {
    const PrincipalPartAtOne p1(1);
    CHECK(p1.c(2) == 1);
    CHECK(p1.c(1) == -1);
    CHECK(p1.phi1_coeff(1) == 1);
    CHECK(p1.phi1_coeff(2) == 1);
    const PrincipalPartAtOne p2(2);
    CHECK(p2.c(4) == make_rat(1L, 4L));
    // c_{0,1,l}(k) = (-1)^l c_l reproduces the closed forms
    for (int k = 2; k <= 6; ++k) {
        const PrincipalPartAtOne pp(k);
        const TopPoleCoeffs c = top_pole_closed_forms(k);
        CHECK(pp.phi1_coeff(2 * k) == c.c_2k);
        CHECK(pp.phi1_coeff(2 * k - 1) == c.c_2k_1);
        CHECK(pp.phi1_coeff(2 * k - 2) == c.c_2k_2);
        CHECK(pp.phi1_coeff(2 * k - 3) == c.c_2k_3);
    }
}

TEST_CASE("tilde_D") {
    CHECK(tilde_D_poly(1) == RationalPolynomial({BigRat(0), BigRat(1)}));
    CHECK(tilde_D(5, 2) == make_rat(9L, 4L));
    // (n-1)(2n^2-4n-3)/48 expanded: (3 + n - 6n^2 + 2n^3)/48
    CHECK(tilde_D_poly(2) ==
          RationalPolynomial({make_rat(3L, 48L), make_rat(1L, 48L), make_rat(-6L, 48L),
                              make_rat(2L, 48L)}));
    CHECK(tilde_D_poly(3).degree() == 5);
    CHECK(tilde_D_poly(4).degree() == 7);
}

TEST_CASE("p_D values") {
    CHECK(p_D(1) == 1);
    CHECK(p_D(5) == make_rat(29L, 4L));
    const BigRat diff = p_D(5) - BigRat(p_euler(5));
    CHECK(diff == make_rat(1L, 4L));
}

TEST_CASE("quasipoly_leading_terms") {
    const auto [lead2, sub2] = quasipoly_leading_terms(2);
    CHECK(lead2 == make_rat(1L, 24L));
    CHECK(sub2 == make_rat(-1L, 8L));
    const auto [lead3, sub3] = quasipoly_leading_terms(3);
    CHECK(lead3 == make_rat(1L, 4320L));
    CHECK(sub3 == make_rat(-1L, 288L));
    for (int k = 2; k <= 8; ++k) {
        const RationalPolynomial t = tilde_D_poly(k);
        const auto [lead, sub] = quasipoly_leading_terms(k);
        CHECK(t.degree() == 2 * k - 1);
        CHECK(t.coeff(2 * k - 1) == lead);
        CHECK(t.coeff(2 * k - 2) == sub);
    }
}

TEST_CASE("quasipoly_interpolate k = 1") {
    const Quasipolynomial qp = quasipoly_interpolate(1);
    CHECK(qp.period() == 1);
    CHECK(qp.n_min() <= 1);
    CHECK(qp.residue_poly(0) == RationalPolynomial({BigRat(0), BigRat(1)}));  // D(n,1) = n
}

TEST_CASE("quasipoly_interpolate k = 2") {
    const Quasipolynomial qp = quasipoly_interpolate(2);
    CHECK(qp.period() == 2);
    CHECK(qp.value(9) == 20);
    /* even residue: (n-1)(2n^2-4n-3)/48 + (n-1)/16 */
    RationalPolynomial even({make_rat(3L, 48L), make_rat(1L, 48L), make_rat(-6L, 48L),
                             make_rat(2L, 48L)});
    even += RationalPolynomial({make_rat(-1L, 16L), make_rat(1L, 16L)});
    CHECK(qp.residue_poly(0) == even);
    for (long n = 4; n <= 80; ++n)
        CHECK(qp.value(n) == D_multisum(n, 2));
}

TEST_CASE("quasipoly matches the multisum out of sample (k <= 4)") {
    for (int k = 1; k <= 4; ++k) {
        const Quasipolynomial qp = quasipoly_interpolate(k);
        const long start = static_cast<long>(k) * k;
        for (long n = start; n <= start + 40; ++n) {
            CAPTURE(k);
            CAPTURE(n);
            CHECK(qp.value(n) == D_multisum(n, k));
        }
    }
}

TEST_CASE("residue-averaged quasipolynomial recovers the polynomial part") {
    for (int k = 1; k <= 4; ++k) {
        const Quasipolynomial qp = quasipoly_interpolate(k);
        RationalPolynomial mean;
        for (long r = 0; r < qp.period(); ++r)
            mean += qp.residue_poly(r);
        mean *= make_rat(1L, qp.period());
        CHECK(mean == tilde_D_poly(k));
    }
}

TEST_CASE("printed_D fixtures") {
    CHECK(printed_D(4, 2) == 1);
    CHECK(printed_D(9, 3) == 1);
    CHECK(printed_D(10, 3) == 2);
    CHECK(printed_D(16, 4) == 1);
    CHECK(printed_D(16, 4, true) == make_rat(79L, 81L));
    CHECK_THROWS_AS(printed_D(10, 5), std::invalid_argument);
    for (int k = 1; k <= 4; ++k)
        for (long n = static_cast<long>(k) * k; n <= 40; ++n) {
            CAPTURE(k);
            CAPTURE(n);
            CHECK(printed_D(n, k) == BigRat(D_multisum(n, k)));
        }
    // the uncorrected form deviates by 2/81 exactly when 3 does not divide n
    for (long n = 16; n <= 30; ++n) {
        const BigRat delta = printed_D(n, 4) - printed_D(n, 4, true);
        CHECK(delta == make_rat(2L * kronecker(n, 3), 81L));
    }
}
