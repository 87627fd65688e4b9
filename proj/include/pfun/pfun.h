#ifndef PFUN_H
#define PFUN_H

/* C surface of libpfun: exact and approximate integer-partition counting.
 *
 * Values that may exceed machine range are returned as malloc'd decimal
 * strings; release them with pfun_string_free.  All functions are
 * re-entrant.  Errors are reported through pfun_status; no function
 * prints or aborts.
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pfun_status {
    PFUN_OK = 0,
    PFUN_E_INVALID = 1,   /* bad argument or domain violation */
    PFUN_E_SCALE = 2,     /* refused: cost ceiling exceeded */
    PFUN_E_IO = 3,        /* output file could not be written */
    PFUN_E_VERIFY = 4,    /* a cross-validation suite failed */
    PFUN_E_PRECISION = 5, /* precision or convergence failure */
    PFUN_E_INTERNAL = 6
} pfun_status;

const char *pfun_version(void);
const char *pfun_status_message(pfun_status s); /* static storage */
void pfun_string_free(char *s);

/* p(n) by "multisum", "euler" or "hrr".  The multisum method refuses
 * n > multisum_ceiling (pass 0 for the default ceiling of 150), because its
 * term count grows like exp(2*pi*sqrt(n)/sqrt(15)).  precision_digits
 * applies to the hrr method only; 0 selects the built-in formula. */
pfun_status pfun_p(int64_t n, const char *method, int64_t multisum_ceiling,
                   int precision_digits, char **out);

/* multisum evaluation with the integer-operation counter attached */
pfun_status pfun_p_multisum_counted(int64_t n, int64_t multisum_ceiling,
                                    char **out, uint64_t *additions,
                                    uint64_t *multiplications);

/* D(n,k) by "multisum", "oracle" (enumeration), "genfun" (series
 * coefficient), "quasi" (interpolated quasipolynomial) or "printed" (closed
 * forms, k <= 4; value may be a non-integer rational in verbatim mode). */
pfun_status pfun_dnk(int64_t n, int64_t k, const char *method, int verbatim,
                     char **out);

/* partial-fraction coefficients at the q=1 pole, one "l<TAB>value" line per
 * l = 1..2k, in the (q-1)-power convention */
pfun_status pfun_pole_coeffs(int64_t k, char **out);

/* coefficients of the polynomial part of D(n,k), ascending, comma separated */
pfun_status pfun_tilde_poly(int64_t k, char **out);

/* CSV: n,p,p_D,p_R,p_D_minus_p,p_R_minus_p,p_R_minus_p_D for from <= n <= to
 * (to <= 2000); `digits` fractional digits, UTF-8, LF line endings */
pfun_status pfun_table_csv(const char *path, int64_t from, int64_t to,
                           int digits, int precision_digits);

/* CSV: n,p_R_minus_p_D for 1 <= n <= to (to <= 1600); *maxima_report, when
 * non-NULL, receives a malloc'd report of the local maxima */
pfun_status pfun_figure_csv(const char *path, int64_t to, int digits,
                            int precision_digits, char **maxima_report);

/* run the "quick" or "full" cross-validation profile; *report receives the
 * malloc'd pass/fail listing; returns PFUN_E_VERIFY when any suite fails */
pfun_status pfun_verify(const char *profile, int64_t max_n, char **report);

/* exact quasipolynomial representation of D(n,k), behind an opaque handle */
typedef struct pfun_quasipoly pfun_quasipoly;
pfun_status pfun_quasipoly_fit(int64_t k, pfun_quasipoly **out);
int64_t pfun_quasipoly_period(const pfun_quasipoly *qp);
int64_t pfun_quasipoly_validity_threshold(const pfun_quasipoly *qp);
pfun_status pfun_quasipoly_eval(const pfun_quasipoly *qp, int64_t n, char **out);
void pfun_quasipoly_free(pfun_quasipoly *qp);

#ifdef __cplusplus
}
#endif

#endif /* PFUN_H */
