#include "pfun/pfun.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "analytic.hpp"
#include "format.hpp"
#include "multisum.hpp"
#include "oracle.hpp"
#include "quasipoly.hpp"
#include "verify.hpp"

namespace {

constexpr int64_t kDefaultMultisumCeiling = 150;
constexpr int64_t kOracleCeiling = 80;          // full enumeration of p(n) partitions
constexpr int64_t kGenfunCeiling = 2'000'000;   // series length
constexpr int64_t kTableCeiling = 2000;
constexpr int64_t kFigureCeiling = 1600;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out)
        std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

struct ScaleRefused : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class F>
pfun_status guarded(F&& fn) {
    try {
        return fn();
    } catch (const ScaleRefused&) {
        return PFUN_E_SCALE;
    } catch (const std::invalid_argument&) {
        return PFUN_E_INVALID;
    } catch (const std::domain_error&) {
        return PFUN_E_INVALID;
    } catch (const std::out_of_range&) {
        return PFUN_E_INVALID;
    } catch (const std::runtime_error&) {
        return PFUN_E_PRECISION;
    } catch (...) {
        return PFUN_E_INTERNAL;
    }
}

void refuse_multisum_beyond(int64_t n, int64_t ceiling) {
    if (n > ceiling)
        throw ScaleRefused("multisum term count grows like exp(2*pi*sqrt(n)/sqrt(15))");
}

}  // namespace

extern "C" {

const char* pfun_version(void) {
    return "1.0.0";
}

const char* pfun_status_message(pfun_status s) {
    switch (s) {
        case PFUN_OK:
            return "ok";
        case PFUN_E_INVALID:
            return "invalid argument";
        case PFUN_E_SCALE:
            return "refused: cost ceiling exceeded";
        case PFUN_E_IO:
            return "output file could not be written";
        case PFUN_E_VERIFY:
            return "verification failed";
        case PFUN_E_PRECISION:
            return "precision or convergence failure";
        case PFUN_E_INTERNAL:
            return "internal error";
    }
    return "unknown status";
}

void pfun_string_free(char* s) {
    std::free(s);
}

pfun_status pfun_p(int64_t n, const char* method, int64_t multisum_ceiling,
                   int precision_digits, char** out) {
    if (!method || !out)
        return PFUN_E_INVALID;
    *out = nullptr;
    return guarded([&] {
        if (n < 1)
            throw std::invalid_argument("n must be positive");
        const std::string m(method);
        pfun::BigInt value;
        if (m == "euler") {
            value = pfun::p_euler(n);
        } else if (m == "multisum") {
            refuse_multisum_beyond(n, multisum_ceiling > 0 ? multisum_ceiling
                                                           : kDefaultMultisumCeiling);
            value = pfun::p_multisum(n);
        } else if (m == "hrr") {
            value = pfun::hrr_p(n, 0, precision_digits);
        } else {
            throw std::invalid_argument("method must be multisum, euler or hrr");
        }
        *out = dup_string(value.get_str());
        return *out ? PFUN_OK : PFUN_E_INTERNAL;
    });
}

pfun_status pfun_p_multisum_counted(int64_t n, int64_t multisum_ceiling, char** out,
                                    uint64_t* additions, uint64_t* multiplications) {
    if (!out)
        return PFUN_E_INVALID;
    *out = nullptr;
    return guarded([&] {
        if (n < 1)
            throw std::invalid_argument("n must be positive");
        refuse_multisum_beyond(n, multisum_ceiling > 0 ? multisum_ceiling
                                                       : kDefaultMultisumCeiling);
        pfun::OpCounter counter;
        const pfun::BigInt value = pfun::p_multisum(n, &counter);
        if (additions)
            *additions = counter.additions.get_ui();
        if (multiplications)
            *multiplications = counter.multiplications.get_ui();
        *out = dup_string(value.get_str());
        return *out ? PFUN_OK : PFUN_E_INTERNAL;
    });
}

pfun_status pfun_dnk(int64_t n, int64_t k, const char* method, int verbatim, char** out) {
    if (!method || !out)
        return PFUN_E_INVALID;
    *out = nullptr;
    return guarded([&] {
        if (n < 0 || k < 1)
            throw std::invalid_argument("need n >= 0 and k >= 1");
        const std::string m(method);
        std::string text;
        if (m == "multisum") {
            // budget by the exact term count before iterating
            if (pfun::r1_count(n, static_cast<int>(k)) > 200'000'000)
                throw ScaleRefused("term count beyond budget");
            text = pfun::D_multisum(n, static_cast<int>(k)).get_str();
        } else if (m == "oracle") {
            if (n > kOracleCeiling)
                throw ScaleRefused("enumeration beyond budget");
            text = pfun::D_brute(n, static_cast<int>(k)).get_str();
        } else if (m == "genfun") {
            if (n > kGenfunCeiling)
                throw ScaleRefused("series length beyond budget");
            const long nn = std::max<long>(n, k * k);
            text = pfun::genfun_D(static_cast<int>(k), nn)[static_cast<size_t>(n)].get_str();
        } else if (m == "quasi") {
            if (k > 8)
                throw ScaleRefused("quasipolynomial period beyond budget");
            text = pfun::quasipoly_interpolate(static_cast<int>(k)).value(n).get_str();
        } else if (m == "printed") {
            text = pfun::printed_D(n, static_cast<int>(k), verbatim != 0).get_str();
        } else {
            throw std::invalid_argument(
                "method must be multisum, oracle, genfun, quasi or printed");
        }
        *out = dup_string(text);
        return *out ? PFUN_OK : PFUN_E_INTERNAL;
    });
}

pfun_status pfun_pole_coeffs(int64_t k, char** out) {
    if (!out)
        return PFUN_E_INVALID;
    *out = nullptr;
    return guarded([&] {
        if (k < 1 || k > 64)
            throw std::invalid_argument("need 1 <= k <= 64");
        const pfun::PrincipalPartAtOne pp(static_cast<int>(k));
        std::ostringstream os;
        for (int l = 1; l <= 2 * k; ++l)
            os << l << '\t' << pp.phi1_coeff(l).get_str() << '\n';
        *out = dup_string(os.str());
        return *out ? PFUN_OK : PFUN_E_INTERNAL;
    });
}

pfun_status pfun_tilde_poly(int64_t k, char** out) {
    if (!out)
        return PFUN_E_INVALID;
    *out = nullptr;
    return guarded([&] {
        if (k < 1 || k > 64)
            throw std::invalid_argument("need 1 <= k <= 64");
        const pfun::RationalPolynomial poly = pfun::tilde_D_poly(static_cast<int>(k));
        std::ostringstream os;
        for (int i = 0; i <= poly.degree(); ++i) {
            if (i)
                os << ", ";
            os << poly.coeff(i).get_str();
        }
        *out = dup_string(os.str());
        return *out ? PFUN_OK : PFUN_E_INTERNAL;
    });
}

pfun_status pfun_table_csv(const char* path, int64_t from, int64_t to, int digits,
                           int precision_digits) {
    if (!path)
        return PFUN_E_INVALID;
    return guarded([&] {
        if (from < 1 || from > to || to > kTableCeiling)
            throw std::invalid_argument("need 1 <= from <= to <= 2000");
        if (digits < 0 || digits > 40)
            throw std::invalid_argument("digits out of range");
        std::ostringstream body;
        pfun::write_table_csv(body, from, to, digits, precision_digits);
        std::ofstream f(path, std::ios::binary);
        if (!f)
            return PFUN_E_IO;
        f << body.str();
        f.flush();
        return f.good() ? PFUN_OK : PFUN_E_IO;
    });
}

pfun_status pfun_figure_csv(const char* path, int64_t to, int digits, int precision_digits,
                            char** maxima_report) {
    if (!path)
        return PFUN_E_INVALID;
    if (maxima_report)
        *maxima_report = nullptr;
    return guarded([&] {
        if (to < 1 || to > kFigureCeiling)
            throw std::invalid_argument("need 1 <= to <= 1600");
        if (digits < 0 || digits > 40)
            throw std::invalid_argument("digits out of range");
        std::ostringstream body;
        std::string report;
        pfun::write_figure_csv(body, to, digits, precision_digits,
                               maxima_report ? &report : nullptr);
        std::ofstream f(path, std::ios::binary);
        if (!f)
            return PFUN_E_IO;
        f << body.str();
        f.flush();
        if (!f.good())
            return PFUN_E_IO;
        if (maxima_report) {
            *maxima_report = dup_string(report);
            if (!*maxima_report)
                return PFUN_E_INTERNAL;
        }
        return PFUN_OK;
    });
}

pfun_status pfun_verify(const char* profile, int64_t max_n, char** report) {
    if (!profile || !report)
        return PFUN_E_INVALID;
    *report = nullptr;
    return guarded([&] {
        const auto results = pfun::run_profile(profile, max_n);
        *report = dup_string(pfun::render_report(results));
        if (!*report)
            return PFUN_E_INTERNAL;
        return pfun::all_pass(results) ? PFUN_OK : PFUN_E_VERIFY;
    });
}

struct pfun_quasipoly {
    pfun::Quasipolynomial impl;
};

pfun_status pfun_quasipoly_fit(int64_t k, pfun_quasipoly** out) {
    if (!out)
        return PFUN_E_INVALID;
    *out = nullptr;
    return guarded([&] {
        if (k < 1 || k > 8)
            throw std::invalid_argument("need 1 <= k <= 8");
        *out = new pfun_quasipoly{pfun::quasipoly_interpolate(static_cast<int>(k))};
        return PFUN_OK;
    });
}

int64_t pfun_quasipoly_period(const pfun_quasipoly* qp) {
    return qp ? qp->impl.period() : 0;
}

int64_t pfun_quasipoly_validity_threshold(const pfun_quasipoly* qp) {
    return qp ? qp->impl.n_min() : -1;
}

pfun_status pfun_quasipoly_eval(const pfun_quasipoly* qp, int64_t n, char** out) {
    if (!qp || !out)
        return PFUN_E_INVALID;
    *out = nullptr;
    return guarded([&] {
        if (n < 0)
            throw std::invalid_argument("n must be nonnegative");
        *out = dup_string(qp->impl.value_rat(n).get_str());
        return *out ? PFUN_OK : PFUN_E_INTERNAL;
    });
}

void pfun_quasipoly_free(pfun_quasipoly* qp) {
    delete qp;
}

}  // extern "C"
