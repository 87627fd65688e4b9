#include "format.hpp"

#include "analytic.hpp"
#include "oracle.hpp"
#include "quasipoly.hpp"

namespace pfun {

std::string format_fixed(const BigRat& v, int decimals) {
    if (decimals < 0)
        throw std::invalid_argument("format_fixed: negative digit count");
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(decimals));
    const bool negative = sgn(v) < 0;
    const BigInt num = ::abs(v.get_num()) * scale;
    const BigInt den = v.get_den();
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    const int half = cmp(2 * r, den);
    if (half > 0 || (half == 0 && mpz_odd_p(q.get_mpz_t())))
        ++q;  // round half to even
    std::string digits = q.get_str();
    if (static_cast<int>(digits.size()) <= decimals)
        digits.insert(0, static_cast<size_t>(decimals) + 1 - digits.size(), '0');
    std::string out;
    if (negative && sgn(q) != 0)
        out += '-';
    out += digits.substr(0, digits.size() - static_cast<size_t>(decimals));
    if (decimals > 0) {
        out += '.';
        out += digits.substr(digits.size() - static_cast<size_t>(decimals));
    }
    return out;
}

std::string format_fixed(const Real& v, int decimals) {
    return v.fixed(decimals);
}

void write_table_csv(std::ostream& os, long from, long to, int digits, int precision) {
    if (from < 1 || from > to)
        throw std::invalid_argument("write_table_csv: need 1 <= from <= to");
    os << "n,p,p_D,p_R,p_D_minus_p,p_R_minus_p,p_R_minus_p_D\n";
    for (long n = from; n <= to; ++n) {
        const int d = precision > 0 ? precision : default_digits(n);
        const BigInt p = p_euler(n);
        const BigRat pd = p_D(n);
        const Real pr = p_R(n, d);
        const Real pd_real = Real::of(pd, d);
        os << n << ',' << p.get_str() << ',' << format_fixed(pd, digits) << ','
           << format_fixed(pr, digits) << ',' << format_fixed(BigRat(pd - p), digits) << ','
           << format_fixed(pr - Real::of(p, d), digits) << ','
           << format_fixed(pr - pd_real, digits) << '\n';
    }
}

void write_figure_csv(std::ostream& os, long to, int digits, int precision,
                      std::string* report) {
    if (to < 1)
        throw std::invalid_argument("write_figure_csv: need to >= 1");
    std::vector<Real> diff;
    diff.reserve(static_cast<size_t>(to));
    os << "n,p_R_minus_p_D\n";
    for (long n = 1; n <= to; ++n) {
        const int d = precision > 0 ? precision : default_digits(n);
        Real v = p_R(n, d) - Real::of(p_D(n), d);
        os << n << ',' << format_fixed(v, digits) << '\n';
        diff.push_back(std::move(v));
    }
    if (!report)
        return;
    std::string& rep = *report;
    for (long n = 2; n < to; ++n) {
        const Real& v = diff[static_cast<size_t>(n - 1)];
        if (v > diff[static_cast<size_t>(n - 2)] && v > diff[static_cast<size_t>(n)]) {
            rep += "local maximum at n=" + std::to_string(n);
            const long m = isqrt_long(n + 1);
            if (m * m == n + 1)
                rep += " (= " + std::to_string(m) + "^2 - 1)";
            rep += '\n';
        }
    }
}

}  // namespace pfun
