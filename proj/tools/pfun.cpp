#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "CLI11.hpp"
#include "pfun/pfun.h"

namespace {

/* exit-code contract: 0 success, 1 verification/precision failure,
 * 2 usage, 3 refused scale, 4 I/O */
int exit_code_for(pfun_status s) {
    switch (s) {
        case PFUN_OK:
            return 0;
        case PFUN_E_INVALID:
            return 2;
        case PFUN_E_SCALE:
            return 3;
        case PFUN_E_IO:
            return 4;
        case PFUN_E_VERIFY:
        case PFUN_E_PRECISION:
        case PFUN_E_INTERNAL:
            return 1;
    }
    return 1;
}

int fail(pfun_status s, const std::string& what) {
    std::fprintf(stderr, "pfun: %s: %s\n", what.c_str(), pfun_status_message(s));
    return exit_code_for(s);
}

// precedence: --precision flag > PFUN_PRECISION env > built-in formula
int resolve_precision(int flag_value) {
    if (flag_value > 0)
        return flag_value;
    if (const char* env = std::getenv("PFUN_PRECISION")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0 && v < 100000)
            return static_cast<int>(v);
    }
    return 0;
}

struct OwnedString {
    char* s = nullptr;
    ~OwnedString() { pfun_string_free(s); }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pfun: exact and approximate integer-partition counting"};
    app.require_subcommand(1);
    int precision = 0;
    app.add_option("--precision", precision,
                   "working precision in decimal digits (overrides PFUN_PRECISION)");

    // p <n>
    auto* cmd_p = app.add_subcommand("p", "print p(n) exactly");
    int64_t p_n = 0;
    std::string p_method = "euler";
    int64_t p_ceiling = 0;
    bool p_ops = false;
    cmd_p->add_option("n", p_n, "argument of p(n)")->required();
    cmd_p->add_option("--method", p_method, "multisum | euler | hrr")
        ->check(CLI::IsMember({"multisum", "euler", "hrr"}));
    cmd_p->add_option("--ceiling", p_ceiling,
                      "largest n accepted by the multisum method (default 150)");
    cmd_p->add_flag("--ops", p_ops,
                    "with --method multisum, report the integer-operation count on stderr");

    // dnk <n> <k>
    auto* cmd_dnk = app.add_subcommand("dnk", "print D(n,k), the Durfee-square-k count");
    int64_t d_n = 0, d_k = 0;
    std::string d_method = "multisum";
    bool d_verbatim = false;
    cmd_dnk->add_option("n", d_n)->required();
    cmd_dnk->add_option("k", d_k)->required();
    cmd_dnk->add_option("--method", d_method, "multisum | oracle | genfun | quasi | printed")
        ->check(CLI::IsMember({"multisum", "oracle", "genfun", "quasi", "printed"}));
    cmd_dnk->add_flag("--verbatim", d_verbatim,
                      "with --method printed, evaluate the uncorrected k=4 closed form");

    // table
    auto* cmd_table = app.add_subcommand("table", "write the approximation-error table as CSV");
    int64_t t_from = 1, t_to = 500;
    std::string t_out;
    int t_digits = 5;
    cmd_table->add_option("--from", t_from, "first n (default 1)");
    cmd_table->add_option("--to", t_to, "last n (default 500, at most 2000)");
    cmd_table->add_option("--out", t_out, "output CSV path")->required();
    cmd_table->add_option("--digits", t_digits, "fractional digits (default 5)");

    // figure
    auto* cmd_figure = app.add_subcommand("figure", "write the p_R - p_D series as CSV");
    int64_t f_to = 500;
    std::string f_out;
    int f_digits = 5;
    cmd_figure->add_option("--to", f_to, "last n (default 500, at most 1600)");
    cmd_figure->add_option("--out", f_out, "output CSV path")->required();
    cmd_figure->add_option("--digits", f_digits, "fractional digits (default 5)");

    // coeffs <k>
    auto* cmd_coeffs =
        app.add_subcommand("coeffs", "print the q=1 pole coefficients of the D(n,k) series");
    int64_t c_k = 0;
    cmd_coeffs->add_option("k", c_k)->required();

    // tilde <k>
    auto* cmd_tilde =
        app.add_subcommand("tilde", "print the polynomial part of D(n,k), ascending coefficients");
    int64_t w_k = 0;
    cmd_tilde->add_option("k", w_k)->required();

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run the cross-validation suites");
    std::string v_profile = "quick";
    int64_t v_max_n = 0;
    cmd_verify->add_option("--profile", v_profile, "quick | full")
        ->check(CLI::IsMember({"quick", "full"}));
    cmd_verify->add_option("--max-n", v_max_n, "cap the n-ranges (0 = profile defaults)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const int prec = resolve_precision(precision);

    if (cmd_p->parsed()) {
        OwnedString out;
        pfun_status s;
        if (p_ops && p_method == "multisum") {
            uint64_t adds = 0, muls = 0;
            s = pfun_p_multisum_counted(p_n, p_ceiling, &out.s, &adds, &muls);
            if (s == PFUN_OK)
                std::fprintf(stderr, "additions=%llu multiplications=%llu\n",
                             static_cast<unsigned long long>(adds),
                             static_cast<unsigned long long>(muls));
        } else {
            s = pfun_p(p_n, p_method.c_str(), p_ceiling, prec, &out.s);
        }
        if (s != PFUN_OK) {
            if (s == PFUN_E_SCALE)
                std::fprintf(stderr,
                             "pfun: refusing --method multisum at n=%lld: the term count grows "
                             "like exp(2*pi*sqrt(n)/sqrt(15)); use --method euler or raise "
                             "--ceiling\n",
                             static_cast<long long>(p_n));
            return fail(s, "p");
        }
        std::printf("%s\n", out.s);
        return 0;
    }

    if (cmd_dnk->parsed()) {
        OwnedString out;
        const pfun_status s = pfun_dnk(d_n, d_k, d_method.c_str(), d_verbatim ? 1 : 0, &out.s);
        if (s != PFUN_OK)
            return fail(s, "dnk");
        std::printf("%s\n", out.s);
        return 0;
    }

    if (cmd_table->parsed()) {
        const pfun_status s = pfun_table_csv(t_out.c_str(), t_from, t_to, t_digits, prec);
        if (s != PFUN_OK)
            return fail(s, "table");
        return 0;
    }

    if (cmd_figure->parsed()) {
        OwnedString report;
        const pfun_status s = pfun_figure_csv(f_out.c_str(), f_to, f_digits, prec, &report.s);
        if (s != PFUN_OK)
            return fail(s, "figure");
        if (report.s && report.s[0])
            std::fputs(report.s, stdout);
        return 0;
    }

    if (cmd_coeffs->parsed()) {
        OwnedString out;
        const pfun_status s = pfun_pole_coeffs(c_k, &out.s);
        if (s != PFUN_OK)
            return fail(s, "coeffs");
        std::fputs(out.s, stdout);
        return 0;
    }

    if (cmd_tilde->parsed()) {
        OwnedString out;
        const pfun_status s = pfun_tilde_poly(w_k, &out.s);
        if (s != PFUN_OK)
            return fail(s, "tilde");
        std::printf("%s\n", out.s);
        return 0;
    }

    if (cmd_verify->parsed()) {
        OwnedString report;
        const pfun_status s = pfun_verify(v_profile.c_str(), v_max_n, &report.s);
        if (report.s)
            std::fputs(report.s, stdout);
        if (s != PFUN_OK && s != PFUN_E_VERIFY)
            return fail(s, "verify");
        return s == PFUN_OK ? 0 : 1;
    }

    return 2;
}
