#pragma once

#include <string>
#include <vector>

namespace pfun {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail{};  // counterexamples, or a short summary
};

/* The full cross-validation battery.  Each check is pinned to its published
 * scale and tolerance; max_n > 0 lowers the n-ranges for a faster smoke run
 * but never raises them. */
CheckResult check_p_multisum_vs_euler(long max_n = 0);        // n <= 120, exact
CheckResult check_D_four_routes(long max_n = 0);              // n <= 30 all k; n <= 60 k <= 7
CheckResult check_term_counts(long max_n = 0);                // n <= 60, exact
CheckResult check_opcount_bound(long max_n = 0);              // n <= 100
CheckResult check_pole_coeff_closed_forms();                  // k <= 12, exact
CheckResult check_closed_form_fixtures(long max_n = 0);       // k <= 4, n <= 60
CheckResult check_quasipolynomial(int max_k = 0);             // k <= 5
CheckResult check_error_table();                              // printed rows 5..500
CheckResult check_error_bounds(long max_n = 0);               // n <= 500 / n <= 300
CheckResult check_hrr_rounding(long max_n = 0);               // n <= 200
CheckResult check_distinct_and_mock(long max_n = 0);          // n <= 40
CheckResult check_staircase_bijection();                      // weight <= 20, k <= 5
CheckResult check_small_n_half_integer();                     // n <= 10 and 14, 15
CheckResult check_lehner_growth();                            // n = 2000 / 4000

// profile "quick" (small-n oracle identities) or "full" (the battery above)
std::vector<CheckResult> run_profile(const std::string& profile, long max_n);

std::string render_report(const std::vector<CheckResult>& results);
bool all_pass(const std::vector<CheckResult>& results);

}  // namespace pfun
