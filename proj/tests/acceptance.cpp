/* Acceptance battery: one line per criterion, nonzero exit on any failure. */

#include <chrono>
#include <cstdio>
#include <vector>

#include "verify.hpp"

int main() {
    using clock = std::chrono::steady_clock;
    std::vector<pfun::CheckResult> results;
    const auto run = [&](pfun::CheckResult r) { results.push_back(std::move(r)); };

    const auto t0 = clock::now();
    run(pfun::check_p_multisum_vs_euler());
    run(pfun::check_D_four_routes());
    run(pfun::check_term_counts());
    run(pfun::check_opcount_bound());
    run(pfun::check_pole_coeff_closed_forms());
    run(pfun::check_closed_form_fixtures());
    run(pfun::check_quasipolynomial());
    run(pfun::check_error_table());
    run(pfun::check_error_bounds());
    run(pfun::check_hrr_rounding());
    run(pfun::check_distinct_and_mock());
    run(pfun::check_staircase_bijection());
    run(pfun::check_small_n_half_integer());
    run(pfun::check_lehner_growth());

    int failures = 0;
    for (size_t i = 0; i < results.size(); ++i) {
        const pfun::CheckResult& r = results[i];
        if (!r.pass)
            ++failures;
        std::printf("[%2zu/%zu] %s %s%s%s%s\n", i + 1, results.size(),
                    r.pass ? "PASS" : "FAIL", r.name.c_str(), r.detail.empty() ? "" : "  [",
                    r.detail.c_str(), r.detail.empty() ? "" : "]");
    }
    const double secs =
        std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0).count() / 1000.0;
    std::printf("%d/%zu criteria passed in %.1fs\n", static_cast<int>(results.size()) - failures,
                results.size(), secs);
    return failures == 0 ? 0 : 1;
}
