#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sstream>

#include "analytic.hpp"
#include "doctest.h"
#include "format.hpp"
#include "verify.hpp"

using namespace pfun;

TEST_CASE("rational fixed-point formatting rounds half to even") {
    CHECK(format_fixed(make_rat(1L, 4L), 5) == "0.25000");
    CHECK(format_fixed(make_rat(1L, 64L), 5) == "0.01562");   // ...625, tie -> even
    CHECK(format_fixed(make_rat(3L, 64L), 5) == "0.04688");   // ...875, tie -> even
    CHECK(format_fixed(make_rat(-1L, 64L), 5) == "-0.01562");
    CHECK(format_fixed(make_rat(3L, 16L), 3) == "0.188");     // 0.1875 -> odd bumps up
    CHECK(format_fixed(make_rat(1L, 16L), 3) == "0.062");     // 0.0625 -> even stays
    CHECK(format_fixed(BigRat(7), 2) == "7.00");
    CHECK(format_fixed(BigRat(-3), 0) == "-3");
    CHECK(format_fixed(make_rat(-1L, 100000L), 4) == "0.0000");  // no negative zero
    CHECK(format_fixed(make_rat(999995L, 100000L), 4) == "10.0000");
}

TEST_CASE("real fixed-point formatting") {
    const int d = 60;
    CHECK(Real::of(make_rat(1L, 4L), d).fixed(5) == "0.25000");
    CHECK(Real::of(-42L, d).fixed(3) == "-42.000");
    const Real pi = Real::pi(d);
    CHECK(pi.fixed(10) == "3.1415926536");
}

TEST_CASE("table CSV shape and spot values") {
    std::ostringstream os;
    write_table_csv(os, 1, 5, 5, 0);
    std::istringstream in(os.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "n,p,p_D,p_R,p_D_minus_p,p_R_minus_p,p_R_minus_p_D");
    std::getline(in, line);
    CHECK(line.substr(0, 4) == "1,1,");
    for (int i = 0; i < 3; ++i)
        std::getline(in, line);
    std::getline(in, line);  // n = 5
    CHECK(line.substr(0, 4) == "5,7,");
    CHECK(line.find(",0.25000,0.26210,") != std::string::npos);
    // LF endings only
    CHECK(os.str().find('\r') == std::string::npos);
}

TEST_CASE("table CSV is byte-stable") {
    std::ostringstream a, b;
    write_table_csv(a, 1, 24, 5, 0);
    write_table_csv(b, 1, 24, 5, 0);
    CHECK(a.str() == b.str());
}

TEST_CASE("verification report grammar") {
    std::vector<CheckResult> results;
    results.push_back({"route agreement", true, "checked n=1..30"});
    results.push_back({"route agreement wide", false, "n=3 k=2 expected=4 got=5"});
    const std::string rep = render_report(results);
    CHECK(rep.find("PASS route agreement") != std::string::npos);
    CHECK(rep.find("FAIL route agreement wide  [n=3 k=2 expected=4 got=5]") != std::string::npos);
    CHECK(rep.find("VERDICT: FAIL") != std::string::npos);
    CHECK_FALSE(all_pass(results));
    results.pop_back();
    CHECK(all_pass(results));
    CHECK(render_report(results).find("VERDICT: PASS") != std::string::npos);
}

TEST_CASE("figure CSV and local maxima report") {
    std::ostringstream os;
    std::string report;
    write_figure_csv(os, 40, 5, 0, &report);
    std::istringstream in(os.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "n,p_R_minus_p_D");
    int rows = 0;
    while (std::getline(in, line))
        ++rows;
    CHECK(rows == 40);
    CHECK(report.find("local maximum at n=15 (= 4^2 - 1)") != std::string::npos);
}
