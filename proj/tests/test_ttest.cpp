#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "kinmetrics/cohort.hpp"

using namespace kinmetrics;

#include "ttest_cases.inc"

namespace {

// Independent oracle: two-tailed p by adaptive-Simpson quadrature of the
// Student t density. Shares nothing with the incomplete-beta path.
double t_density(double x, double df) {
    double log_norm = std::lgamma((df + 1.0) / 2.0) - std::lgamma(df / 2.0) -
                      0.5 * std::log(df * M_PI);
    return std::exp(log_norm - (df + 1.0) / 2.0 * std::log1p(x * x / df));
}

double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive(double a, double b, double fa, double fm, double fb, double whole, double eps,
                double df, int depth) {
    double m = (a + b) / 2.0;
    double lm = (a + m) / 2.0, rm = (m + b) / 2.0;
    double flm = t_density(lm, df), frm = t_density(rm, df);
    double left = simpson(a, m, fa, flm, fm);
    double right = simpson(m, b, fm, frm, fb);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * eps)
        return left + right + (left + right - whole) / 15.0;
    return adaptive(a, m, fa, flm, fm, left, eps / 2.0, df, depth - 1) +
           adaptive(m, b, fm, frm, fb, right, eps / 2.0, df, depth - 1);
}

double p_two_tailed_quadrature(double t, double df) {
    double upper = std::abs(t);
    if (upper == 0.0) return 1.0;
    double fa = t_density(0.0, df), fb = t_density(upper, df);
    double fm = t_density(upper / 2.0, df);
    double whole = simpson(0.0, upper, fa, fm, fb);
    double integral = adaptive(0.0, upper, fa, fm, fb, whole, 1e-12, df, 50);
    return std::max(0.0, 1.0 - 2.0 * integral);
}

}  // namespace

TEST_CASE("identical samples give t = 0 and p = 1") {
    std::vector<double> a = {1, 2, 3, 4};
    TTestResult r = students_t_test(a, a);
    CHECK(r.t_statistic == 0.0);
    CHECK(r.p_two_tailed == 1.0);
    CHECK(!r.degenerate);  // variance present, only the difference vanishes
}

TEST_CASE("the 1..5 vs 2..6 case") {
    std::vector<double> a = {1, 2, 3, 4, 5};
    std::vector<double> b = {2, 3, 4, 5, 6};
    TTestResult r = students_t_test(a, b);
    CHECK(r.t_statistic == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(r.degrees_of_freedom == 8.0);
    CHECK(std::abs(r.p_two_tailed - 0.3466) < 1e-4);
}

TEST_CASE("well-separated constant-ish samples reject hard") {
    std::vector<double> a = {0, 0, 0, 0, 0};
    std::vector<double> b = {10, 10, 10, 10, 11};
    TTestResult r = students_t_test(a, b);
    CHECK(r.p_two_tailed < 0.001);
}

TEST_CASE("both samples constant and equal is flagged degenerate") {
    std::vector<double> a = {5, 5, 5};
    TTestResult r = students_t_test(a, a);
    CHECK(r.degenerate);
    CHECK(r.t_statistic == 0.0);
    CHECK(r.p_two_tailed == 1.0);
}

TEST_CASE("constant samples with different means reject outright") {
    std::vector<double> a = {5, 5, 5};
    std::vector<double> b = {7, 7, 7};
    TTestResult r = students_t_test(a, b);
    CHECK(!r.degenerate);
    CHECK(std::isinf(r.t_statistic));
    CHECK(r.t_statistic < 0);
    CHECK(r.p_two_tailed == 0.0);
}

TEST_CASE("samples of fewer than two elements throw") {
    std::vector<double> one = {1.0};
    std::vector<double> two = {1.0, 2.0};
    CHECK_THROWS_AS(students_t_test(one, two), std::invalid_argument);
    CHECK_THROWS_AS(students_t_test(two, one), std::invalid_argument);
}

TEST_CASE("reference cases match the frozen external implementation") {
    for (const TTestCase& c : kTTestCases) {
        TTestResult r = students_t_test(c.a, c.b);
        CHECK(std::abs(r.t_statistic - c.t) < 1e-10);
        CHECK(r.degrees_of_freedom == c.df);
        CHECK(std::abs(r.p_two_tailed - c.p) < 1e-10);
    }
}

TEST_CASE("random samples match the quadrature oracle") {
    std::mt19937_64 rng(404);
    std::uniform_real_distribution<double> value(-10.0, 10.0);
    for (int trial = 0; trial < 60; ++trial) {
        size_t na = 3 + rng() % 38, nb = 3 + rng() % 38;
        std::vector<double> a(na), b(nb);
        for (double& x : a) x = value(rng);
        for (double& x : b) x = value(rng) + 0.8;
        TTestResult r = students_t_test(a, b);
        double expected = p_two_tailed_quadrature(r.t_statistic, r.degrees_of_freedom);
        CHECK(std::abs(r.p_two_tailed - expected) < 1e-8);
    }
}

TEST_CASE("swapping the samples negates t and keeps p") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> value(0.0, 100.0);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<double> a(5 + rng() % 10), b(5 + rng() % 10);
        for (double& x : a) x = value(rng);
        for (double& x : b) x = value(rng);
        TTestResult fwd = students_t_test(a, b);
        TTestResult rev = students_t_test(b, a);
        CHECK(std::abs(fwd.t_statistic + rev.t_statistic) < 1e-12);
        CHECK(std::abs(fwd.p_two_tailed - rev.p_two_tailed) < 1e-12);
    }
}

TEST_CASE("p decreases as |t| grows at fixed df") {
    for (double df : {3.0, 8.0, 30.0, 77.0}) {
        double previous = 1.1;
        for (double t = 0.0; t <= 6.0; t += 0.25) {
            double x = df / (df + t * t);
            double p = regularized_incomplete_beta(df / 2.0, 0.5, x);
            CHECK(p < previous + 1e-15);
            if (t > 0) CHECK(p < previous);
            previous = p;
        }
    }
}

TEST_CASE("incomplete beta endpoints and symmetry") {
    CHECK(regularized_incomplete_beta(2.0, 3.0, 0.0) == 0.0);
    CHECK(regularized_incomplete_beta(2.0, 3.0, 1.0) == 1.0);
    // I_x(a,b) = 1 - I_{1-x}(b,a)
    for (double x : {0.1, 0.3, 0.5, 0.8}) {
        double lhs = regularized_incomplete_beta(2.5, 4.0, x);
        double rhs = 1.0 - regularized_incomplete_beta(4.0, 2.5, 1.0 - x);
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }
    // I_x(1,1) = x
    CHECK(std::abs(regularized_incomplete_beta(1.0, 1.0, 0.42) - 0.42) < 1e-12);
    CHECK_THROWS_AS(regularized_incomplete_beta(0.0, 1.0, 0.5), std::invalid_argument);
}

TEST_CASE("welch variant handles unequal variances") {
    std::vector<double> a = {1, 2, 3, 4, 5, 2, 3, 4};
    std::vector<double> b = {10, 30, 50, 70, 90};
    TTestResult pooled = students_t_test(a, b, false);
    TTestResult welch = students_t_test(a, b, true);
    CHECK(pooled.degrees_of_freedom == 11.0);
    CHECK(welch.degrees_of_freedom < 11.0);  // dominated by the wide sample
    CHECK(welch.degrees_of_freedom > 3.0);
    CHECK(std::abs(welch.t_statistic - pooled.t_statistic) > 1e-6);
}
