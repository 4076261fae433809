// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <stdexcept>

#include "rampi/pi_engine.hpp"

using namespace rampi;

TEST_SUITE_BEGIN("pi_engine");

TEST_CASE("literal terms") {
    CHECK(literal_term(0) == Rat(1103));
    // term 1 = 27493 * 24 / 396^4
    CHECK(literal_term(1) == Rat(Int(27493) * Int(24), Int::pow(396, 4)));
    // terms decrease fast and stay positive
    Rat prev = literal_term(0);
    for (unsigned long n = 1; n <= 5; ++n) {
        Rat cur = literal_term(n);
        CHECK(cur.sign() > 0);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("binary splitting equals the naive rational sum") {
    for (unsigned long n : {1ul, 2ul, 7ul, 20ul})
        CHECK(series_partial_binsplit(n) == series_partial_naive(n));
    CHECK(series_partial_binsplit(0) == Rat(0));
}

TEST_CASE("digit strings match the reference") {
    CHECK(pi_ramanujan_digits(15) == "3.14159265358979");
    CHECK(pi_ramanujan_digits(1) == "3.1");
    for (long d : {10L, 100L, 1000L}) CHECK(pi_ramanujan_digits(d) == pi_oracle_digits(d));
    CHECK_THROWS_AS(pi_ramanujan(0), std::domain_error);
    CHECK_THROWS_AS(pi_ramanujan(100001), std::domain_error);
}

TEST_CASE("partial sums rise monotonically with bounded error reduction") {
    Precision w(80);
    Real target = 1 / pi_oracle(w);
    Real scale = 2 * sqrt(Real(2, w)) / 9801;
    Real prev_err(1, w);
    Real prev_sum(0, w);
    for (unsigned long n = 1; n <= 8; ++n) {
        Real sum = scale * Real::from(series_partial_naive(n), w);
        CHECK(sum > prev_sum);
        CHECK(sum < target);  // increases toward 1/pi from below
        Real err = target.abs_diff(sum);
        if (n > 1) {
            Real factor = err / prev_err;
            CHECK(factor > pow10(9, w));
            CHECK(factor < pow10(7, w));
        }
        prev_err = err;
        prev_sum = sum;
    }
}

TEST_CASE("termwise equivalence of the assembled and literal series") {
    TermwiseReport rep = termwise_equivalence(10, Precision(30));
    CHECK(rep.exact_coefficients);
    CHECK(rep.prefactor_identity);
    REQUIRE(rep.ratio_minus_one.size() == 11);
    for (const Real &r : rep.ratio_minus_one) CHECK(r <= pow10(25, Precision(30)));
    CHECK_THROWS_AS(termwise_equivalence(2, Precision(30)), std::domain_error);
}

TEST_CASE("first term distance from 1/pi") {
    Precision w(40);
    Real term0 = 2 * sqrt(Real(2, w)) / 9801 * 1103;
    Real gap = term0.abs_diff(1 / pi_oracle(w));
    // one term already gives ~7 digits
    CHECK(gap < pow10(7, w));
    CHECK(gap > pow10(8, w));
}

TEST_CASE("convergence rate facts") {
    ConvergenceRate rate = digits_per_term();
    CHECK(rate.analytic_digits_per_term == doctest::Approx(7.98254).epsilon(1e-5));
    CHECK(rate.analytic_digits_per_term > 7.5);
    CHECK(rate.analytic_digits_per_term < 8.5);
    CHECK(rate.empirical_reduction > 3.162e-9);   // 1e-8.5
    CHECK(rate.empirical_reduction < 3.163e-8);   // 1e-7.5
}

TEST_CASE("slow-series baselines") {
    SanityReport rep = sanity_series(Precision(30));
    CHECK(rep.basel_residual < 1e-8);
    CHECK(rep.leibniz_residual < 1e-8);
    // the uncorrected Basel tail shows why the fast series matters
    CHECK(rep.basel_uncorrected_residual > 1e-5);
}

TEST_SUITE_END();
