// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "rampi/lattice.hpp"

using namespace rampi;

TEST_SUITE_BEGIN("lattice");

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(s1_truncated({1, 1, 58}, 100), std::domain_error);   // b != 0
    CHECK_THROWS_AS(s1_truncated({1, 0, -2}, 100), std::domain_error);   // indefinite
    CHECK_THROWS_AS(s1_truncated({1, 0, 58}, 5), std::domain_error);     // radius too small
    CHECK_THROWS_AS(s1_csch(Rat(1, 2), Precision(20)), std::domain_error);
}

TEST_CASE("csch route against the L-series decomposition") {
    Precision p(30);
    Real csch = s1_csch(Rat(58), p);
    Real zr = zucker_robertson(29, p);
    CHECK((csch + zr).abs() <= pow10(20, p));
    CHECK(csch.str(11) == "-1.644934067");
    CHECK_THROWS_AS(zucker_robertson(13, p), std::domain_error);
}

TEST_CASE("truncated sum approaches the csch value") {
    Precision p(30);
    for (long r : {1L, 2L, 58L}) {
        double target = s1_csch(Rat(r), p).to_double();
        double last = 1e9;
        for (long R : {50L, 100L, 200L, 500L}) {
            TruncatedSum t = s1_truncated({1, 0, r}, R);
            double diff = std::fabs(t.sum - target);
            CHECK(diff < last);  // errors shrink with the radius (~1/R)
            last = diff;
        }
        TruncatedSum t500 = s1_truncated({1, 0, r}, 500);
        double diff500 = std::fabs(t500.sum - target);
        // the tail estimate tracks the actual truncation error
        CHECK(diff500 <= 2 * t500.tail_estimate);
        CHECK(diff500 >= t500.tail_estimate / 10);
    }
    // the level-58 sum meets 1e-3 at R = 500
    double d58 = std::fabs(s1_truncated({1, 0, 58}, 500).sum -
                           s1_csch(Rat(58), p).to_double());
    CHECK(d58 < 1e-3);
}

TEST_CASE("wong report cross route and radii") {
    Precision p(30);
    WongReport rep = wong_check(Rat(58), p, {50, 100, 200});
    CHECK(rep.cross_route_residual <= pow10(20, p));
    REQUIRE(rep.truncated_diff.size() == 3);
    CHECK(rep.truncated_diff[0].second > rep.truncated_diff[1].second);
    CHECK(rep.truncated_diff[1].second > rep.truncated_diff[2].second);
    WongReport rep2 = wong_check(Rat(2), p, {});
    CHECK(rep2.cross_route_residual <= pow10(20, p));
}

TEST_SUITE_END();
