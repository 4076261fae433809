// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>
#include <gmp.h>

#include <cmath>
#include <set>
#include <stdexcept>

#include "rampi/lseries.hpp"
#include "rampi/surd.hpp"

using namespace rampi;

TEST_SUITE_BEGIN("lseries");

TEST_CASE("kronecker symbol basics") {
    for (long d : {-8L, -4L, 5L, 29L, 173L}) CHECK(kronecker(d, 1) == 1);
    // quadratic residues mod 29 by brute squaring
    std::set<long> residues;
    for (long a = 1; a < 29; ++a) residues.insert(a * a % 29);
    for (long k = 1; k < 29; ++k)
        CHECK(kronecker(29, k) == (residues.count(k) ? 1 : -1));
    // odd-k sign pattern for d = -8
    for (long k = 1; k < 100; k += 2) {
        long m = k % 8;
        int expect = (m == 1 || m == 3) ? 1 : -1;
        CHECK(kronecker(-8, k) == expect);
    }
    CHECK(kronecker(-8, 6) == 0);
}

TEST_CASE("kronecker symbol against the gmp implementation") {
    for (long d = -40; d <= 40; ++d) {
        for (long n = -30; n <= 30; ++n) {
            mpz_t zd, zn;
            mpz_init_set_si(zd, d);
            mpz_init_set_si(zn, n);
            int expect = mpz_kronecker(zd, zn);
            mpz_clear(zd);
            mpz_clear(zn);
            CAPTURE(d);
            CAPTURE(n);
            CHECK(kronecker(d, n) == expect);
        }
    }
}

TEST_CASE("character tables take the stated moduli") {
    CHECK(character_table(29).m == 29);
    CHECK(character_table(-8).m == 32);
    CHECK(character_table(-4).m == 16);
    CHECK_THROWS_AS(character_table(0), std::domain_error);
}

TEST_CASE("character axioms hold over a full period") {
    for (long d : {-8L, -4L, 29L}) {
        DirichletCharacter chi = character_table(d);
        for (long a = 1; a <= chi.m; ++a) {
            CHECK(chi(a + chi.m) == chi(a));  // periodicity
            long g = std::gcd(a, chi.m);
            if (g > 1)
                CHECK(chi(a) == 0);
            else
                CHECK(chi(a) != 0);
            for (long b = 1; b <= chi.m; ++b)
                CHECK(chi(a * b) == chi(a) * chi(b));  // complete multiplicativity
        }
    }
}

TEST_CASE("closed form for negative d") {
    Precision p(30);
    Precision w(42);
    CHECK(l_negative_inner_sum(-8) == Int(32));
    CHECK(l_negative_inner_sum(-4) == Int(8));
    Real l8 = l_negative(-8, p).value;
    CHECK(l8.abs_diff(pi_oracle(w) / (4 * sqrt(Real(2, w)))) <= pow10(20, w));
    CHECK_THROWS_AS(l_negative(29, p), std::domain_error);
}

TEST_CASE("class number and sine-product routes agree for d = 29") {
    Precision p(30);
    Real cls = l_class_number(29, 1, p).value;
    Real trig = l_trig_product(29, p).value;
    CHECK(cls.abs_diff(trig) <= pow10(20, p));
    CHECK(cls.str(11) == "0.6117662896");
    // exact tie: log(u^6)/(3 sqrt29) = 2 log(u)/sqrt29 since u^6 = 9801+1820 sqrt29
    Precision w(42);
    QuadraticSurd u(Rat(5, 2), Rat(1, 2), 29);
    Real via6 = log(u.pow(6).to_real(w)) / (3 * sqrt(Real(29, w)));
    CHECK(via6.abs_diff(cls) <= pow10(20, w));
    CHECK_THROWS_AS(l_class_number(7, 1, p), std::domain_error);
    CHECK_THROWS_AS(l_class_number(29, 0, p), std::domain_error);
}

TEST_CASE("block-summed series agree with the closed forms") {
    Precision p(30);
    // d = 29: conductor equals the modulus, series matches directly
    double s29 = l_partial_sum(29, 1000000);
    CHECK(std::fabs(s29 - l_class_number(29, 1, p).value.to_double()) < 1e-5);
    // d = 5 likewise: 2 log((1+sqrt5)/2)/sqrt5
    double s5 = l_partial_sum(5, 1000000);
    CHECK(std::fabs(s5 - l_class_number(5, 1, p).value.to_double()) < 1e-5);
    CHECK(std::fabs(s5 - 0.4304089) < 1e-5);
    // d = -8, -4: the m = |4d| tables are imprimitive, closed form = series/2
    double s8 = l_partial_sum(-8, 1000000);
    CHECK(std::fabs(s8 - 2 * l_negative(-8, p).value.to_double()) < 1e-5);
    double s4 = l_partial_sum(-4, 1000000);
    CHECK(std::fabs(s4 - 2 * l_negative(-4, p).value.to_double()) < 1e-5);
    CHECK(std::fabs(s4 - M_PI / 4) < 1e-5);  // the alternating odd series
}

TEST_CASE("sine product reduces to the exact unit") {
    // (2/(5+sqrt29)) = u^-1 exactly, so the trig quotient is u^2
    QuadraticSurd u(Rat(5, 2), Rat(1, 2), 29);
    CHECK(u.inverse() == QuadraticSurd(Rat(-5, 2), Rat(1, 2), 29));
    Precision w(40);
    Real quotient = exp(l_trig_product(29, w).value * sqrt(Real(29, w)));
    CHECK(quotient.abs_diff((u * u).to_real(w)) <= pow10(28, w));
}

TEST_SUITE_END();
