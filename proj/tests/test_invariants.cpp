// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <stdexcept>

#include "rampi/invariants.hpp"

using namespace rampi;

TEST_SUITE_BEGIN("invariants");

TEST_CASE("g at the self-complementary point is 2^(-1/8)") {
    Precision w(40);
    auto m = EllipticModulus::from_k(1 / sqrt(Real(2, w)));
    Real g = g_from_k(m, w);
    CHECK(g.abs_diff(1 / root(Real(2, w), 8)) <= pow10(30, w));
    CHECK_THROWS_AS(g_from_k(EllipticModulus::from_k(Real(0, w)), w), std::domain_error);
}

TEST_CASE("k_from_g inverts g_from_k") {
    Precision w(40);
    for (const char *ks : {"0.2", "0.5"}) {
        auto m = EllipticModulus::from_k(Real(ks, w));
        CHECK(k_from_g(g_from_k(m, w), w).k.abs_diff(m.k) <= pow10(30, w));
    }
    CHECK(k_from_g(1 / root(Real(2, w), 8), w).k.abs_diff(1 / sqrt(Real(2, w))) <= pow10(30, w));
    CHECK_THROWS_AS(k_from_g(Real("0.5", w), w), std::domain_error);
    // decay k ~ 1/(2 g^12) at large g
    Real k10 = k_from_g(Real(10, w), w).k;
    CHECK((k10 * 2 * pow_si(Real(10, w), 12) - 1).abs() < Real("0.01", w));
}

TEST_CASE("g_product matches closed forms") {
    Precision p(30);
    Precision w(42);
    QuadraticSurd u(Rat(5, 2), Rat(1, 2), 29);
    CHECK(g_product(Rat(58), p).abs_diff(sqrt(u.to_real(w))) <= pow10(20, w));
    CHECK(g_product(Rat(4), p).abs_diff(root(Real(2, w), 8)) <= pow10(20, w));
    CHECK(g_product(Rat(2), p).abs_diff(Real(1, w)) <= pow10(20, w));
    CHECK_THROWS_AS(g_product(Rat(1, 2), p), std::domain_error);
    for (long r : {2L, 4L, 10L, 58L})
        CHECK(g_product(Rat(r), p).abs_diff(g_from_k(lambda_star(Rat(r), w), w)) <= pow10(20, w));
}

TEST_CASE("singular moduli") {
    Precision w(40);
    CHECK(lambda_star(Rat(1), w).k.abs_diff(1 / sqrt(Real(2, w))) <= pow10(30, w));
    // classical closed forms at r = 2, 4
    CHECK(lambda_star(Rat(2), w).k.abs_diff(sqrt(Real(2, w)) - 1) <= pow10(30, w));
    CHECK(lambda_star(Rat(4), w).k.abs_diff(3 - 2 * sqrt(Real(2, w))) <= pow10(30, w));
    for (long r : {4L, 58L}) {
        auto m = lambda_star(Rat(r), w);
        Real ratio = complementary(m, w).Kprime / elliptic_K(m, w);
        CHECK(ratio.abs_diff(sqrt(Real(r, w))) <= pow10(30, w));
    }
    CHECK_THROWS_AS(lambda_star(Rat(-3), w), std::domain_error);
}

TEST_CASE("alpha routes and classical values") {
    Precision p(30);
    for (long r : {1L, 2L, 4L, 58L})
        CHECK(alpha(Rat(r), p).abs_diff(alpha_via_complementary(Rat(r), p)) <= pow10(20, p));
    Precision w(40);
    CHECK(alpha(Rat(1), p).abs_diff(Real(1, w) / 2) <= pow10(20, w));
    CHECK(alpha(Rat(2), p).abs_diff(sqrt(Real(2, w)) - 1) <= pow10(20, w));
}

TEST_CASE("alpha approaches 1/pi inside the stated envelope") {
    Precision w(40);
    Real inv_pi = 1 / pi_oracle(w);
    for (long r : {25L, 49L, 100L}) {
        Real excess = alpha(Rat(r), w) - inv_pi;
        Real bound = 16 * sqrt(Real(r, w)) * exp(-pi_oracle(w) * sqrt(Real(r, w)));
        CHECK(excess.sign() > 0);
        CHECK(excess <= bound);
    }
}

TEST_CASE("the r = 58 context is exact-backed") {
    Precision p(40);
    SingularValueContext ctx = context58(p);
    REQUIRE(ctx.x_exact.has_value());
    CHECK(*ctx.x_exact == Rat(1, 9801));
    REQUIRE(ctx.k_exact.has_value());
    CHECK(*ctx.k_exact == BiquadraticSurd(Rat(-9801), Rat(6930), Rat(-1820), Rat(1287)));
    REQUIRE(ctx.g_squared.has_value());
    CHECK(*ctx.g_squared == QuadraticSurd(Rat(5, 2), Rat(1, 2), 29));
    // numeric fields embed the exact ones
    CHECK(ctx.k.k.abs_diff(ctx.k_exact->to_real(p)) <= pow10(35, p));
    CHECK(ctx.x.abs_diff(Real::from(Rat(1, 9801), p)) <= pow10(35, p));
    // alpha(58) from the surd form agrees with the elliptic-integral route
    CHECK(ctx.alpha.abs_diff(alpha(Rat(58), Precision(30))) <= pow10(20, p));
}

TEST_CASE("x_58 and k_58 exact identities") {
    SingularValueContext ctx = context58(Precision(30));
    BiquadraticSurd k = *ctx.k_exact;
    BiquadraticSurd one = BiquadraticSurd::rational(Rat(1));
    BiquadraticSurd k2 = k * k;
    BiquadraticSurd x = Rat(4) * (k * (one - k2)) * ((one + k2) * (one + k2)).inverse();
    CHECK(x.is_rational());
    CHECK(x.rational_value() == Rat(1, 9801));
    // (g^12 +- g^-12)/2 resolve exactly
    QuadraticSurd u = *ctx.g_squared;
    QuadraticSurd half(Rat(1, 2), Rat(0), 29);
    CHECK((u.pow(6) + u.pow(-6)) * half == QuadraticSurd(Rat(9801), Rat(0), 29));
    CHECK((u.pow(6) - u.pow(-6)) * half == QuadraticSurd(Rat(0), Rat(1820), 29));
}

TEST_CASE("series coefficients collapse to 2206 sqrt2 and 52780 sqrt2") {
    SatoExactParams ex = sato_exact_58();
    CHECK(ex.A == BiquadraticSurd(Rat(0), Rat(2206), Rat(0), Rat(0)));
    CHECK(ex.B == BiquadraticSurd(Rat(0), Rat(52780), Rat(0), Rat(0)));
    CHECK(ex.x == Rat(1, 9801));
    // and the numeric assembly lands on the same numbers
    Precision w(40);
    SingularValueContext ctx = context58(w);
    SatoSeriesParams params = sato_coefficients(ctx, w);
    CHECK(params.A.abs_diff(ex.A.to_real(w)) <= pow10(30, w));
    CHECK(params.B.abs_diff(ex.B.to_real(w)) <= pow10(25, w));
    CHECK(params.x == Rat(1, 9801));
}

TEST_CASE("series assembly requires an exact x") {
    Precision p(25);
    SingularValueContext general = singular_context(Rat(3), p);
    CHECK_THROWS_AS(sato_coefficients(general, p), std::domain_error);
}

TEST_SUITE_END();
