// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <stdexcept>

#include "rampi/elliptic.hpp"

using namespace rampi;

TEST_SUITE_BEGIN("elliptic");

namespace {
EllipticModulus mod(const char *k, Precision p) { return EllipticModulus::from_k(Real(k, p)); }
}  // namespace

TEST_CASE("endpoint values") {
    Precision p(30);
    Real halfpi = pi_oracle(p.plus(10)) / 2;
    CHECK(elliptic_K(EllipticModulus::from_k(Real(0, p)), p).abs_diff(halfpi) <= pow10(30, p));
    CHECK(elliptic_E(EllipticModulus::from_k(Real(0, p)), p).abs_diff(halfpi) <= pow10(30, p));
    CHECK(elliptic_E(EllipticModulus::from_k(Real(1, p)), p) == 1);
    CHECK_THROWS_AS(elliptic_K(EllipticModulus::from_k(Real(1, p)), p), std::domain_error);
    CHECK_THROWS_AS(EllipticModulus::from_k(Real(2, p)), std::domain_error);
    CHECK_THROWS_AS(EllipticModulus::from_k(Real(-1, p)), std::domain_error);
}

// 30-digit reference values from the tanh-sinh quadrature of the defining
// integrals (frozen; the quadrature itself is exercised below)
TEST_CASE("frozen values at 30 digits") {
    Precision p(30);
    Real invsqrt2 = 1 / sqrt(Real(2, p.plus(10)));
    CHECK(elliptic_K(EllipticModulus::from_k(invsqrt2), p).str(30) ==
          "1.85407467730137191843385034720");
    CHECK(elliptic_K(mod("0.5", p.plus(10)), p).str(30) == "1.68575035481259604287120365780");
    CHECK(elliptic_E(mod("0.5", p.plus(10)), p).str(30) == "1.46746220933942715545979526699");
}

TEST_CASE("agm and quadrature evaluators agree") {
    Precision p(30);
    for (const char *k : {"0.1", "0.5", "0.9"}) {
        auto m = mod(k, p.plus(12));
        CHECK(elliptic_K(m, p).abs_diff(elliptic_K_quadrature(m, p)) <= pow10(29, p));
        CHECK(elliptic_E(m, p).abs_diff(elliptic_E_quadrature(m, p)) <= pow10(29, p));
    }
}

TEST_CASE("derivative formulas against central differences") {
    Precision w(42);
    Real h = pow10(10, w);
    for (const char *ks : {"0.2", "0.5", "0.8"}) {
        Real k(ks, w);
        auto m = EllipticModulus::from_k(k);
        auto up = EllipticModulus::from_k(k + h);
        auto dn = EllipticModulus::from_k(k - h);
        Real fdK = (elliptic_K(up, w) - elliptic_K(dn, w)) / (2 * h);
        Real fdE = (elliptic_E(up, w) - elliptic_E(dn, w)) / (2 * h);
        CHECK((dK_dk(m, w) / fdK - 1).abs() <= pow10(12, w));
        CHECK((dE_dk(m, w) / fdE - 1).abs() <= pow10(12, w));
    }
    CHECK_THROWS_AS(dK_dk(EllipticModulus::from_k(Real(0, w)), w), std::domain_error);
    CHECK_THROWS_AS(dE_dk(EllipticModulus::from_k(Real(1, w)), w), std::domain_error);
}

TEST_CASE("dE/dk is the direct composition (E - K)/k") {
    Precision p(30);
    auto m = mod("0.5", p.plus(10));
    Real direct = (elliptic_E(m, p) - elliptic_K(m, p)) / m.k;
    CHECK(dE_dk(m, p).abs_diff(direct) <= pow10(28, p));
}

TEST_CASE("complementary integrals") {
    Precision p(30);
    auto m06 = mod("0.6", p.plus(10));
    auto m08 = mod("0.8", p.plus(10));
    CHECK(complementary(m06, p).Kprime.abs_diff(elliptic_K(m08, p)) <= pow10(28, p));
    // k = k' fixed point
    Real invsqrt2 = 1 / sqrt(Real(2, p.plus(10)));
    auto fixed = EllipticModulus::from_k(invsqrt2);
    CHECK(complementary(fixed, p).Kprime.abs_diff(elliptic_K(fixed, p)) <= pow10(28, p));
}

TEST_CASE("legendre relation on a grid") {
    Precision p(30);
    for (const char *k : {"0.01", "0.1", "0.5", "0.9", "0.99"})
        CHECK(legendre_residual(mod(k, p.plus(12)), p).abs() <= pow10(20, p));
}

TEST_CASE("K increases and E decreases in k") {
    Precision p(25);
    Real lastK = elliptic_K(mod("0.05", p), p);
    Real lastE = elliptic_E(mod("0.05", p), p);
    for (const char *k : {"0.15", "0.3", "0.5", "0.7", "0.9"}) {
        Real K = elliptic_K(mod(k, p), p);
        Real E = elliptic_E(mod(k, p), p);
        CHECK(K > lastK);
        CHECK(E < lastE);
        lastK = K;
        lastE = E;
    }
}

TEST_CASE("modulus pair validation") {
    Precision p(25);
    CHECK_THROWS_AS(EllipticModulus::from_parts(Real("0.5", p), Real("0.5", p)),
                    std::domain_error);
    auto ok = EllipticModulus::from_parts(Real("0.6", p), Real("0.8", p));
    CHECK(ok.kprime == Real("0.8", p));
}

TEST_SUITE_END();
