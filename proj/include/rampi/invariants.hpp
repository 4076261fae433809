// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

#include "rampi/elliptic.hpp"
#include "rampi/numeric.hpp"
#include "rampi/surd.hpp"
#include "rampi/theta.hpp"

namespace rampi {

/// g-invariant g = ((k'^2)/(2k))^(1/12); requires k strictly inside (0, 1).
Real g_from_k(const EllipticModulus &m, Precision p);

/// Inverse map k = g^6 sqrt(g^12 + g^-12) - g^12, evaluated in the
/// cancellation-free conjugate form 1 / (g^6 sqrt(g^12 + g^-12) + g^12).
/// Requires g >= 2^(-1/8) so that k lands in (0, 1].
EllipticModulus k_from_g(const Real &g, Precision p);

/// g_n from the product over odd indices:
///   g_n = 2^(-1/4) e^(pi sqrt(n)/24) prod_{j odd} (1 - e^(-j pi sqrt(n))),
/// truncated once e^(-j pi sqrt(n)) falls below the working tolerance.
Real g_product(const Rat &n, Precision p);

/// Singular modulus of the first kind: k at nome q = exp(-pi sqrt(r)),
/// satisfying K'(k)/K(k) = sqrt(r).
EllipticModulus lambda_star(const Rat &r, Precision p);

/// Singular value function of the second kind at k = lambda*(r):
///   alpha(r) = pi/(4 K^2) - sqrt(r) (E/K - 1).
Real alpha(const Rat &r, Precision p);
/// Same quantity by the defining route alpha(r) = E'/K - pi/(4 K^2);
/// the two agree through the Legendre relation.
Real alpha_via_complementary(const Rat &r, Precision p);

/// Everything needed to instantiate the series at one singular level r:
/// the modulus, the g-invariant, alpha, and x = 2/(g^12 + g^-12).
/// For r = 58 the exact surd forms are carried alongside the numeric ones.
struct SingularValueContext {
    Rat r;
    EllipticModulus k;
    Real g;
    Real alpha;
    Real x;

    // exact backing, populated for r = 58
    std::optional<QuadraticSurd> g_squared;    // (5 + sqrt(29))/2
    std::optional<BiquadraticSurd> k_exact;    // (sqrt(2)-1)^6 (13 sqrt(58) - 99)
    std::optional<BiquadraticSurd> alpha_exact;
    std::optional<Rat> x_exact;                // 1/9801
};

/// Numeric context at any r > 0 (no exact backing).
SingularValueContext singular_context(const Rat &r, Precision p);

/// The exact-backed context at r = 58. Every value with a closed surd form
/// is computed exactly first and embedded numerically second.
SingularValueContext context58(Precision p);

/// Coefficients of the series 1/pi = sum c_n (A + B n) x^(2n+1) with
/// c_n = (1/4)_n (1/2)_n (3/4)_n / (n!)^3:
///   A = alpha(r) / (x (1 + k^2)) - sqrt(r) / (4 g^12)
///   B = sqrt(r) (g^12 - g^-12) / 2
struct SatoSeriesParams {
    Real A;
    Real B;
    Rat x;   // exact when the context carries x_exact; else a best-effort
             // rational approximation of the numeric x
    Rat r;
};
SatoSeriesParams sato_coefficients(const SingularValueContext &ctx, Precision p);

/// The r = 58 coefficients in exact biquadratic arithmetic over
/// Q(sqrt(2), sqrt(29)). A reduces to 2206 sqrt(2) and B to 52780 sqrt(2);
/// those equalities are verified exactly by the test suite.
struct SatoExactParams {
    BiquadraticSurd A;
    BiquadraticSurd B;
    Rat x;
};
SatoExactParams sato_exact_58();

}  // namespace rampi
