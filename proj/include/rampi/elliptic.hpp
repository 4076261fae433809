// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "rampi/numeric.hpp"

namespace rampi {

/// Elliptic modulus k in [0, 1] together with the complementary modulus
/// k' = sqrt(1 - k^2). k^2 + k'^2 = 1 holds to the working precision.
struct EllipticModulus {
    Real k;
    Real kprime;

    /// Builds the pair from k, computing k' = sqrt(1 - k^2).
    static EllipticModulus from_k(const Real &k);
    /// Builds from both parts (used when a series yields k and k' separately);
    /// rejects pairs violating k^2 + k'^2 = 1 beyond the precision tag.
    static EllipticModulus from_parts(Real k, Real kprime);
};

/// Complete elliptic integral of the first kind, by the arithmetic-geometric
/// mean: K = pi / (2 agm(1, k')). Quadratically convergent.
/// k = 1 diverges (throws); k = 0 returns pi/2 exactly from the closed form.
Real elliptic_K(const EllipticModulus &m, Precision p);

/// Complete elliptic integral of the second kind, from the AGM c-sequence:
/// E = K (1 - sum 2^(j-1) c_j^2) with c_0 = k. E(1) = 1 closed form.
Real elliptic_E(const EllipticModulus &m, Precision p);

// Direct tanh-sinh quadrature of the defining integrals over [0, pi/2].
// Slower than the AGM; these are the independent cross-check evaluators.
Real elliptic_K_quadrature(const EllipticModulus &m, Precision p);
Real elliptic_E_quadrature(const EllipticModulus &m, Precision p);

/// dK/dk = (E - k'^2 K) / (k k'^2); requires k in (0, 1).
Real dK_dk(const EllipticModulus &m, Precision p);
/// dE/dk = (E - K) / k; requires k in (0, 1).
Real dE_dk(const EllipticModulus &m, Precision p);

struct ComplementaryKE {
    Real Kprime;  // K(k')
    Real Eprime;  // E(k')
};
ComplementaryKE complementary(const EllipticModulus &m, Precision p);

/// K E' + E K' - K K' - pi/2; zero for every k in (0, 1).
Real legendre_residual(const EllipticModulus &m, Precision p);

}  // namespace rampi
