// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "rampi/elliptic.hpp"
#include "rampi/numeric.hpp"

namespace rampi {

/// Nome q of the theta series, restricted to real 0 <= q < 1.
struct Nome {
    Real q;
    explicit Nome(Real q);
};

// One-variable theta series. Partial sums are truncated at an index N with
// tail bound q^(N^2)/(1-q) below the working tolerance.
Real theta2(const Nome &q, Precision p);
Real theta3(const Nome &q, Precision p);
Real theta4(const Nome &q, Precision p);  // alternating series, = theta3 at -q

/// q = exp(-pi K'(k)/K(k)); requires k strictly inside (0, 1).
Nome nome_from_k(const EllipticModulus &m, Precision p);

/// Modulus from the nome: k = theta2^2/theta3^2, k' = theta4^2/theta3^2.
/// q = 0 yields k = 0 (the limit value).
EllipticModulus k_from_q(const Nome &q, Precision p);

/// K via the theta null value: K = (pi/2) theta3^2(q).
Real K_from_q(const Nome &q, Precision p);

}  // namespace rampi
