// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "rampi/bigint.hpp"
#include "rampi/numeric.hpp"

namespace rampi {

/// Positive definite binary quadratic form a m^2 + b mn + c n^2 for the
/// alternating lattice sum S1 = sum_{(m,n) != (0,0)} (-1)^m / (a m^2 + b mn + c n^2).
/// Only s = 1 and b = 0 are in scope.
struct LatticeSumSpec {
    long a = 1;
    long b = 0;
    long c = 1;
};

/// Plain truncation of S1 over the square 0 < max(|m|,|n|) <= R, in the fixed
/// order: n from -R to R (outer), m from 0 upward pairing +-m (inner).
/// The conditional convergence of the double sum makes the order part of the
/// definition. The tail estimate is the coherent alternating-tail integral
/// over the cut rows, reported but never added.
struct TruncatedSum {
    double sum;
    double tail_estimate;
};
TruncatedSum s1_truncated(const LatticeSumSpec &spec, long R);

/// S1(1, 0, r; 1) by the geometrically convergent route
///   -(pi/sqrt(r)) log(2 g_r^4),
///   log(2 g_r^4) = pi sqrt(r)/6 + 4 sum_{j odd} log(1 - e^(-j pi sqrt(r))).
/// Three product factors already suffice at 30 digits for r = 58.
Real s1_csch(const Rat &r, Precision p);

/// The L-series decomposition of -S1(1,0,2P;1) at P = 29:
///   (pi/sqrt(58)) log 2 + 4 L_{-8}(1) L_{29}(1).
/// A literal reading of the general decomposition yields constant 2 instead
/// of 4 on the L-term; the dual-evaluator comparison against s1_csch settles
/// the constant at 4, and the verification suite reports both candidates.
Real zucker_robertson(long P, Precision p);

/// Dual-evaluator report for the csch-route identity at level r: the csch
/// value, its residual against the g-product formula evaluated through the
/// theta/singular-modulus route, and the truncated-sum differences at the
/// requested radii.
struct WongReport {
    Real csch_value;
    Real cross_route_residual;
    std::vector<std::pair<long, double>> truncated_diff;  // (R, |S1_R - csch|)
};
WongReport wong_check(const Rat &r, Precision p, const std::vector<long> &radii);

}  // namespace rampi
