// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "rampi/bigint.hpp"
#include "rampi/numeric.hpp"

namespace rampi {

/// Rising factorial (q)_n = q (q+1) ... (q+n-1), exact; (q)_0 = 1.
Rat pochhammer(const Rat &q, unsigned long n);

/// Both sides of the exact identity
///   (1/4)_n (1/2)_n (3/4)_n = (4n)! / (256^n n!),
/// which collapses the triple Pochhammer product of the series coefficients
/// into a factorial ratio.
struct FactorialIdentity {
    Rat lhs, rhs;
    bool equal;
};
FactorialIdentity lemma_256(unsigned long n);

/// Generalized hypergeometric series sum_n (prod (u_i)_n / prod (l_j)_n) z^n/n!.
/// Convergence domain here is |z| <= z_max < 1; lower parameters must not be
/// non-positive integers. All parameters rational (all uses need only
/// 1/4, 1/2, 3/4, 1).
struct HyperSeriesSpec {
    std::vector<Rat> upper;
    std::vector<Rat> lower;
    Real z;
};

/// Largest |z| accepted by the series evaluator. Chosen so the identity
/// checks below can run across k in [0, 0.7], where the argument (2kk')^2
/// reaches 0.9996.
inline constexpr double kHyperZMax = 0.9999;

Real eval_pfq(const HyperSeriesSpec &spec, Precision p);
Real eval_2f1(const Rat &a, const Rat &b, const Rat &c, const Real &z, Precision p);
Real eval_3f2(const Rat &a, const Rat &b, const Rat &c, const Rat &d, const Rat &e,
              const Real &z, Precision p);

/// 2F1(1/4,1/4;1;(2kk')^2) - 2F1(1/2,1/2;1;k^2); identically zero on
/// k in [0, 1/sqrt(2)] (the quadratic-transformation branch).
Real kummer_residual(const Real &k, Precision p);

/// (2F1(1/4,1/4;1;z))^2 - 3F2(1/2,1/2,1/2;1,1;z) at z = (2kk')^2;
/// identically zero on the same branch.
Real clausen_residual(const Real &k, Precision p);

/// [(2/pi) K(k)]^2 expressed through the g-invariant:
///   prefactor * 3F2(1/4,3/4,1/2;1,1;x^2),  x = 2/(g^12 + g^-12),
/// valid for g > 1 (k below sqrt(2)-1). The commonly printed prefactor
/// 1/k^2 does not reproduce K (it already fails in the k -> 0 limit);
/// the numerically validated prefactor is 1/(1+k^2), which this evaluator
/// uses. The verification suite reports both variants.
Real K2_from_g(const Real &g, Precision p);

}  // namespace rampi
