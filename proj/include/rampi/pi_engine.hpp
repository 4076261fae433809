// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "rampi/bigint.hpp"
#include "rampi/numeric.hpp"

namespace rampi {

// The series under test:
//   1/pi = (2 sqrt(2) / 9801) sum_{n>=0} (26390 n + 1103) (4n)! / ((n!)^4 396^(4n)).
// Terms decrease by a factor 396^4/256 = 9801^2 per step, just under eight
// decimal digits of accuracy each.

/// Exact value of one unscaled series term (26390n + 1103)(4n)!/((n!)^4 396^(4n)).
Rat literal_term(unsigned long n);

/// Exact partial sum over n in [0, nterms) by direct rational accumulation.
Rat series_partial_naive(unsigned long nterms);

/// The same partial sum by binary splitting over the integer term
/// recurrences; equal to the naive sum as an exact rational.
Rat series_partial_binsplit(unsigned long nterms);

/// pi to `digits` significant decimal digits: exact binary splitting for the
/// rational part, then a single sqrt(2) and a single division at target
/// precision. digits must lie in [1, 100000].
Real pi_ramanujan(long digits);

/// Decimal expansion of pi truncated to `digits` significant digits
/// (minimum two, so small requests still show the leading "3.1").
std::string pi_ramanujan_digits(long digits);
/// Same contract via the arctangent reference.
std::string pi_oracle_digits(long digits);

/// Per-term comparison of the assembled series (coefficients A, B, x built
/// from the singular-value context at r = 58) against the literal terms
/// scaled by 2 sqrt(2)/9801. All ratios are 1 to working accuracy, and the
/// integer identity 256^n 9801^(2n) = 396^(4n) ties the two normalizations.
struct TermwiseReport {
    std::vector<Real> ratio_minus_one;  // per-term |ratio - 1|
    bool prefactor_identity;            // 256^n 9801^(2n) == 396^(4n), n <= nmax
    bool exact_coefficients;            // A = 2206 sqrt(2), B = 52780 sqrt(2) exactly
};
TermwiseReport termwise_equivalence(unsigned long nmax, Precision p);

/// Convergence rate: analytic digits-per-term log10(396^4/256) and the
/// empirically measured per-term error reduction over the first partial sums.
struct ConvergenceRate {
    double analytic_digits_per_term;   // 7.9825...
    double empirical_reduction;        // |s_5 - 1/pi| / |s_4 - 1/pi| ~ 1.04e-8
};
ConvergenceRate digits_per_term();

/// Classical slow-series baselines: Basel with 1/N tail correction and the
/// alternating odd-reciprocal series with consecutive-partial-sum averaging,
/// both at N = 10^4, plus the uncorrected Basel error for contrast.
struct SanityReport {
    double basel_residual;
    double basel_uncorrected_residual;
    double leibniz_residual;
};
SanityReport sanity_series(Precision p);

}  // namespace rampi
