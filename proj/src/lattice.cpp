// SPDX-License-Identifier: Apache-2.0

#include "rampi/lattice.hpp"

#include <cmath>
#include <stdexcept>

#include "rampi/invariants.hpp"
#include "rampi/lseries.hpp"

namespace rampi {

TruncatedSum s1_truncated(const LatticeSumSpec &spec, long R) {
    if (spec.b != 0) throw std::domain_error("only diagonal forms (b = 0) are supported");
    if (spec.a <= 0 || 4.0 * spec.a * spec.c - 1.0 * spec.b * spec.b <= 0)
        throw std::domain_error("form is not positive definite");
    if (R < 10) throw std::domain_error("truncation radius must be >= 10");

    const double a = static_cast<double>(spec.a);
    const double c = static_cast<double>(spec.c);
    double sum = 0.0;
    for (long n = -R; n <= R; ++n) {
        double cn2 = c * static_cast<double>(n) * static_cast<double>(n);
        double row = (n != 0) ? 1.0 / cn2 : 0.0;  // m = 0 term, absent for n = 0
        double sign = -1.0;                        // (-1)^m starting at m = 1
        for (long m = 1; m <= R; ++m) {
            row += sign * 2.0 / (a * static_cast<double>(m) * static_cast<double>(m) + cn2);
            sign = -sign;
        }
        sum += row;
    }
    // Coherent alternating-tail estimate across the cut rows:
    // sum_n 1/(a R^2 + c n^2) ~ (2/(R sqrt(ac))) atan(sqrt(c/a)).
    double tail = 2.0 / (static_cast<double>(R) * std::sqrt(a * c)) *
                  std::atan(std::sqrt(c / a));
    return {sum, tail};
}

Real s1_csch(const Rat &r, Precision p) {
    if (r < Rat(1)) throw std::domain_error("csch route needs r >= 1");
    Precision w = p.plus(guard_digits());
    Real pi = pi_oracle(w);
    Real pisqrt = pi * sqrt(Real::from(r, w));
    // log(2 g_r^4) accumulated directly from the product form
    Real log2g4 = pisqrt / 6;
    Real q = exp(-pisqrt);
    Real q2 = q * q;
    Real factor = q;
    Real stop = pow10(w.digits, w);
    while (!(factor < stop)) {
        log2g4 = log2g4 + 4 * log(1 - factor);
        factor = factor * q2;
    }
    return -(pi / sqrt(Real::from(r, w))) * log2g4;
}

Real zucker_robertson(long P, Precision p) {
    if (P != 29) throw std::domain_error("decomposition instantiated for P = 29 only");
    Precision w = p.plus(guard_digits());
    // mu = 1 term vanishes: 1 - (2/1) * 2^(1-s) = 0 at s = 1.
    // mu = 29 term: 1 - (2/29) = 2 with kronecker(2,29) = -1,
    // and 2^(1-t) = 1 for the single prime factor; the adopted L-constant is 4.
    Real l8 = l_negative(-8, w).value;
    Real l29 = l_class_number(29, 1, w).value;
    Real pi = pi_oracle(w);
    Real log2 = log(Real(2, w));
    return pi / sqrt(Real(58, w)) * log2 + 4 * l8 * l29;
}

WongReport wong_check(const Rat &r, Precision p, const std::vector<long> &radii) {
    Precision w = p.plus(guard_digits());
    Real csch = s1_csch(r, w);

    // Cross-route: rebuild -(pi/sqrt(r)) log(2 g^4) with g from the
    // singular-modulus route (theta series at the nome), not the product.
    Real g = g_from_k(lambda_star(r, w), w);
    Real pi = pi_oracle(w);
    Real other = -(pi / sqrt(Real::from(r, w))) * log(2 * pow_si(g, 4));
    Real residual = csch.abs_diff(other);

    WongReport rep{std::move(csch), std::move(residual), {}};
    if (!r.is_integer()) return rep;
    LatticeSumSpec spec{1, 0, r.num().to_long()};
    double csch_d = rep.csch_value.to_double();
    for (long R : radii) {
        TruncatedSum t = s1_truncated(spec, R);
        rep.truncated_diff.emplace_back(R, std::fabs(t.sum - csch_d));
    }
    return rep;
}

}  // namespace rampi
