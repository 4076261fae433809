// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "rampi/bigint.hpp"
#include "rampi/numeric.hpp"

namespace rampi {

/// Kronecker symbol (d/n), the completely multiplicative extension of the
/// Legendre symbol: multiplicative in n, (d/2) by d mod 8, quadratic
/// reciprocity for odd prime parts, (d/1) = 1 and (d/-1) = sign rule.
int kronecker(long d, long n);

/// Quadratic Dirichlet character chi(n) = (d/n) reduced to one period.
/// The modulus is m = |d| for d = 1 (mod 4) and m = |4d| otherwise.
struct DirichletCharacter {
    long d;
    long m;
    std::vector<int> values;  // chi(1..m) stored at indices 0..m-1

    int operator()(long n) const;
};

DirichletCharacter character_table(long d);

enum class LRoute { negative_closed, trig_product, class_number, partial_sum };

struct LValue {
    long d;
    Real value;
    LRoute route;
};

/// |1 + sum_{k=2}^{m} k chi(k)|, the exact integer inner sum of the
/// closed form for d < 0.
Int l_negative_inner_sum(long d);

/// L_d(1) for d < 0:  pi / m^(3/2) * |1 + sum k chi(k)|.
LValue l_negative(long d, Precision p);

/// L_d(1) for d > 0, d = 1 (mod 4), from the class number formula
/// L = h log(E) / sqrt(d), with E the norm-one fundamental unit.
/// h is an input, never computed here. Note the sqrt: the variant of this
/// formula that divides by d instead is off by a factor sqrt(d) against
/// every other route and is reported as such by the verification suite.
LValue l_class_number(long d, long h, Precision p);

/// L_d(1) for d > 0 by the sine-product form
///   +- (1/sqrt(m)) log( prod_{chi(k)=1} sin(k pi/m) / prod_{chi(k)=-1} ... ),
/// with the sign chosen to make the value positive (L_d(1) > 0 for real
/// primitive characters).
LValue l_trig_product(long d, Precision p);

/// Brute-force partial sum of sum chi(n)/n over complete periods. Within a
/// full period the character sums to zero, so block summation converges
/// absolutely; double precision is ample for its 1e-5-level use.
double l_partial_sum(long d, long terms);

}  // namespace rampi
