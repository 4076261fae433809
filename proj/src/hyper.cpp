// SPDX-License-Identifier: Apache-2.0

#include "rampi/hyper.hpp"

#include <stdexcept>

#include "rampi/invariants.hpp"

namespace rampi {

Rat pochhammer(const Rat &q, unsigned long n) {
    Rat acc(1);
    Rat factor = q;
    for (unsigned long i = 0; i < n; ++i) {
        acc *= factor;
        factor += Rat(1);
    }
    return acc;
}

FactorialIdentity lemma_256(unsigned long n) {
    Rat lhs = pochhammer(Rat(1, 4), n) * pochhammer(Rat(1, 2), n) * pochhammer(Rat(3, 4), n);
    Rat rhs = Rat(Int::factorial(4 * n), Int::pow(256, n) * Int::factorial(n));
    return {lhs, rhs, lhs == rhs};
}

namespace {

void validate(const HyperSeriesSpec &spec) {
    for (const Rat &l : spec.lower) {
        if (l.is_integer() && l.sign() <= 0)
            throw std::domain_error("lower parameter is a non-positive integer");
    }
    Real zm = Real::from_double(kHyperZMax, spec.z.precision());
    if (spec.z.abs() > zm)
        throw std::domain_error("series argument outside |z| <= " + std::to_string(kHyperZMax));
}

}  // namespace

Real eval_pfq(const HyperSeriesSpec &spec, Precision p) {
    validate(spec);
    // Generous term budget: near |z| = 1 the geometric decay per term is
    // only 1 - |z|, so arguments around 0.9996 legitimately need ~10^5 terms.
    const long max_terms = 4000000;
    Precision w = p.plus(guard_digits(max_terms));
    Real term(1, w);
    Real acc(1, w);
    Real stop = pow10(p.digits + guard_digits(), w);
    Real z(spec.z);
    Real zabs = z.abs();
    for (long n = 0; n < max_terms; ++n) {
        // term ratio (prod (u+n) / prod (l+n)) / (n+1), exact
        Rat num(1), den(n + 1);
        for (const Rat &u : spec.upper) num *= u + Rat(n);
        for (const Rat &l : spec.lower) den *= l + Rat(n);
        Rat ratio = num / den;
        term = term * Real::from(ratio, w) * z;
        acc = acc + term;
        // stop under geometric tail domination: |term| small and ratio*z < 1
        if (term.abs() < stop && Real::from(ratio.abs(), w) * zabs < 1) return acc;
    }
    throw std::runtime_error("hypergeometric series did not converge in the term budget");
}

Real eval_2f1(const Rat &a, const Rat &b, const Rat &c, const Real &z, Precision p) {
    return eval_pfq({{a, b}, {c}, z}, p);
}

Real eval_3f2(const Rat &a, const Rat &b, const Rat &c, const Rat &d, const Rat &e,
              const Real &z, Precision p) {
    return eval_pfq({{a, b, c}, {d, e}, z}, p);
}

namespace {

void check_branch(const Real &k) {
    // branch of the quadratic transformation: 0 <= k <= 1/sqrt(2)
    Precision w = k.precision();
    Real bound = sqrt(Real(2, w)) / 2;
    if (k.sign() < 0 || k > bound + pow10(k.digits(), w))
        throw std::domain_error("identity valid only for k in [0, 1/sqrt(2)]");
}

}  // namespace

Real kummer_residual(const Real &k, Precision p) {
    check_branch(k);
    Precision w = p.plus(guard_digits());
    if (k.is_zero()) return Real(0, w);
    Real k2 = k * k;
    Real z = 4 * k2 * (1 - k2);  // (2kk')^2
    Real lhs = eval_2f1(Rat(1, 4), Rat(1, 4), Rat(1), z, w);
    Real rhs = eval_2f1(Rat(1, 2), Rat(1, 2), Rat(1), k2, w);
    return lhs - rhs;
}

Real clausen_residual(const Real &k, Precision p) {
    check_branch(k);
    Precision w = p.plus(guard_digits());
    if (k.is_zero()) return Real(0, w);
    Real k2 = k * k;
    Real z = 4 * k2 * (1 - k2);
    Real f = eval_2f1(Rat(1, 4), Rat(1, 4), Rat(1), z, w);
    Real g = eval_3f2(Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1), Rat(1), z, w);
    return f * f - g;
}

Real K2_from_g(const Real &g, Precision p) {
    if (!(g > 1)) throw std::domain_error("K2_from_g needs g > 1");
    Precision w = p.plus(guard_digits());
    Real g12 = pow_si(g, 12);
    Real x = 2 / (g12 + 1 / g12);
    EllipticModulus m = k_from_g(g, w);
    Real series = eval_3f2(Rat(1, 4), Rat(3, 4), Rat(1, 2), Rat(1), Rat(1), x * x, w);
    return series / (1 + m.k * m.k);
}

}  // namespace rampi
