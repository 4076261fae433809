// SPDX-License-Identifier: Apache-2.0

#include "rampi/invariants.hpp"

#include <stdexcept>

namespace rampi {

Real g_from_k(const EllipticModulus &m, Precision p) {
    if (m.k.sign() <= 0 || !(m.k < 1))
        throw std::domain_error("g_from_k needs k strictly inside (0, 1)");
    Precision w = p.plus(guard_digits());
    Real ratio = m.kprime * m.kprime / (2 * Real(m.k));
    return root(ratio, 12);
}

EllipticModulus k_from_g(const Real &g, Precision p) {
    Precision w = p.plus(guard_digits());
    Real lower = root(Real(2, w), 8);  // 2^(1/8); g >= 1/lower, up to rounding slack
    if (g * lower < 1 - pow10(w.digits - 2, w))
        throw std::domain_error("k_from_g needs g >= 2^(-1/8)");
    Real g6 = pow_si(g, 6);
    Real g12 = g6 * g6;
    Real k = 1 / (g6 * sqrt(g12 + 1 / g12) + g12);
    if (k.sign() <= 0 || k > 1)
        throw std::domain_error("k_from_g produced a modulus outside (0, 1]: k = " + k.sci());
    return EllipticModulus::from_k(k);
}

Real g_product(const Rat &n, Precision p) {
    if (n < Rat(1)) throw std::domain_error("g_product needs n >= 1");
    Precision w = p.plus(guard_digits());
    Real pisqrt = pi_oracle(w) * sqrt(Real::from(n, w));
    Real q = exp(-pisqrt);          // e^(-pi sqrt(n))
    Real q2 = q * q;
    Real prod(1, w);
    Real factor = q;                 // e^(-j pi sqrt(n)), j odd
    Real stop = pow10(w.digits, w);
    while (!(factor < stop)) {
        prod = prod * (1 - factor);
        factor = factor * q2;
    }
    Real quarter = root(Real(2, w), 4);
    return exp(pisqrt / 24) / quarter * prod;
}

EllipticModulus lambda_star(const Rat &r, Precision p) {
    if (r.sign() <= 0) throw std::domain_error("lambda_star needs r > 0");
    Precision w = p.plus(guard_digits());
    Real q = exp(-(pi_oracle(w) * sqrt(Real::from(r, w))));
    return k_from_q(Nome(q), w);
}

Real alpha(const Rat &r, Precision p) {
    Precision w = p.plus(guard_digits());
    EllipticModulus m = lambda_star(r, w);
    Real K = elliptic_K(m, w);
    Real E = elliptic_E(m, w);
    Real sqrt_r = sqrt(Real::from(r, w));
    return pi_oracle(w) / (4 * K * K) - sqrt_r * (E / K - 1);
}

Real alpha_via_complementary(const Rat &r, Precision p) {
    Precision w = p.plus(guard_digits());
    EllipticModulus m = lambda_star(r, w);
    Real K = elliptic_K(m, w);
    ComplementaryKE c = complementary(m, w);
    return c.Eprime / K - pi_oracle(w) / (4 * K * K);
}

SingularValueContext singular_context(const Rat &r, Precision p) {
    Precision w = p.plus(guard_digits());
    SingularValueContext ctx{r, lambda_star(r, w), Real(w), Real(w), Real(w), {}, {}, {}, {}};
    ctx.g = g_from_k(ctx.k, w);
    ctx.alpha = alpha(r, w);
    Real g12 = pow_si(ctx.g, 12);
    ctx.x = 2 / (g12 + 1 / g12);
    return ctx;
}

namespace {

// k_58 = (sqrt(2)-1)^6 (13 sqrt(58) - 99), expanded over {1, sqrt2, sqrt29, sqrt58}
BiquadraticSurd k58_exact_surd() {
    BiquadraticSurd a(Rat(99), Rat(-70), Rat(0), Rat(0));       // (sqrt(2)-1)^6 = 99 - 70 sqrt(2)
    BiquadraticSurd b(Rat(-99), Rat(0), Rat(0), Rat(13));       // 13 sqrt(58) - 99
    return a * b;
}

BiquadraticSurd alpha58_exact_surd() {
    // 3 g^6 k (33 sqrt(29) - 148) with g^6 = 70 + 13 sqrt(29)
    BiquadraticSurd g6(Rat(70), Rat(0), Rat(13), Rat(0));
    BiquadraticSurd tail(Rat(-148), Rat(0), Rat(33), Rat(0));
    return Rat(3) * (g6 * k58_exact_surd() * tail);
}

}  // namespace

SingularValueContext context58(Precision p) {
    Precision w = p.plus(guard_digits());
    QuadraticSurd u(Rat(5, 2), Rat(1, 2), 29);  // g^2
    QuadraticSurd u6 = u.pow(6);                // g^12 = 9801 + 1820 sqrt(29)
    QuadraticSurd u6inv = u.pow(-6);
    QuadraticSurd x_sum = u6 + u6inv;           // 19602, exactly rational
    if (!x_sum.is_rational()) throw std::logic_error("g^12 + g^-12 not rational");
    Rat x_exact = Rat(2) / x_sum.a();

    BiquadraticSurd k_exact = k58_exact_surd();
    BiquadraticSurd alpha_exact = alpha58_exact_surd();

    SingularValueContext ctx{Rat(58),
                             EllipticModulus::from_k(k_exact.to_real(w)),
                             sqrt(u.to_real(w)),
                             alpha_exact.to_real(w),
                             Real::from(x_exact, w),
                             u,
                             k_exact,
                             alpha_exact,
                             x_exact};
    return ctx;
}

SatoSeriesParams sato_coefficients(const SingularValueContext &ctx, Precision p) {
    if (!ctx.x_exact)
        throw std::domain_error("series assembly needs a context carrying an exact x");
    Precision w = p.plus(guard_digits());
    Real sqrt_r = sqrt(Real::from(ctx.r, w));
    Real g12 = pow_si(ctx.g, 12);
    Real k2 = Real(ctx.k.k) * ctx.k.k;
    Real A = ctx.alpha / (ctx.x * (1 + k2)) - sqrt_r / (4 * g12);
    Real B = sqrt_r * (g12 - 1 / g12) / 2;
    return {std::move(A), std::move(B), *ctx.x_exact, ctx.r};
}

SatoExactParams sato_exact_58() {
    QuadraticSurd u(Rat(5, 2), Rat(1, 2), 29);
    QuadraticSurd u6 = u.pow(6);
    QuadraticSurd u6inv = u.pow(-6);
    Rat x = Rat(2) / (u6 + u6inv).a();

    BiquadraticSurd k = k58_exact_surd();
    BiquadraticSurd alpha = alpha58_exact_surd();
    BiquadraticSurd one = BiquadraticSurd::rational(Rat(1));
    BiquadraticSurd g12(u6.a(), Rat(0), u6.b(), Rat(0));
    BiquadraticSurd g12inv(u6inv.a(), Rat(0), u6inv.b(), Rat(0));
    BiquadraticSurd sqrt58(Rat(0), Rat(0), Rat(0), Rat(1));

    BiquadraticSurd one_plus_k2 = one + k * k;
    BiquadraticSurd A = alpha * (x * one_plus_k2).inverse() -
                        sqrt58 * (Rat(4) * g12).inverse();
    BiquadraticSurd B = Rat(1, 2) * (sqrt58 * (g12 - g12inv));
    return {std::move(A), std::move(B), std::move(x)};
}

}  // namespace rampi
