// SPDX-License-Identifier: Apache-2.0

#include "rampi/verify.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "rampi/elliptic.hpp"
#include "rampi/hyper.hpp"
#include "rampi/invariants.hpp"
#include "rampi/lattice.hpp"
#include "rampi/lseries.hpp"
#include "rampi/pi_engine.hpp"
#include "rampi/surd.hpp"
#include "rampi/theta.hpp"

namespace rampi {

namespace {

using Values = std::vector<std::pair<std::string, std::string>>;

// residual tolerance 10^(-(p-10)) for the identity suites: 1e-20 at the
// default 30-digit verification precision
Real suite_tol(Precision p) { return pow10(p.digits - 10, p); }

std::string fmt(const Real &x, long digits = 25) { return x.str(digits); }

CheckResult residual_check(std::string id, std::string anchor, const Real &residual,
                           const Real &tol, Values values, std::string notes = "",
                           bool flagged = false) {
    CheckResult r;
    r.id = std::move(id);
    r.anchor = std::move(anchor);
    r.values = std::move(values);
    r.residual = residual.sci();
    r.tolerance = tol.sci();
    r.status = flagged ? CheckStatus::flagged
                       : (residual <= tol ? CheckStatus::pass : CheckStatus::fail);
    r.notes = std::move(notes);
    return r;
}

CheckResult exact_check(std::string id, std::string anchor, bool ok, Values values,
                        std::string notes = "") {
    CheckResult r;
    r.id = std::move(id);
    r.anchor = std::move(anchor);
    r.values = std::move(values);
    r.residual = ok ? "0" : "1";
    r.tolerance = "0 (exact arithmetic)";
    r.status = ok ? CheckStatus::pass : CheckStatus::fail;
    r.notes = std::move(notes);
    return r;
}

// ---------------------------------------------------------------- checks --

CheckResult check_eq01(Precision) {
    long digits = 200;
    std::string a = pi_ramanujan_digits(digits);
    std::string b = pi_oracle_digits(digits);
    Real diff = pi_ramanujan(digits).abs_diff(pi_oracle(Precision(digits)));
    CheckResult r = residual_check("eq01-pi-series",
                                   "pi from (2 sqrt2/9801) sum (26390n+1103)(4n)!/((n!)^4 396^(4n))",
                                   diff, pow10(digits - 2, Precision(digits)),
                                   {{"series", a.substr(0, 32) + "..."},
                                    {"reference", b.substr(0, 32) + "..."},
                                    {"digits-compared", std::to_string(digits)}});
    if (a != b) r.status = CheckStatus::fail;
    return r;
}

CheckResult check_eq03(Precision p) {
    Precision w = p.plus(guard_digits());
    Real worst(0, w);
    for (const char *ks : {"0.05", "0.2", "0.4", "0.6", "0.8", "0.95"}) {
        auto m = EllipticModulus::from_k(Real(ks, w));
        worst = max(worst, elliptic_K(m, p).abs_diff(elliptic_K_quadrature(m, p)));
    }
    long t = p.digits < 30 ? p.digits : 30;
    return residual_check("eq03-K-quadrature", "agm route for K(k) vs direct quadrature",
                          worst, pow10(t - 1, w),
                          {{"K(0.5)", fmt(elliptic_K(EllipticModulus::from_k(Real("0.5", w)), p), 30)}});
}

CheckResult check_eq04(Precision p) {
    Precision w = p.plus(guard_digits());
    Real worst(0, w);
    for (const char *ks : {"0.05", "0.2", "0.4", "0.6", "0.8", "0.95"}) {
        auto m = EllipticModulus::from_k(Real(ks, w));
        worst = max(worst, elliptic_E(m, p).abs_diff(elliptic_E_quadrature(m, p)));
    }
    auto m1 = EllipticModulus::from_k(Real(1, w));
    Real e1 = elliptic_E(m1, p);
    long t = p.digits < 30 ? p.digits : 30;
    return residual_check("eq04-E-quadrature", "agm route for E(k) vs direct quadrature",
                          max(worst, e1.abs_diff(Real(1, w))), pow10(t - 1, w),
                          {{"E(0.5)", fmt(elliptic_E(EllipticModulus::from_k(Real("0.5", w)), p), 30)},
                           {"E(1)", fmt(e1, 10)}});
}

Real fd_residual(Precision p, bool for_K) {
    // central difference with h = 1e-10 at >= 30-digit working precision
    Precision w = p.plus(guard_digits() + 10);
    Real h = pow10(10, w);
    Real worst(0, w);
    for (const char *ks : {"0.3", "0.5", "0.7"}) {
        Real k(ks, w);
        auto m = EllipticModulus::from_k(k);
        auto mp = EllipticModulus::from_k(k + h);
        auto mm = EllipticModulus::from_k(k - h);
        Real analytic = for_K ? dK_dk(m, w) : dE_dk(m, w);
        Real fd = for_K ? (elliptic_K(mp, w) - elliptic_K(mm, w)) / (2 * h)
                        : (elliptic_E(mp, w) - elliptic_E(mm, w)) / (2 * h);
        worst = max(worst, (analytic / fd - 1).abs());
    }
    return worst;
}

CheckResult check_eq05(Precision p) {
    Real worst = fd_residual(p, true);
    return residual_check("eq05-dK-dk", "dK/dk = (E - k'^2 K)/(k k'^2) vs finite differences",
                          worst, pow10(12, p), {{"grid", "k in {0.3, 0.5, 0.7}, h = 1e-10"}});
}

CheckResult check_eq06(Precision p) {
    Real worst = fd_residual(p, false);
    return residual_check("eq06-dE-dk", "dE/dk = (E - K)/k vs finite differences", worst,
                          pow10(12, p), {{"grid", "k in {0.3, 0.5, 0.7}, h = 1e-10"}});
}

CheckResult check_eq08(Precision p) {
    Precision w = p.plus(guard_digits());
    auto m06 = EllipticModulus::from_k(Real("0.6", w));
    auto m08 = EllipticModulus::from_k(Real("0.8", w));
    Real r1 = complementary(m06, p).Kprime.abs_diff(elliptic_K(m08, p));
    auto m05 = EllipticModulus::from_k(Real("0.5", w));
    Real ratio = complementary(m05, p).Kprime / elliptic_K(m05, p);
    return residual_check("eq08-complementary", "K'(k) = K(k'), E'(k) = E(k')", r1, suite_tol(p),
                          {{"K'(0.5)/K(0.5)", fmt(ratio)}});
}

CheckResult check_eq09(Precision p) {
    Precision w = p.plus(guard_digits());
    Real worst(0, w);
    for (int i = 0; i < 50; ++i) {  // k = 0.01, 0.03, ..., 0.99
        Real k = Real(1 + 2 * i, w) / 100;
        worst = max(worst, legendre_residual(EllipticModulus::from_k(k), p).abs());
    }
    return residual_check("eq09-legendre", "K E' + E K' - K K' = pi/2 on a 50-point grid", worst,
                          suite_tol(p), {{"grid", "k = 0.01 (0.02) 0.99"}});
}

CheckResult check_eq11(Precision p) {
    // truncation soundness: recomputing at twice the precision moves theta
    // by less than 10^-p
    Precision w = p.plus(guard_digits());
    Precision dbl(2 * p.digits);
    Real worst(0, w);
    for (const char *qs : {"0.01", "0.3"}) {
        Nome q(Real(qs, dbl));
        worst = max(worst, theta3(q, p).abs_diff(theta3(q, dbl)));
        worst = max(worst, theta2(q, p).abs_diff(theta2(q, dbl)));
    }
    Nome q0(Real(0, w));
    bool fixed = theta3(q0, p) == 1 && theta2(q0, p).is_zero();
    CheckResult r = residual_check("eq11-theta-truncation",
                                   "theta series tail bound q^(N^2)/(1-q) below tolerance", worst,
                                   pow10(p.digits, w), {{"theta3(0)", "1"}, {"theta2(0)", "0"}});
    if (!fixed) r.status = CheckStatus::fail;
    return r;
}

CheckResult check_eq14(Precision p) {
    Precision w = p.plus(guard_digits());
    auto m03 = EllipticModulus::from_k(Real("0.3", w));
    Real back = k_from_q(nome_from_k(m03, w), w).k;
    Real r1 = back.abs_diff(m03.k);
    // at k = 1/sqrt2 the exponent is exactly -pi
    Real invsqrt2 = 1 / sqrt(Real(2, w));
    Real q_self = nome_from_k(EllipticModulus::from_k(invsqrt2), w).q;
    Real r2 = q_self.abs_diff(exp(-pi_oracle(w)));
    Real q01 = nome_from_k(EllipticModulus::from_k(Real("0.1", w)), w).q;
    return residual_check("eq14-nome", "q = exp(-pi K'/K); k(q(k)) round trip", max(r1, r2),
                          suite_tol(p), {{"q(0.1)", fmt(q01, 12)}, {"q(1/sqrt2)", fmt(q_self, 12)}});
}

CheckResult check_eq15(Precision p) {
    Precision w = p.plus(guard_digits());
    Real worst(0, w);
    std::vector<Real> grid{Real("0.01", w), Real("0.05", w), Real("0.1", w), Real("0.3", w),
                           exp(-pi_oracle(w))};
    for (const Real &qv : grid) {
        Nome q(qv);
        Real t2 = theta2(q, p), t3 = theta3(q, p), t4 = theta4(q, p);
        worst = max(worst, (pow_si(t2, 4) + pow_si(t4, 4) - pow_si(t3, 4)).abs());
    }
    return residual_check("eq15-jacobi-quartic", "theta2^4 + theta4^4 = theta3^4", worst,
                          pow10(20, w),
                          {{"grid", "q in {0.01, 0.05, 0.1, 0.3, e^-pi}"},
                           {"theta3(e^-pi)", fmt(theta3(Nome(exp(-pi_oracle(w))), p), 30)}});
}

CheckResult check_eq17(Precision p) {
    Precision w = p.plus(guard_digits());
    Real worst(0, w);
    for (const char *ks : {"0.2", "0.5", "0.8"}) {
        auto m = EllipticModulus::from_k(Real(ks, w));
        worst = max(worst, K_from_q(nome_from_k(m, w), p).abs_diff(elliptic_K(m, p)));
    }
    return residual_check("eq17-K-theta", "K(k) = (pi/2) theta3^2(q(k))", worst, suite_tol(p),
                          {{"grid", "k in {0.2, 0.5, 0.8}"}});
}

CheckResult check_eq19(Precision p) {
    Precision w = p.plus(guard_digits());
    Real worst(0, w);
    for (long r : {2L, 4L, 10L, 58L}) {
        Real prod = g_product(Rat(r), p);
        Real via_theta = g_from_k(lambda_star(Rat(r), w), w);
        worst = max(worst, prod.abs_diff(via_theta));
    }
    QuadraticSurd u(Rat(5, 2), Rat(1, 2), 29);
    Real g58 = sqrt(u.to_real(w));
    Real r58 = g_product(Rat(58), p).abs_diff(g58);
    return residual_check("eq19-g-product",
                          "prod_{j odd} (1 - e^(-j pi sqrt n)) = 2^(1/4) e^(-pi sqrt(n)/24) g_n",
                          max(worst, r58), suite_tol(p),
                          {{"g_2", fmt(g_product(Rat(2), p), 15)},
                           {"g_4", fmt(g_product(Rat(4), p), 15)},
                           {"g_58", fmt(g_product(Rat(58), p))}});
}

CheckResult check_eq20(Precision p) {
    Precision w = p.plus(guard_digits());
    Real worst(0, w);
    for (const char *ks : {"0.2", "0.5"}) {
        auto m = EllipticModulus::from_k(Real(ks, w));
        worst = max(worst, k_from_g(g_from_k(m, w), w).k.abs_diff(m.k));
    }
    // 2^(-1/8) maps back to 1/sqrt2
    Real g0 = 1 / root(Real(2, w), 8);
    worst = max(worst, k_from_g(g0, w).k.abs_diff(1 / sqrt(Real(2, w))));
    // asymptotics: k ~ 1/(2 g^12) within 1% at g = 10
    Real k10 = k_from_g(Real(10, w), w).k;
    Real asym = (k10 * 2 * pow_si(Real(10, w), 12) - 1).abs();
    bool asym_ok = asym < Real("0.01", w);
    CheckResult r = residual_check("eq20-k-from-g", "k = g^6 sqrt(g^12 + g^-12) - g^12", worst,
                                   suite_tol(p),
                                   {{"k(2^(-1/8))", fmt(k_from_g(g0, w).k, 15)},
                                    {"asym |2 g^12 k - 1| at g=10", asym.sci()}});
    if (!asym_ok) r.status = CheckStatus::fail;
    return r;
}

CheckResult check_eq21(Precision p) {
    Precision w = p.plus(guard_digits());
    Real r1 = lambda_star(Rat(1), w).k.abs_diff(1 / sqrt(Real(2, w)));
    Real worst = r1;
    for (long r : {4L, 58L}) {
        auto m = lambda_star(Rat(r), w);
        Real ratio = complementary(m, w).Kprime / elliptic_K(m, w);
        worst = max(worst, ratio.abs_diff(sqrt(Real(r, w))));
    }
    return residual_check("eq21-lambda-star",
                          "lambda*(r) = k(e^(-pi sqrt r)) with K'/K = sqrt(r)", worst, suite_tol(p),
                          {{"lambda*(1)", fmt(lambda_star(Rat(1), w).k, 20)},
                           {"lambda*(58)", fmt(lambda_star(Rat(58), w).k, 20)}});
}

CheckResult check_eq24(Precision p) {
    Precision w = p.plus(guard_digits());
    Real inv_pi = 1 / pi_oracle(w);
    bool ok = true;
    Values values;
    for (long r : {25L, 49L, 100L}) {
        Real a = alpha(Rat(r), w);
        Real excess = a - inv_pi;
        Real bound = 16 * sqrt(Real(r, w)) * exp(-pi_oracle(w) * sqrt(Real(r, w)));
        if (excess.sign() <= 0 || excess > bound) ok = false;
        values.emplace_back("alpha(" + std::to_string(r) + ") - 1/pi", excess.sci());
        if (r == 100) values.emplace_back("bound(100)", bound.sci());
    }
    CheckResult r = exact_check("eq24-alpha-limit",
                                "0 < alpha(r) - 1/pi <= 16 sqrt(r) e^(-pi sqrt r)", ok,
                                std::move(values));
    r.tolerance = "16 sqrt(r) e^(-pi sqrt r)";
    return r;
}

CheckResult check_eq25(Precision p) {
    Precision w = p.plus(guard_digits());
    Real worst(0, w);
    for (long r : {1L, 2L, 4L, 58L})
        worst = max(worst, alpha(Rat(r), p).abs_diff(alpha_via_complementary(Rat(r), p)));
    Real a1 = alpha(Rat(1), p);
    worst = max(worst, a1.abs_diff(Real(1, w) / 2));
    Real a2 = alpha(Rat(2), p);
    worst = max(worst, a2.abs_diff(sqrt(Real(2, w)) - 1));
    return residual_check("eq25-alpha-routes",
                          "alpha(r) = pi/(4K^2) - sqrt(r)(E/K - 1) = E'/K - pi/(4K^2)", worst,
                          suite_tol(p),
                          {{"alpha(1)", fmt(a1, 20)}, {"alpha(2)", fmt(a2, 20)}});
}

CheckResult check_eq28(Precision p) {
    Precision w = p.plus(guard_digits());
    Real pi = pi_oracle(w);
    Real worst(0, w);
    for (long r : {2L, 4L}) {
        auto m = lambda_star(Rat(r), w);
        Real K = elliptic_K(m, w);
        Real a = alpha(Rat(r), w);
        Real sr = sqrt(Real(r, w));
        Real two_over_pi = 2 / pi;
        Real rhs = sr * m.k * (m.kprime * m.kprime) * (two_over_pi * two_over_pi * K * dK_dk(m, w)) +
                   (a - sr * m.k * m.k) * pow_si(two_over_pi * K, 2);
        worst = max(worst, rhs.abs_diff(1 / pi));
    }
    return residual_check("eq28-master",
                          "1/pi = sqrt(r) k k'^2 (2/pi)^2 K dK/dk + (alpha - sqrt(r) k^2)(2K/pi)^2",
                          worst, suite_tol(p), {{"levels", "r in {2, 4}"}});
}

CheckResult check_eq31(Precision p) {
    Precision w = p.plus(guard_digits());
    Real pi = pi_oracle(w);
    Real worst(0, w);
    for (const char *ks : {"0.1", "0.3", "0.5", "0.7"}) {
        auto m = EllipticModulus::from_k(Real(ks, w));
        Real z = pow_si(2 * m.k * m.kprime, 2);
        Real lhs = 2 * elliptic_K(m, w) / pi;
        worst = max(worst, lhs.abs_diff(eval_2f1(Rat(1, 4), Rat(1, 4), Rat(1), z, p)));
    }
    long t = p.digits < 30 ? p.digits : 30;
    return residual_check("eq31-K-as-2f1", "(2/pi) K(k) = 2F1(1/4,1/4;1;(2kk')^2)", worst,
                          pow10(t - 1, w), {{"grid", "k in {0.1, 0.3, 0.5, 0.7}"}});
}

CheckResult check_eq32(Precision p) {
    Precision w = p.plus(guard_digits());
    Real pi = pi_oracle(w);
    Real worst(0, w);
    for (const char *ks : {"0.3", "0.5", "0.7"}) {
        auto m = EllipticModulus::from_k(Real(ks, w));
        Real z = pow_si(2 * m.k * m.kprime, 2);
        Real lhs = pow_si(2 * elliptic_K(m, w) / pi, 2);
        worst = max(worst,
                    lhs.abs_diff(eval_3f2(Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1), Rat(1), z, p)));
    }
    long t = p.digits < 30 ? p.digits : 30;
    return residual_check("eq32-K2-as-3f2", "(2K/pi)^2 = 3F2(1/2,1/2,1/2;1,1;(2kk')^2)", worst,
                          pow10(t - 1, w), {{"grid", "k in {0.3, 0.5, 0.7}"}});
}

CheckResult check_eq33(Precision p) {
    Precision w = p.plus(guard_digits());
    Real worst(0, w);
    for (const char *ks : {"0.1", "0.2", "0.3", "0.4", "0.5", "0.6", "0.7"})
        worst = max(worst, kummer_residual(Real(ks, w), p).abs());
    worst = max(worst, kummer_residual(Real(0, w), p).abs());
    return residual_check("eq33-kummer",
                          "2F1(1/4,1/4;1;4z(1-z)) = 2F1(1/2,1/2;1;z) at z = k^2, k <= 1/sqrt2",
                          worst, suite_tol(p), {{"grid", "k = 0 (0.1) 0.7"}});
}

CheckResult check_eq37(Precision p) {
    Precision w = p.plus(guard_digits());
    Real worst(0, w);
    for (const char *ks : {"0.2", "0.4", "0.6", "0.7"})
        worst = max(worst, clausen_residual(Real(ks, w), p).abs());
    return residual_check("eq37-clausen",
                          "(2F1(1/4,1/4;1;z))^2 = 3F2(1/2,1/2,1/2;1,1;z) at z = (2kk')^2", worst,
                          suite_tol(p), {{"grid", "k in {0.2, 0.4, 0.6, 0.7}"}});
}

CheckResult check_eq38(Precision p) {
    Precision w = p.plus(guard_digits());
    Real pi = pi_oracle(w);
    Real worst_fixed(0, w);
    Real worst_printed(0, w);
    std::vector<Real> gs;
    gs.push_back(context58(w).g);
    gs.push_back(g_from_k(EllipticModulus::from_k(Real("0.2", w)), w));
    gs.push_back(Real(5, w));
    for (const Real &g : gs) {
        auto m = k_from_g(g, w);
        Real lhs = pow_si(2 * elliptic_K(m, w) / pi, 2);
        Real g12 = pow_si(g, 12);
        Real x = 2 / (g12 + 1 / g12);
        Real series = eval_3f2(Rat(1, 4), Rat(3, 4), Rat(1, 2), Rat(1), Rat(1), x * x, p);
        worst_fixed = max(worst_fixed, lhs.abs_diff(series / (1 + m.k * m.k)));
        worst_printed = max(worst_printed, lhs.abs_diff(series / (m.k * m.k)));
    }
    return residual_check(
        "eq38-prefactor", "(2K/pi)^2 = m(k) 3F2(1/4,3/4,1/2;1,1;x^2), x = 2/(g^12+g^-12)",
        worst_fixed, suite_tol(p),
        {{"residual with 1/(1+k^2)", worst_fixed.sci()},
         {"residual with printed 1/k^2", worst_printed.sci()}},
        "printed prefactor 1/k^2 fails (already in the k->0 limit); the validated prefactor "
        "1/(1+k^2) is used by the evaluator",
        /*flagged=*/true);
}

CheckResult check_eq46(Precision p) {
    SingularValueContext ctx = context58(p);
    bool route1 = *ctx.x_exact == Rat(1, 9801);
    BiquadraticSurd k = *ctx.k_exact;
    BiquadraticSurd one = BiquadraticSurd::rational(Rat(1));
    BiquadraticSurd k2 = k * k;
    BiquadraticSurd x_form = Rat(4) * (k * (one - k2)) * ((one + k2) * (one + k2)).inverse();
    bool route2 = x_form.is_rational() && x_form.rational_value() == Rat(1, 9801);
    return exact_check("eq46-x58", "x_58 = 2/(g^12 + g^-12) = 4 k k'^2/(1+k^2)^2 = 1/9801",
                       route1 && route2,
                       {{"2/(g^12+g^-12)", ctx.x_exact->str()}, {"4k k'^2/(1+k^2)^2", x_form.str()}});
}

CheckResult check_eq47(Precision p) {
    TermwiseReport rep = termwise_equivalence(10, p);
    Real worst(0, p);
    for (const Real &r : rep.ratio_minus_one) worst = max(worst, r);
    SatoExactParams ex = sato_exact_58();
    CheckResult r = residual_check(
        "eq47-termwise",
        "sum c_n (A + B n) x^(2n+1) assembled from (alpha, g, k, x) at r = 58 equals the "
        "literal series termwise",
        worst, pow10(25, p),
        {{"A", ex.A.str()}, {"B", ex.B.str()}, {"x", ex.x.str()},
         {"terms-compared", "n <= 10"}});
    if (!rep.exact_coefficients || !rep.prefactor_identity) r.status = CheckStatus::fail;
    return r;
}

CheckResult check_eq50(Precision) {
    bool ok = true;
    for (unsigned long n = 0; n <= 50 && ok; ++n) ok = lemma_256(n).equal;
    return exact_check("eq50-pochhammer-lemma",
                       "(1/4)_n (1/2)_n (3/4)_n = (4n)!/(256^n n!), n <= 50", ok,
                       {{"n=2 value", lemma_256(2).lhs.str()}});
}

CheckResult check_eq58(Precision p) {
    Precision w = p.plus(guard_digits());
    Real z(2, w);
    Real direct = 2 / (exp(z) - exp(-z));
    Real series(0, w);
    Real e = exp(-z);
    Real e2 = e * e;
    Real termf = e;
    Real stop = pow10(w.digits, w);
    while (!(termf < stop)) {
        series = series + 2 * termf;
        termf = termf * e2;
    }
    return residual_check("eq58-csch-series", "csch z = 2 sum_{n>=1} e^(-(2n-1)z)",
                          direct.abs_diff(series), pow10(15, w),
                          {{"csch(2)", fmt(direct, 16)}});
}

CheckResult check_eq59(Precision p) {
    Precision w = p.plus(guard_digits());
    Real worst(0, w);
    Values values;
    for (long r : {2L, 58L}) {
        WongReport rep = wong_check(Rat(r), p, {});
        worst = max(worst, rep.cross_route_residual);
        values.emplace_back("S1(1,0," + std::to_string(r) + ";1)", fmt(rep.csch_value, 20));
    }
    return residual_check("eq59-wong",
                          "sum (-1)^m/(m^2 + r n^2) = -(pi/sqrt r) log(2 g_r^4), csch route vs "
                          "singular-modulus route",
                          worst, suite_tol(p), std::move(values));
}

CheckResult check_eq63(Precision p) {
    double worst = 0;
    for (double z : {1.0, std::sqrt(2.0), 3.0}) {
        double direct = M_PI / std::sinh(M_PI * z);
        double acc = 1.0 / z;
        long K = 100000;
        double sign = -1.0;
        for (long k = 1; k <= K; ++k) {
            acc += sign * 2.0 * z / (z * z + static_cast<double>(k) * k);
            sign = -sign;
        }
        acc += sign * z / (z * z + static_cast<double>(K + 1) * (K + 1));  // half-term pairing
        worst = std::max(worst, std::fabs(direct - acc));
    }
    return residual_check("eq63-csch-partial",
                          "pi csch(pi z) = 1/z + sum 2z(-1)^k/(z^2+k^2), z in {1, sqrt2, 3}",
                          Real::from_double(worst, p), pow10(8, p),
                          {{"terms", "1e5 plus half-term pairing"}});
}

CheckResult check_eq68(Precision p) {
    double worst = 0;
    for (double r : {2.0, 58.0}) {
        double target = M_PI * M_PI / (3.0 * r);
        long M = 1000000;
        double acc = 0;
        for (long m = M; m >= 1; --m) acc += 2.0 / (r * static_cast<double>(m) * m);
        acc += 2.0 / (r * static_cast<double>(M));  // integral tail estimate
        worst = std::max(worst, std::fabs(acc - target));
    }
    return residual_check("eq68-row-sum", "sum_{m != 0} 1/(r m^2) = pi^2/(3r)",
                          Real::from_double(worst, p), pow10(6, p), {{"terms", "1e6 + tail"}});
}

CheckResult check_eq69(Precision p) {
    long M = 1000000;
    double acc = 0;
    double sign = -1.0;
    for (long m = 1; m <= M; ++m) {
        acc += sign * 2.0 / (static_cast<double>(m) * m);
        sign = -sign;
    }
    acc += sign / (static_cast<double>(M + 1) * (M + 1));  // half-term pairing
    double resid = std::fabs(acc + M_PI * M_PI / 6.0);
    return residual_check("eq69-alternating-row", "sum_{m != 0} (-1)^m/m^2 = -pi^2/6",
                          Real::from_double(resid, p), pow10(6, p),
                          {{"value", std::to_string(acc)}});
}

CheckResult check_eq72(Precision p) {
    Precision w = p.plus(guard_digits());
    Real csch = s1_csch(Rat(58), p);
    Real zr = zucker_robertson(29, p);
    Real r1 = (csch + zr).abs();
    TruncatedSum t = s1_truncated({1, 0, 58}, 500);
    double r2 = std::fabs(t.sum - csch.to_double());
    CheckResult r = residual_check(
        "eq72-s1-58", "S1(1,0,58;1) = -[(pi/sqrt58) log 2 + 4 L_-8(1) L_29(1)]", r1, suite_tol(p),
        {{"S1 csch route", fmt(csch, 20)},
         {"truncated R=500", std::to_string(t.sum)},
         {"|truncated - csch|", Real::from_double(r2, w).sci()},
         {"tail estimate", Real::from_double(t.tail_estimate, w).sci()}});
    if (r2 > 1e-3) r.status = CheckStatus::fail;
    return r;
}

CheckResult check_eq74(Precision p) {
    Precision w = p.plus(guard_digits());
    Real l8_table = l_negative(-8, w).value;          // closed form over the m = 32 table
    Real l8_series = Real::from_double(l_partial_sum(-8, 1000000), w);  // ~ pi/(2 sqrt2)
    Real l29 = l_class_number(29, 1, w).value;
    Real base = pi_oracle(w) / sqrt(Real(58, w)) * log(Real(2, w));
    Real target = -s1_csch(Rat(58), w);
    Real with4 = (base + 4 * l8_table * l29).abs_diff(target);
    Real with2 = (base + 2 * l8_table * l29).abs_diff(target);
    Real with2_series = (base + 2 * l8_series * l29).abs_diff(target);
    return residual_check(
        "eq74-factor", "lattice decomposition constant: 2^(1-t)(1 - (2/mu) 2^(1-s)) L L term",
        with4, suite_tol(p),
        {{"residual, constant 4", with4.sci()},
         {"residual, literal constant 2", with2.sci()},
         {"residual, constant 2 with series-normalized L_-8", with2_series.sci()}},
        "the literal constant 2 pairs with the Dirichlet-series value L_-8 = pi/(2 sqrt2); the "
        "closed form over the m = 32 table halves L_-8 to pi/(4 sqrt2), which the adopted "
        "constant 4 compensates; both pairings match the lattice sum",
        /*flagged=*/true);
}

CheckResult check_eq81(Precision p) {
    Precision w = p.plus(guard_digits());
    Int inner8 = l_negative_inner_sum(-8);
    Int inner4 = l_negative_inner_sum(-4);
    Real l8 = l_negative(-8, w).value;
    Real expect8 = pi_oracle(w) / (4 * sqrt(Real(2, w)));
    Real r1 = l8.abs_diff(expect8);
    Real l4 = l_negative(-4, w).value;
    Real r2 = l4.abs_diff(pi_oracle(w) / 8);
    // series cross-checks: the m = |4d| tables are imprimitive for d = -8, -4
    // (conductors 8 and 4), which halves the closed form against the series
    double s8 = l_partial_sum(-8, 1000000);
    double s4 = l_partial_sum(-4, 1000000);
    double r3 = std::fabs(s8 - 2 * l8.to_double());
    double r4 = std::fabs(s4 - 2 * l4.to_double());
    double pi4 = std::fabs(s4 - M_PI / 4);
    CheckResult r = residual_check(
        "eq81-L-negative", "L_d(1) = pi/m^(3/2) |1 + sum k chi(k)| for d < 0", max(r1, r2),
        suite_tol(p),
        {{"inner sum d=-8", inner8.str()},
         {"inner sum d=-4", inner4.str()},
         {"L_-8 closed", fmt(l8, 20)},
         {"series sum d=-8 (1e6 terms)", std::to_string(s8)},
         {"series sum d=-4 vs pi/4", Real::from_double(pi4, w).sci()}},
        "for d = -8 and d = -4 the m = |4d| table is imprimitive (conductors 8 and 4), so the "
        "closed form returns half the series value; the factor is absorbed by the companion "
        "eq74 constant");
    if (!(inner8 == Int(32)) || !(inner4 == Int(8))) r.status = CheckStatus::fail;
    if (r3 > 1e-5 || r4 > 1e-5 || pi4 > 1e-5) r.status = CheckStatus::fail;
    return r;
}

CheckResult check_eq82(Precision p) {
    Precision w = p.plus(guard_digits());
    Real cls = l_class_number(29, 1, w).value;
    Real trig = l_trig_product(29, w).value;
    Real r1 = cls.abs_diff(trig);
    double series = l_partial_sum(29, 1000000);
    double r2 = std::fabs(series - cls.to_double());
    CheckResult r = residual_check("eq82-L29-routes",
                                   "class-number route = sine-product route = series for L_29(1)",
                                   r1, suite_tol(p),
                                   {{"L_29 class-number", fmt(cls, 20)},
                                    {"L_29 sine-product", fmt(trig, 20)},
                                    {"series (1e6 terms)", std::to_string(series)}});
    if (r2 > 1e-5) r.status = CheckStatus::fail;
    return r;
}

CheckResult check_eq83(Precision p) {
    Precision w = p.plus(guard_digits());
    FundamentalUnit unit = fundamental_unit(29);
    Real logE = log(unit.E.to_real(w));
    Real by_sqrt = logE / sqrt(Real(29, w));
    Real by_d = logE / 29;
    Real trig = l_trig_product(29, w).value;
    return residual_check(
        "eq83-class-number-denominator", "h log E / sqrt(d) = L_d(1) (printed variant divides by d)",
        by_sqrt.abs_diff(trig), suite_tol(p),
        {{"h log E / sqrt(29)", fmt(by_sqrt, 20)},
         {"h log E / 29 (printed)", fmt(by_d, 20)},
         {"printed-variant residual", by_d.abs_diff(trig).sci()}},
        "the variant dividing by d instead of sqrt(d) is off by the factor sqrt(29) against "
        "the sine product, the series and the logarithmic closed form; sqrt(d) adopted",
        /*flagged=*/true);
}

CheckResult check_eq84(Precision p) {
    Precision w = p.plus(guard_digits());
    Real g58 = g_product(Rat(58), w);  // independent product route
    Real lhs = pi_oracle(w) / sqrt(Real(58, w)) * log(pow_si(g58, 4));
    Real rhs = 4 * l_negative(-8, w).value * l_class_number(29, 1, w).value;
    return residual_check("eq84-theorem-g58", "(pi/sqrt58) log(g58^4) = 4 L_-8(1) L_29(1)",
                          lhs.abs_diff(rhs), suite_tol(p),
                          {{"lhs", fmt(lhs, 25)}, {"rhs", fmt(rhs, 25)}});
}

CheckResult check_eq89(Precision) {
    PellSolution s29 = pell_fundamental(29);
    PellSolution s2 = pell_fundamental(2);
    NegativePell n29 = pell_negative(29);
    bool ok = s29.x == Int(9801) && s29.y == Int(1820) && s29.check() && s2.x == Int(3) &&
              s2.y == Int(2) && n29.exists && n29.sol.x == Int(70) && n29.sol.y == Int(13);
    return exact_check("eq89-pell-29", "9801^2 - 29*1820^2 = 1 (fundamental)", ok,
                       {{"(x, y)", "(" + s29.x.str() + ", " + s29.y.str() + ")"},
                        {"negative solution", "(" + n29.sol.x.str() + ", " + n29.sol.y.str() + ")"}});
}

CheckResult check_eq90(Precision p) {
    Precision w = p.plus(guard_digits());
    QuadraticSurd u6(Rat(9801), Rat(1820), 29);
    Real lhs = log(u6.to_real(w)) / (3 * sqrt(Real(29, w)));
    Real l29 = l_class_number(29, 1, w).value;
    return residual_check("eq90-L29-log-form", "log(9801 + 1820 sqrt(29)) / (3 sqrt(29)) = L_29(1)",
                          lhs.abs_diff(l29), suite_tol(p), {{"value", fmt(lhs, 25)}});
}

CheckResult check_eq91(Precision p) {
    Precision w = p.plus(guard_digits());
    QuadraticSurd u(Rat(5, 2), Rat(1, 2), 29);
    Real closed = sqrt(u.to_real(w));
    Real prod = g_product(Rat(58), w);
    return residual_check("eq91-g58-value", "g_58 = sqrt((5 + sqrt(29))/2)", closed.abs_diff(prod),
                          suite_tol(p), {{"g_58", fmt(closed, 30)}});
}

CheckResult check_eq92(Precision p) {
    Precision w = p.plus(guard_digits());
    FundamentalUnit unit = fundamental_unit(29);
    bool exact_ok = unit.eps == QuadraticSurd(Rat(5, 2), Rat(1, 2), 29) && unit.norm_sign == -1 &&
                    unit.E == QuadraticSurd(Rat(27, 2), Rat(5, 2), 29);
    Real g58 = g_product(Rat(58), w);
    Real r = (g58 * g58).abs_diff(unit.eps.to_real(w));
    CheckResult res = residual_check("eq92-unit-29", "g_58^2 = u_29 = (5 + sqrt(29))/2, N(u_29) = -1",
                                     r, suite_tol(p),
                                     {{"u_29", unit.eps.str()},
                                      {"norm", std::to_string(unit.norm_sign)},
                                      {"E = u_29^2", unit.E.str()}});
    if (!exact_ok) res.status = CheckStatus::fail;
    return res;
}

CheckResult check_eq93(Precision p) {
    Precision w = p.plus(guard_digits());
    Real pi = pi_oracle(w);
    auto sinsq_prod = [&](std::vector<long> ks, long m) {
        Real acc(1, w);
        for (long k : ks) {
            Real s = sin(pi * k / m);
            acc = acc * s * s;
        }
        return acc;
    };
    Real q93 = sinsq_prod({2, 3, 8, 10, 11, 12, 14}, 29) / sinsq_prod({1, 4, 5, 6, 7, 9, 13}, 29);
    Real q94 = sinsq_prod({4, 6}, 58) / (1024 * sinsq_prod({1, 5, 7, 8, 9, 12, 13}, 58));
    QuadraticSurd u(Rat(5, 2), Rat(1, 2), 29);
    Real u2 = (u * u).to_real(w);
    // (2/(5+sqrt29)) = u^-1 exactly
    bool tie = u.inverse() == QuadraticSurd(Rat(-5, 2), Rat(1, 2), 29);
    Real l_from_q93 = log(q93) / sqrt(Real(29, w));
    Real r = max(q93.abs_diff(q94), l_from_q93.abs_diff(2 * log(u.to_real(w)) / sqrt(Real(29, w))));
    CheckResult res = residual_check(
        "eq93-sine-products", "the mod-29 sine-product quotient equals its reduced form and u_29^2",
        max(r, q93.abs_diff(u2)), suite_tol(p),
        {{"quotient", fmt(q93, 20)}, {"reduced form", fmt(q94, 20)}, {"u_29^2", fmt(u2, 20)}});
    if (!tie) res.status = CheckStatus::fail;
    return res;
}

CheckResult check_eq95(Precision p) {
    Precision w = p.plus(guard_digits() + 10);
    SatoExactParams ex = sato_exact_58();
    // the verified linear coefficient is B = sqrt(58)(g^12 - g^-12)/2 = 52780 sqrt(2);
    // the circulated rational restatement of (g^12 - g^-12)/2 as 9801 shifts it
    Real b_true = ex.B.to_real(w);
    Real b_misprint = sqrt(Real(58, w)) * 9801;
    Real rel_shift = (b_misprint / b_true - 1).abs();
    // (n!)^2 in place of (n!)^4 breaks the term ratio at n = 2 by (2!)^2
    Rat c2_true = lemma_256(2).rhs / Rat(Int::pow(Int::factorial(2), 3));
    Rat c2_misprint = lemma_256(2).rhs * Rat(Int::factorial(2), Int(1));
    Rat term_ratio = c2_misprint / c2_true;
    return residual_check(
        "eq95-assembled-series",
        "assembled series needs c_n = (4n)!/(256^n (n!)^4) and the exact half-difference of "
        "g^(+-12)",
        Real(0, w), suite_tol(p),
        {{"printed (n!)^2 variant, term ratio at n=2", term_ratio.str()},
         {"printed 9801 for (g^12-g^-12)/2, relative shift of B", rel_shift.sci()},
         {"exact (g^12-g^-12)/2", "1820*sqrt(29)"}},
        "three misprints in the assembled restatement: (n!)^2 for (n!)^4, g^2 for g^12 in the "
        "linear bracket, and the rational 9801 standing in for the half-difference "
        "1820 sqrt(29) (= 9801 - 5.1e-5); the verified assembly uses the exact forms",
        /*flagged=*/true);
}

CheckResult check_eq96(Precision p) {
    Precision w = p.plus(guard_digits());
    QuadraticSurd u(Rat(5, 2), Rat(1, 2), 29);
    QuadraticSurd u6 = u.pow(6);
    QuadraticSurd u6inv = u.pow(-6);
    QuadraticSurd half(Rat(1, 2), Rat(0), 29);
    QuadraticSurd sum_half = (u6 + u6inv) * half;
    QuadraticSurd diff_half = (u6 - u6inv) * half;
    bool ok = sum_half == QuadraticSurd(Rat(9801), Rat(0), 29) &&
              diff_half == QuadraticSurd(Rat(0), Rat(1820), 29);
    return exact_check(
        "eq96-9801", "(g58^12 + g58^-12)/2 = 9801 exactly; (g58^12 - g58^-12)/2 = 1820 sqrt(29)",
        ok,
        {{"(g^12+g^-12)/2", sum_half.str()},
         {"(g^12-g^-12)/2", diff_half.str()},
         {"1820 sqrt(29) decimal", fmt(diff_half.to_real(w), 16)}},
        "the rational value 9801 belongs to the sum form; the difference form is irrational and "
        "smaller by 5.1e-5 (its misprint is covered under eq95)");
}

CheckResult check_eq97(Precision p) {
    Precision w = p.plus(guard_digits());
    SingularValueContext ctx = context58(w);
    // route through k = g^6 sqrt(g^12 + g^-12) - g^12 in exact arithmetic:
    // sqrt(19602) = 99 sqrt(2)
    BiquadraticSurd g6(Rat(70), Rat(0), Rat(13), Rat(0));
    BiquadraticSurd s19602(Rat(0), Rat(99), Rat(0), Rat(0));
    BiquadraticSurd g12(Rat(9801), Rat(0), Rat(1820), Rat(0));
    BiquadraticSurd k_route = g6 * s19602 - g12;
    bool exact_ok = k_route == *ctx.k_exact;
    Real numeric = lambda_star(Rat(58), w).k.abs_diff(ctx.k.k);
    CheckResult r = residual_check("eq97-k58",
                                   "k_58 = (sqrt2 - 1)^6 (13 sqrt58 - 99), matching the g-route "
                                   "and the singular modulus",
                                   numeric, suite_tol(p),
                                   {{"k_58 exact", ctx.k_exact->str()},
                                    {"k_58", fmt(ctx.k.k, 20)}});
    if (!exact_ok) r.status = CheckStatus::fail;
    return r;
}

CheckResult check_eq98(Precision p) {
    Precision w = p.plus(guard_digits());
    SingularValueContext ctx = context58(w);
    Real via_elliptic = alpha(Rat(58), p);
    return residual_check("eq98-alpha58", "alpha(58) = 3 g58^6 k58 (33 sqrt29 - 148)",
                          ctx.alpha.abs_diff(via_elliptic), suite_tol(p),
                          {{"alpha(58) exact", ctx.alpha_exact->str()},
                           {"alpha(58)", fmt(ctx.alpha, 25)}});
}

CheckResult check_eq99(Precision p) {
    ConvergenceRate rate = digits_per_term();
    bool ok = rate.analytic_digits_per_term > 7.5 && rate.analytic_digits_per_term < 8.5 &&
              rate.empirical_reduction > 3.162e-9 && rate.empirical_reduction < 3.163e-8;
    CheckResult r = exact_check(
        "eq99-convergence-rate", "each term adds log10(396^4/256) = 7.98 digits", ok,
        {{"analytic digits/term", std::to_string(rate.analytic_digits_per_term)},
         {"empirical error reduction", Real::from_double(rate.empirical_reduction, p).sci()}});
    r.tolerance = "reduction in [1e-8.5, 1e-7.5]";
    return r;
}

CheckResult check_eq100(Precision p) {
    SanityReport rep = sanity_series(p);
    return residual_check(
        "eq100-basel", "sum 1/n^2 = pi^2/6", Real::from_double(rep.basel_residual, p), pow10(8, p),
        {{"corrected residual (N=1e4, +1/N)", Real::from_double(rep.basel_residual, p).sci()},
         {"uncorrected residual", Real::from_double(rep.basel_uncorrected_residual, p).sci()}});
}

CheckResult check_eq101(Precision p) {
    SanityReport rep = sanity_series(p);
    // plain alternating sum over 1e6 terms lands within ~1e-6 of pi/4
    double acc = 0;
    double sign = 1;
    for (long n = 0; n < 1000000; ++n) {
        acc += sign / (2.0 * n + 1.0);
        sign = -sign;
    }
    double plain = std::fabs(4 * acc - M_PI);
    CheckResult r = residual_check(
        "eq101-leibniz", "sum (-1)^n/(2n+1) = pi/4", Real::from_double(rep.leibniz_residual, p),
        pow10(8, p),
        {{"averaged residual (N=1e4)", Real::from_double(rep.leibniz_residual, p).sci()},
         {"plain 1e6-term residual vs pi", Real::from_double(plain, p).sci()}});
    if (plain > 2e-6) r.status = CheckStatus::fail;
    return r;
}

CheckResult check_eq102(Precision) {
    CoincidenceReport rep = coincidence_checks();
    return exact_check("eq102-unit-cube", "u_29^3 = 70 + 13 sqrt(29); 70^2 - 29*13^2 = -1",
                       rep.unit_cube_is_70_13 && rep.norm_cube_minus_one,
                       {{"u_29^3", QuadraticSurd(Rat(5, 2), Rat(1, 2), 29).pow(3).str()}});
}

CheckResult check_eq103(Precision) {
    CoincidenceReport rep = coincidence_checks();
    return exact_check("eq103-unit-sixth", "u_29^6 = 9801 + 1820 sqrt(29); 9801^2 - 29*1820^2 = 1",
                       rep.unit_sixth_is_9801_1820 && rep.pell_identity,
                       {{"u_29^6", QuadraticSurd(Rat(5, 2), Rat(1, 2), 29).pow(6).str()}});
}

CheckResult check_eq104(Precision) {
    CoincidenceReport rep = coincidence_checks();
    QuadraticSurd u(Rat(5, 2), Rat(1, 2), 29);
    QuadraticSurd ps = u.pow(6) + u.pow(-6);
    return exact_check("eq104-396-fourth", "2^6 (u_29^6 + u_29^-6)^2 = 396^4",
                       rep.power_sum_is_396_fourth,
                       {{"u^6 + u^-6", ps.str()}, {"396^4", Int::pow(396, 4).str()}});
}

CheckResult check_eq105(Precision) {
    CoincidenceReport rep = coincidence_checks();
    return exact_check("eq105-26390", "26390 = 29 * 70 * 13", rep.factor_26390,
                       {{"29*70*13", (Int(29) * Int(70) * Int(13)).str()}});
}

struct Entry {
    const char *id;
    CheckResult (*fn)(Precision);
};

const Entry kChecks[] = {
    {"eq01-pi-series", check_eq01},
    {"eq03-K-quadrature", check_eq03},
    {"eq04-E-quadrature", check_eq04},
    {"eq05-dK-dk", check_eq05},
    {"eq06-dE-dk", check_eq06},
    {"eq08-complementary", check_eq08},
    {"eq09-legendre", check_eq09},
    {"eq11-theta-truncation", check_eq11},
    {"eq14-nome", check_eq14},
    {"eq15-jacobi-quartic", check_eq15},
    {"eq17-K-theta", check_eq17},
    {"eq19-g-product", check_eq19},
    {"eq20-k-from-g", check_eq20},
    {"eq21-lambda-star", check_eq21},
    {"eq24-alpha-limit", check_eq24},
    {"eq25-alpha-routes", check_eq25},
    {"eq28-master", check_eq28},
    {"eq31-K-as-2f1", check_eq31},
    {"eq32-K2-as-3f2", check_eq32},
    {"eq33-kummer", check_eq33},
    {"eq37-clausen", check_eq37},
    {"eq38-prefactor", check_eq38},
    {"eq46-x58", check_eq46},
    {"eq47-termwise", check_eq47},
    {"eq50-pochhammer-lemma", check_eq50},
    {"eq58-csch-series", check_eq58},
    {"eq59-wong", check_eq59},
    {"eq63-csch-partial", check_eq63},
    {"eq68-row-sum", check_eq68},
    {"eq69-alternating-row", check_eq69},
    {"eq72-s1-58", check_eq72},
    {"eq74-factor", check_eq74},
    {"eq81-L-negative", check_eq81},
    {"eq82-L29-routes", check_eq82},
    {"eq83-class-number-denominator", check_eq83},
    {"eq84-theorem-g58", check_eq84},
    {"eq89-pell-29", check_eq89},
    {"eq90-L29-log-form", check_eq90},
    {"eq91-g58-value", check_eq91},
    {"eq92-unit-29", check_eq92},
    {"eq93-sine-products", check_eq93},
    {"eq95-assembled-series", check_eq95},
    {"eq96-9801", check_eq96},
    {"eq97-k58", check_eq97},
    {"eq98-alpha58", check_eq98},
    {"eq99-convergence-rate", check_eq99},
    {"eq100-basel", check_eq100},
    {"eq101-leibniz", check_eq101},
    {"eq102-unit-cube", check_eq102},
    {"eq103-unit-sixth", check_eq103},
    {"eq104-396-fourth", check_eq104},
    {"eq105-26390", check_eq105},
};

}  // namespace

std::vector<std::string> check_ids() {
    std::vector<std::string> ids;
    for (const Entry &e : kChecks) ids.emplace_back(e.id);
    return ids;
}

std::vector<CheckResult> run_checks(const std::string &filter_prefix, Precision p) {
    std::vector<CheckResult> out;
    for (const Entry &e : kChecks) {
        if (std::string(e.id).rfind(filter_prefix, 0) != 0) continue;
        try {
            out.push_back(e.fn(p));
        } catch (const std::exception &ex) {
            // a throwing check is a failing check, not an aborted run
            CheckResult r;
            r.id = e.id;
            r.anchor = "";
            r.residual = "n/a";
            r.tolerance = "n/a";
            r.status = CheckStatus::fail;
            r.notes = std::string("exception: ") + ex.what();
            out.push_back(std::move(r));
        }
    }
    if (out.empty()) throw std::invalid_argument("no check id starts with '" + filter_prefix + "'");
    return out;
}

const char *status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::flagged: return "flagged";
    }
    return "?";
}

std::string to_text_line(const CheckResult &r) {
    std::string line = std::string(status_name(r.status));
    line.resize(8, ' ');
    line += r.id;
    if (line.size() < 40) line.resize(40, ' ');
    line += " residual " + r.residual + "  (tol " + r.tolerance + ")";
    if (!r.notes.empty()) line += "\n         note: " + r.notes;
    return line;
}

std::string to_json_line(const CheckResult &r) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["anchor"] = r.anchor;
    nlohmann::ordered_json vals = nlohmann::ordered_json::object();
    for (const auto &[k, v] : r.values) vals[k] = v;
    j["values"] = vals;
    j["residual"] = r.residual;
    j["tolerance"] = r.tolerance;
    j["status"] = status_name(r.status);
    j["notes"] = r.notes;
    return j.dump();
}

}  // namespace rampi
