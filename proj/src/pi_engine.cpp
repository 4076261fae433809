// SPDX-License-Identifier: Apache-2.0

#include "rampi/pi_engine.hpp"

#include <cmath>
#include <stdexcept>

#include "rampi/hyper.hpp"
#include "rampi/invariants.hpp"

namespace rampi {

namespace {

constexpr long kLinearA = 1103;
constexpr long kLinearB = 26390;

// term(n)/term(n-1) factorial part: p(n)/q(n)
Int split_p(unsigned long n) {
    long m = static_cast<long>(n);
    return Int(4 * m - 3) * Int(4 * m - 2) * Int(4 * m - 1) * Int(4 * m);
}

Int split_q(unsigned long n) {
    Int n4 = Int::pow(Int(static_cast<long>(n)), 4);
    return n4 * Int::pow(396, 4);
}

struct SplitNode {
    Int P, Q, T;  // sum_{i in [a,b)} (1103 + 26390 i) prod_{j<=i} p/q  ==  T / Q
};

SplitNode split(unsigned long a, unsigned long b) {
    if (b - a == 1) {
        Int P = (a == 0) ? Int(1) : split_p(a);
        Int Q = (a == 0) ? Int(1) : split_q(a);
        Int T = Int(kLinearA + kLinearB * static_cast<long>(a)) * P;
        return {std::move(P), std::move(Q), std::move(T)};
    }
    unsigned long mid = a + (b - a) / 2;
    SplitNode left = split(a, mid);
    SplitNode right = split(mid, b);
    Int P = left.P * right.P;
    Int Q = left.Q * right.Q;
    Int T = left.T * right.Q + left.P * right.T;
    return {std::move(P), std::move(Q), std::move(T)};
}

}  // namespace

Rat literal_term(unsigned long n) {
    Int num = Int(kLinearA + kLinearB * static_cast<long>(n)) * Int::factorial(4 * n);
    Int den = Int::pow(Int::factorial(n), 4) * Int::pow(396, 4 * n);
    return {num, den};
}

Rat series_partial_naive(unsigned long nterms) {
    Rat acc(0);
    for (unsigned long n = 0; n < nterms; ++n) acc += literal_term(n);
    return acc;
}

Rat series_partial_binsplit(unsigned long nterms) {
    if (nterms == 0) return Rat(0);
    SplitNode node = split(0, nterms);
    return {node.T, node.Q};
}

Real pi_ramanujan(long digits) {
    if (digits < 1 || digits > 100000)
        throw std::domain_error("digits must lie in [1, 100000]");
    // measured rate: one term per log10(9801^2) = 7.98 digits, plus slack
    unsigned long nterms = static_cast<unsigned long>(digits / 7.98) + 3;
    SplitNode node = split(0, nterms);

    Precision w(digits + guard_digits(static_cast<long>(nterms)));
    Real sum = Real::from(node.T, w) / Real::from(node.Q, w);
    // 1/pi = (2 sqrt(2) / 9801) * sum, so pi = 9801 / (2 sqrt(2) sum)
    Real sqrt2 = sqrt(Real(2, w));
    return Real(9801, w) / (2 * sqrt2 * sum);
}

namespace {

std::string truncated_digits(const Real &value, long digits) {
    if (digits < 2) digits = 2;
    return value.str(digits, /*round=*/false);
}

}  // namespace

std::string pi_ramanujan_digits(long digits) { return truncated_digits(pi_ramanujan(digits), digits); }

std::string pi_oracle_digits(long digits) {
    if (digits < 1 || digits > 100000)
        throw std::domain_error("digits must lie in [1, 100000]");
    return truncated_digits(pi_oracle(Precision(digits)), digits);
}

TermwiseReport termwise_equivalence(unsigned long nmax, Precision p) {
    if (nmax < 3) throw std::domain_error("termwise comparison needs nmax >= 3");
    Precision w = p.plus(guard_digits() + 10);
    SingularValueContext ctx = context58(w);
    SatoSeriesParams params = sato_coefficients(ctx, w);

    TermwiseReport rep{};
    Real scale = 2 * sqrt(Real(2, w)) / 9801;  // prefactor of the literal series
    Real x = Real::from(params.x, w);
    for (unsigned long n = 0; n <= nmax; ++n) {
        // c_n = (1/4)_n (1/2)_n (3/4)_n / (n!)^3, exact
        Rat c = lemma_256(n).rhs / Rat(Int::pow(Int::factorial(n), 3));
        Real assembled = Real::from(c, w) * (params.A + params.B * static_cast<long>(n)) *
                         pow_si(x, 2 * static_cast<long>(n) + 1);
        Real literal = scale * Real::from(literal_term(n), w);
        rep.ratio_minus_one.push_back((assembled / literal - 1).abs());
    }

    rep.prefactor_identity = true;
    for (unsigned long n = 0; n <= nmax; ++n) {
        Int lhs = Int::pow(256, n) * Int::pow(Int(9801), 2 * n);
        if (lhs != Int::pow(396, 4 * n)) rep.prefactor_identity = false;
    }

    SatoExactParams exact = sato_exact_58();
    BiquadraticSurd a_expect(Rat(0), Rat(2206), Rat(0), Rat(0));
    BiquadraticSurd b_expect(Rat(0), Rat(52780), Rat(0), Rat(0));
    rep.exact_coefficients = (exact.A == a_expect) && (exact.B == b_expect);
    return rep;
}

ConvergenceRate digits_per_term() {
    ConvergenceRate rate{};
    rate.analytic_digits_per_term = std::log10(std::pow(396.0, 4) / 256.0);

    // measure |s_5 - 1/pi| / |s_4 - 1/pi| on exact partial sums
    Precision w(60);
    Real inv_pi = 1 / pi_oracle(w);
    Real scale = 2 * sqrt(Real(2, w)) / 9801;
    Real e4 = (scale * Real::from(series_partial_naive(5), w)).abs_diff(inv_pi);
    Real e5 = (scale * Real::from(series_partial_naive(6), w)).abs_diff(inv_pi);
    rate.empirical_reduction = (e5 / e4).to_double();
    return rate;
}

SanityReport sanity_series(Precision p) {
    Precision w = p.plus(guard_digits(10000));
    const long N = 10000;
    Real basel(0, w);
    for (long n = 1; n <= N; ++n) basel = basel + Real(1, w) / (Real(n, w) * n);
    Real pi = pi_oracle(w);
    Real target = pi * pi / 6;
    SanityReport rep{};
    rep.basel_uncorrected_residual = basel.abs_diff(target).to_double();
    rep.basel_residual = (basel + Real(1, w) / N).abs_diff(target).to_double();

    Real leib(0, w);
    long sign = 1;
    for (long n = 0; n < N; ++n) {
        leib = leib + Real(sign, w) / (2 * n + 1);
        sign = -sign;
    }
    Real next = leib + Real(sign, w) / (2 * N + 1);
    Real averaged = (leib + next) / 2;
    rep.leibniz_residual = averaged.abs_diff(pi / 4).to_double();
    return rep;
}

}  // namespace rampi
