// SPDX-License-Identifier: Apache-2.0

#include "rampi/elliptic.hpp"

#include <stdexcept>

namespace rampi {

EllipticModulus EllipticModulus::from_k(const Real &k) {
    if (k.sign() < 0 || k > 1) throw std::domain_error("elliptic modulus outside [0, 1]");
    Real kprime = sqrt(1 - k * k);
    return {k, std::move(kprime)};
}

EllipticModulus EllipticModulus::from_parts(Real k, Real kprime) {
    if (k.sign() < 0 || k > 1 || kprime.sign() < 0 || kprime > 1)
        throw std::domain_error("elliptic modulus outside [0, 1]");
    Real resid = (k * k + kprime * kprime - 1).abs();
    long d = k.digits() < kprime.digits() ? k.digits() : kprime.digits();
    if (resid > pow10(d - 2, Precision(d)))
        throw std::domain_error("k and k' do not satisfy k^2 + k'^2 = 1");
    return {std::move(k), std::move(kprime)};
}

namespace {

struct AgmResult {
    Real agm;
    Real c_sum;  // sum_{j>=0} 2^(j-1) c_j^2 with c_0 = k
};

AgmResult agm_with_sum(const Real &k, const Real &kprime, Precision w) {
    Real a(1, w);
    Real b = kprime;
    Real c = k;
    Real sum = c * c / 2;
    Real stop = pow10(w.digits, w);
    Real two_pow(1, w);  // 2^(j-1) for the upcoming j
    // c shrinks quadratically; 10^6-digit targets need < 25 iterations
    for (int j = 1; j < 64; ++j) {
        Real a1 = (a + b) / 2;
        c = (a - b) / 2;
        b = sqrt(a * b);
        a = a1;
        sum = sum + two_pow * (c * c);
        two_pow = two_pow * 2;
        if (c.abs() < stop) break;
    }
    return {std::move(a), std::move(sum)};
}

void check_range(const EllipticModulus &m) {
    if (m.k.sign() < 0 || m.k > 1) throw std::domain_error("elliptic modulus outside [0, 1]");
}

}  // namespace

Real elliptic_K(const EllipticModulus &m, Precision p) {
    check_range(m);
    Precision w = p.plus(guard_digits());
    if (m.k == 1) throw std::domain_error("K(k) diverges at k = 1");
    Real halfpi = pi_oracle(w) / 2;
    if (m.k.is_zero()) return halfpi;
    AgmResult r = agm_with_sum(m.k, m.kprime, w);
    return halfpi / r.agm;
}

Real elliptic_E(const EllipticModulus &m, Precision p) {
    check_range(m);
    Precision w = p.plus(guard_digits());
    Real halfpi = pi_oracle(w) / 2;
    if (m.k.is_zero()) return halfpi;
    if (m.k == 1) return Real(1, w);
    AgmResult r = agm_with_sum(m.k, m.kprime, w);
    Real K = halfpi / r.agm;
    return K * (1 - r.c_sum);
}

namespace {

// Tanh-sinh quadrature of f over (0, pi/2). The integrands here are analytic
// on the closed interval for k < 1, so convergence is double-exponential in
// the level; we refine until two levels agree.
template <typename F>
Real tanh_sinh(F f, Precision p) {
    Precision w = p.plus(guard_digits() + 5);
    Real pi = pi_oracle(w);
    Real quarterpi = pi / 4;
    Real halfpi = pi / 2;
    Real target = pow10(p.digits + 3, w);
    Real cutoff = pow10(w.digits + 5, w);

    auto level_sum = [&](long denom, long first, long step) {
        // sum of weights*f at t = j/denom for j = first, first+step, ...
        Real acc(w);
        for (long j = first;; j += step) {
            Real t = Real(j, w) / denom;
            Real u = halfpi * sinh(t);
            Real ch = cosh(u);
            Real weight = quarterpi * halfpi * cosh(t) / (ch * ch);
            if (weight < cutoff && j > denom) break;
            Real theta = quarterpi * (1 + tanh(u));
            Real contrib = weight * f(theta);
            if (j > 0) {
                // mirror point t -> -t maps theta -> pi/2 - theta
                contrib = contrib + weight * f(halfpi - theta);
            }
            acc = acc + contrib;
            if (j == 0 && step > 1) break;  // only the origin on this pass
        }
        return acc;
    };

    long denom = 8;
    Real sum = level_sum(denom, 0, 1);
    Real integral = sum / denom;
    for (int level = 0; level < 10; ++level) {
        denom *= 2;
        sum = sum + level_sum(denom, 1, 2);
        Real next = sum / denom;
        Real diff = next.abs_diff(integral);
        integral = next;
        if (diff < target) return integral;
    }
    throw std::runtime_error("quadrature failed to converge");
}

}  // namespace

Real elliptic_K_quadrature(const EllipticModulus &m, Precision p) {
    check_range(m);
    if (m.k == 1) throw std::domain_error("K(k) diverges at k = 1");
    Precision w = p.plus(guard_digits() + 5);
    Real k2 = Real(m.k) * m.k;
    return tanh_sinh(
        [&](const Real &theta) {
            Real s = sin(theta);
            return 1 / sqrt(1 - k2 * s * s);
        },
        p);
}

Real elliptic_E_quadrature(const EllipticModulus &m, Precision p) {
    check_range(m);
    Real k2 = Real(m.k) * m.k;
    return tanh_sinh(
        [&](const Real &theta) {
            Real s = sin(theta);
            return sqrt(1 - k2 * s * s);
        },
        p);
}

namespace {
void check_open_interval(const EllipticModulus &m) {
    if (m.k.sign() <= 0 || m.k >= Real(1, m.k.precision()))
        throw std::domain_error("k must lie strictly inside (0, 1)");
}
}  // namespace

Real dK_dk(const EllipticModulus &m, Precision p) {
    check_open_interval(m);
    Precision w = p.plus(guard_digits());
    Real K = elliptic_K(m, w);
    Real E = elliptic_E(m, w);
    Real kp2 = m.kprime * m.kprime;
    return (E - kp2 * K) / (m.k * kp2);
}

Real dE_dk(const EllipticModulus &m, Precision p) {
    check_open_interval(m);
    Precision w = p.plus(guard_digits());
    Real K = elliptic_K(m, w);
    Real E = elliptic_E(m, w);
    return (E - K) / m.k;
}

ComplementaryKE complementary(const EllipticModulus &m, Precision p) {
    check_open_interval(m);
    EllipticModulus swapped{m.kprime, m.k};
    return {elliptic_K(swapped, p), elliptic_E(swapped, p)};
}

Real legendre_residual(const EllipticModulus &m, Precision p) {
    check_open_interval(m);
    Precision w = p.plus(guard_digits());
    Real K = elliptic_K(m, w);
    Real E = elliptic_E(m, w);
    ComplementaryKE c = complementary(m, w);
    return K * c.Eprime + E * c.Kprime - K * c.Kprime - pi_oracle(w) / 2;
}

}  // namespace rampi
