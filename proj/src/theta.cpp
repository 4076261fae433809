// SPDX-License-Identifier: Apache-2.0

#include "rampi/theta.hpp"

#include <stdexcept>

namespace rampi {

Nome::Nome(Real q_) : q(std::move(q_)) {
    if (q.sign() < 0 || !(q < 1)) throw std::domain_error("nome must satisfy 0 <= q < 1");
}

namespace {

// theta3-type sum 1 + 2 sum_{n>=1} sgn^n q^(n^2); exponent steps by q^(2n-1).
Real theta_34(const Real &q, Precision w, bool alternating) {
    Real acc(1, w);
    Real q2 = q * q;
    Real step = q;        // q^(2n-1), starting at n = 1
    Real term = Real(1, w);
    Real stop = pow10(w.digits, w);
    bool negative = alternating;
    for (long n = 1; n < 100000; ++n) {
        term = term * step;  // now q^(n^2)
        step = step * q2;
        if (negative)
            acc = acc - 2 * term;
        else
            acc = acc + 2 * term;
        if (alternating) negative = !negative;
        if (term < stop) return acc;
    }
    throw std::runtime_error("theta series did not converge");
}

}  // namespace

Real theta2(const Nome &nome, Precision p) {
    Precision w = p.plus(guard_digits());
    const Real &q = nome.q;
    if (q.is_zero()) return Real(0, w);  // every exponent (n + 1/2)^2 > 0
    // 2 q^(1/4) sum_{n>=0} q^(n(n+1)); exponent steps by q^(2n)
    Real acc(1, w);
    Real q2 = q * q;
    Real step = q2;      // q^(2n) for n = 1
    Real term(1, w);
    Real stop = pow10(w.digits, w);
    for (long n = 1; n < 100000; ++n) {
        term = term * step;  // q^(n(n+1))
        step = step * q2;
        acc = acc + term;
        if (term < stop) break;
    }
    Real quarter_root = sqrt(sqrt(Real(q)));
    return 2 * quarter_root * acc;
}

Real theta3(const Nome &nome, Precision p) {
    Precision w = p.plus(guard_digits());
    if (nome.q.is_zero()) return Real(1, w);
    return theta_34(nome.q, w, false);
}

Real theta4(const Nome &nome, Precision p) {
    Precision w = p.plus(guard_digits());
    if (nome.q.is_zero()) return Real(1, w);
    return theta_34(nome.q, w, true);
}

Nome nome_from_k(const EllipticModulus &m, Precision p) {
    if (m.k.sign() <= 0 || !(m.k < 1))
        throw std::domain_error("nome_from_k needs k strictly inside (0, 1)");
    Precision w = p.plus(guard_digits());
    Real K = elliptic_K(m, w);
    Real Kp = elliptic_K(EllipticModulus{m.kprime, m.k}, w);
    return Nome(exp(-(pi_oracle(w) * Kp / K)));
}

EllipticModulus k_from_q(const Nome &q, Precision p) {
    Precision w = p.plus(guard_digits());
    if (q.q.is_zero()) return EllipticModulus{Real(0, w), Real(1, w)};
    Real t2 = theta2(q, w);
    Real t3 = theta3(q, w);
    Real t4 = theta4(q, w);
    Real t3sq = t3 * t3;
    return EllipticModulus::from_parts(t2 * t2 / t3sq, t4 * t4 / t3sq);
}

Real K_from_q(const Nome &q, Precision p) {
    if (!(q.q > 0)) throw std::domain_error("K_from_q needs 0 < q < 1");
    Precision w = p.plus(guard_digits());
    Real t3 = theta3(q, w);
    return pi_oracle(w) / 2 * t3 * t3;
}

}  // namespace rampi
