// SPDX-License-Identifier: Apache-2.0

#include "rampi/surd.hpp"

#include <stdexcept>

namespace rampi {

namespace {

bool squarefree_small(long d) {
    if (d < 1) return false;
    for (long p = 2; p * p <= d; ++p)
        if (d % (p * p) == 0) return false;
    return true;
}

void require_surd_base(long d) {
    if (d < 2 || !squarefree_small(d))
        throw std::domain_error("surd base must be squarefree and >= 2");
}

}  // namespace

QuadraticSurd::QuadraticSurd(Rat a, Rat b, long d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
    require_surd_base(d);
}

QuadraticSurd operator+(const QuadraticSurd &x, const QuadraticSurd &y) {
    if (x.d_ != y.d_) throw std::domain_error("mixed surd bases");
    return {x.a_ + y.a_, x.b_ + y.b_, x.d_};
}

QuadraticSurd operator-(const QuadraticSurd &x, const QuadraticSurd &y) {
    if (x.d_ != y.d_) throw std::domain_error("mixed surd bases");
    return {x.a_ - y.a_, x.b_ - y.b_, x.d_};
}

QuadraticSurd operator*(const QuadraticSurd &x, const QuadraticSurd &y) {
    if (x.d_ != y.d_) throw std::domain_error("mixed surd bases");
    Rat d(x.d_);
    return {x.a_ * y.a_ + d * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, x.d_};
}

bool operator==(const QuadraticSurd &x, const QuadraticSurd &y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
}

Rat QuadraticSurd::norm() const { return a_ * a_ - Rat(d_) * b_ * b_; }

QuadraticSurd QuadraticSurd::inverse() const {
    Rat n = norm();
    if (n.is_zero()) throw std::domain_error("inverse of a zero-norm surd");
    Rat inv = n.inverse();
    return {a_ * inv, -b_ * inv, d_};
}

QuadraticSurd QuadraticSurd::pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    QuadraticSurd base = *this;
    QuadraticSurd acc(Rat(1), Rat(0), d_);
    unsigned long e = static_cast<unsigned long>(n);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Real QuadraticSurd::to_real(Precision p) const {
    Precision w = p.plus(guard_digits());
    return Real::from(a_, w) + Real::from(b_, w) * sqrt(Real(d_, w));
}

std::string QuadraticSurd::str() const {
    std::string s = a_.str();
    if (!b_.is_zero()) {
        s += (b_.sign() < 0 ? " - " : " + ");
        s += b_.abs().str() + "*sqrt(" + std::to_string(d_) + ")";
    }
    return s;
}

BiquadraticSurd::BiquadraticSurd(Rat c0, Rat c1, Rat c2, Rat c3, long r, long s)
    : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)}, r_(r), s_(s) {
    require_surd_base(r);
    require_surd_base(s);
    if (r == s) throw std::domain_error("biquadratic bases must differ");
}

namespace {
void require_same_field(const BiquadraticSurd &x, const BiquadraticSurd &y) {
    if (x.r() != y.r() || x.s() != y.s()) throw std::domain_error("mixed biquadratic fields");
}
}  // namespace

BiquadraticSurd operator+(const BiquadraticSurd &x, const BiquadraticSurd &y) {
    require_same_field(x, y);
    return {x.c(0) + y.c(0), x.c(1) + y.c(1), x.c(2) + y.c(2), x.c(3) + y.c(3), x.r_, x.s_};
}

BiquadraticSurd operator-(const BiquadraticSurd &x, const BiquadraticSurd &y) {
    require_same_field(x, y);
    return {x.c(0) - y.c(0), x.c(1) - y.c(1), x.c(2) - y.c(2), x.c(3) - y.c(3), x.r_, x.s_};
}

// Basis products: e1^2 = r, e2^2 = s, e3^2 = rs, e1 e2 = e3,
// e1 e3 = r e2, e2 e3 = s e1.
BiquadraticSurd operator*(const BiquadraticSurd &x, const BiquadraticSurd &y) {
    require_same_field(x, y);
    Rat r(x.r_), s(x.s_), rs(x.r_ * x.s_);
    const Rat &a0 = x.c(0), &a1 = x.c(1), &a2 = x.c(2), &a3 = x.c(3);
    const Rat &b0 = y.c(0), &b1 = y.c(1), &b2 = y.c(2), &b3 = y.c(3);
    Rat c0 = a0 * b0 + r * a1 * b1 + s * a2 * b2 + rs * a3 * b3;
    Rat c1 = a0 * b1 + a1 * b0 + s * (a2 * b3 + a3 * b2);
    Rat c2 = a0 * b2 + a2 * b0 + r * (a1 * b3 + a3 * b1);
    Rat c3 = a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1;
    return {std::move(c0), std::move(c1), std::move(c2), std::move(c3), x.r_, x.s_};
}

BiquadraticSurd operator*(const Rat &q, const BiquadraticSurd &x) {
    return {q * x.c(0), q * x.c(1), q * x.c(2), q * x.c(3), x.r_, x.s_};
}

bool operator==(const BiquadraticSurd &x, const BiquadraticSurd &y) {
    return x.r_ == y.r_ && x.s_ == y.s_ && x.c_[0] == y.c_[0] && x.c_[1] == y.c_[1] &&
           x.c_[2] == y.c_[2] && x.c_[3] == y.c_[3];
}

BiquadraticSurd BiquadraticSurd::conj_r() const { return {c_[0], -c_[1], c_[2], -c_[3], r_, s_}; }
BiquadraticSurd BiquadraticSurd::conj_s() const { return {c_[0], c_[1], -c_[2], -c_[3], r_, s_}; }

Rat BiquadraticSurd::norm() const {
    BiquadraticSurd n = *this * conj_r() * conj_s() * conj_r().conj_s();
    // the Galois product lands in Q
    if (!n.is_rational()) throw std::logic_error("biquadratic norm not rational");
    return n.c_[0];
}

BiquadraticSurd BiquadraticSurd::inverse() const {
    Rat n = norm();
    if (n.is_zero()) throw std::domain_error("inverse of a zero-norm surd");
    BiquadraticSurd adj = conj_r() * conj_s() * conj_r().conj_s();
    return n.inverse() * adj;
}

BiquadraticSurd BiquadraticSurd::pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    BiquadraticSurd acc = rational(Rat(1), r_, s_);
    BiquadraticSurd base = *this;
    unsigned long e = static_cast<unsigned long>(n);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool BiquadraticSurd::is_rational() const {
    return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

const Rat &BiquadraticSurd::rational_value() const {
    if (!is_rational()) throw std::domain_error("surd has irrational parts");
    return c_[0];
}

Real BiquadraticSurd::to_real(Precision p) const {
    Precision w = p.plus(guard_digits());
    Real sr = sqrt(Real(r_, w));
    Real ss = sqrt(Real(s_, w));
    return Real::from(c_[0], w) + Real::from(c_[1], w) * sr + Real::from(c_[2], w) * ss +
           Real::from(c_[3], w) * (sr * ss);
}

std::string BiquadraticSurd::str() const {
    const long bases[3] = {r_, s_, r_ * s_};
    std::string out = c_[0].str();
    for (int i = 1; i < 4; ++i) {
        if (c_[static_cast<size_t>(i)].is_zero()) continue;
        out += (c_[static_cast<size_t>(i)].sign() < 0 ? " - " : " + ");
        out += c_[static_cast<size_t>(i)].abs().str() + "*sqrt(" + std::to_string(bases[i - 1]) + ")";
    }
    return out;
}

bool PellSolution::check() const {
    Int lhs = x * x - Int(D) * y * y;
    return lhs == Int(norm_sign);
}

namespace {

// One pass over the continued fraction of (P0 + sqrt(D))/Q0, accumulating
// convergents h/k of the expansion. Returns the convergent just before the
// period of the (P, Q) state closes (period measured from index 1).
struct CfResult {
    Int h, k;        // convergent h_{l-1}/k_{l-1} over the first period
    unsigned long period;
};

CfResult continued_fraction_period(long D, long P0, long Q0) {
    Int sq = Int::isqrt(Int(D));
    long a0_floor = sq.to_long();

    auto digit = [&](long P, long Q) {
        // floor((P + sqrt(D)) / Q) for Q > 0
        return (P + a0_floor) / Q;
    };

    long P = P0, Q = Q0;
    long a = digit(P, Q);
    Int h_prev(1), h(a);
    Int k_prev(0), k(1);

    long P1 = a * Q - P;
    long Q1 = (D - P1 * P1) / Q;
    P = P1;
    Q = Q1;

    unsigned long steps = 0;
    for (;;) {
        a = digit(P, Q);
        Int h_next = Int(a) * h + h_prev;
        Int k_next = Int(a) * k + k_prev;
        long Pn = a * Q - P;
        long Qn = (D - Pn * Pn) / Q;
        ++steps;
        if (Pn == P1 && Qn == Q1) {
            // state returned to the start of the period
            return {h, k, steps};
        }
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
        P = Pn;
        Q = Qn;
        if (steps > 100000) throw std::runtime_error("continued fraction period not found");
    }
}

void require_pell_d(long D) {
    if (D < 2) throw std::domain_error("pell: D must be >= 2");
    Int sq = Int::isqrt(Int(D));
    if (sq * sq == Int(D)) throw std::domain_error("pell: D must not be a perfect square");
}

}  // namespace

PellSolution pell_fundamental(long D) {
    require_pell_d(D);
    CfResult cf = continued_fraction_period(D, 0, 1);
    Int x = cf.h, y = cf.k;
    if (cf.period % 2 == 1) {
        // odd period: h/k solves x^2 - D y^2 = -1; square it up to +1
        Int x1 = x * x + Int(D) * y * y;
        Int y1 = Int(2) * x * y;
        x = x1;
        y = y1;
    }
    PellSolution sol{std::move(x), std::move(y), D, +1};
    if (!sol.check()) throw std::logic_error("pell solver produced a non-solution");
    return sol;
}

NegativePell pell_negative(long D) {
    require_pell_d(D);
    CfResult cf = continued_fraction_period(D, 0, 1);
    if (cf.period % 2 == 0) return {false, PellSolution{Int(0), Int(0), D, +1}};
    PellSolution sol{cf.h, cf.k, D, -1};
    if (!sol.check()) throw std::logic_error("pell solver produced a non-solution");
    return {true, std::move(sol)};
}

FundamentalUnit fundamental_unit(long d) {
    if (d <= 1 || d % 4 != 1 || !squarefree_small(d))
        throw std::domain_error("fundamental_unit: d must be squarefree and = 1 (mod 4)");
    // Expand (1 + sqrt(d))/2; the convergent over one period yields the unit
    // ((2h - k) + k sqrt(d))/2 with norm (-1)^period.
    CfResult cf = continued_fraction_period(d, 1, 2);
    Rat half(1, 2);
    Rat a = Rat(Int(2) * cf.h - cf.k, Int(2));
    Rat b = Rat(cf.k, Int(2));
    QuadraticSurd eps(a, b, d);
    int norm_sign = (cf.period % 2 == 1) ? -1 : +1;
    if (eps.norm() != Rat(norm_sign)) throw std::logic_error("unit norm mismatch");
    QuadraticSurd E = (norm_sign == 1) ? eps : eps * eps;
    return {std::move(eps), norm_sign, std::move(E)};
}

CoincidenceReport coincidence_checks() {
    CoincidenceReport rep{};
    QuadraticSurd u(Rat(5, 2), Rat(1, 2), 29);

    QuadraticSurd u3 = u.pow(3);
    rep.unit_cube_is_70_13 = (u3 == QuadraticSurd(Rat(70), Rat(13), 29));

    QuadraticSurd u6 = u.pow(6);
    rep.unit_sixth_is_9801_1820 = (u6 == QuadraticSurd(Rat(9801), Rat(1820), 29));

    rep.norm_cube_minus_one = (Int(70) * Int(70) - Int(29) * Int(13) * Int(13) == Int(-1));
    rep.pell_identity =
        (Int(9801) * Int(9801) - Int(29) * Int(1820) * Int(1820) == Int(1));

    QuadraticSurd ps = u6 + u.pow(-6);   // 19602 exactly
    Rat val = Rat(64) * ps.a() * ps.a();
    rep.power_sum_is_396_fourth = ps.is_rational() && val == Rat(Int::pow(396, 4));

    rep.factor_26390 = (Int(29) * Int(70) * Int(13) == Int(26390));
    return rep;
}

}  // namespace rampi
