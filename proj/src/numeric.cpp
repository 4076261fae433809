// SPDX-License-Identifier: Apache-2.0

#include "rampi/numeric.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace rampi {

Precision::Precision(long d) : digits(d) {
    if (d < 1) throw std::domain_error("precision must be at least 1 digit");
}

mpfr_prec_t Precision::bits() const {
    // log2(10) = 3.3219...; 32 extra bits cover bit-level rounding slack
    return static_cast<mpfr_prec_t>(static_cast<double>(digits) * 3.3220) + 32;
}

long guard_digits(long term_count_estimate) {
    long g = 10;
    long t = term_count_estimate;
    while (t >= 10) {
        ++g;
        t /= 10;
    }
    return g;
}

Real::Real() : digits_(2) { mpfr_init2(v_, Precision(2).bits()); mpfr_set_zero(v_, 1); }

Real::Real(mpfr_prec_t bits, long digits) : digits_(digits) { mpfr_init2(v_, bits); }

Real::Real(Precision p) : Real(p.bits(), p.digits) { mpfr_set_zero(v_, 1); }

Real::Real(long n, Precision p) : Real(p.bits(), p.digits) { mpfr_set_si(v_, n, MPFR_RNDN); }

Real::Real(const std::string &decimal, Precision p) : Real(p.bits(), p.digits) {
    if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
        mpfr_clear(v_);
        throw std::invalid_argument("not a decimal number: '" + decimal + "'");
    }
}

Real Real::from(const Rat &q, Precision p) {
    Real r(p);
    mpfr_set_q(r.v_, q.raw(), MPFR_RNDN);
    return r;
}

Real Real::from(const Int &n, Precision p) {
    Real r(p);
    mpfr_set_z(r.v_, n.raw(), MPFR_RNDN);
    return r;
}

Real Real::from_double(double d, Precision p) {
    Real r(p);
    mpfr_set_d(r.v_, d, MPFR_RNDN);
    return r;
}

Real::Real(const Real &o) : digits_(o.digits_) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real &&o) noexcept : digits_(o.digits_) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

Real &Real::operator=(Real o) noexcept {
    mpfr_swap(v_, o.v_);
    std::swap(digits_, o.digits_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::binary(const Real &a, const Real &b,
                  int (*op)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t)) {
    long d = a.digits_ > b.digits_ ? a.digits_ : b.digits_;
    Real r(Precision(d).bits(), d);
    op(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator+(const Real &a, const Real &b) { return Real::binary(a, b, mpfr_add); }
Real operator-(const Real &a, const Real &b) { return Real::binary(a, b, mpfr_sub); }
Real operator*(const Real &a, const Real &b) { return Real::binary(a, b, mpfr_mul); }

Real operator/(const Real &a, const Real &b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    return Real::binary(a, b, mpfr_div);
}

Real operator-(const Real &a) {
    Real r(a);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
}

Real operator+(const Real &a, long b) {
    Real r(a);
    mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}
Real operator-(const Real &a, long b) {
    Real r(a);
    mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}
Real operator-(long a, const Real &b) {
    Real r(b);
    mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
    return r;
}
Real operator*(const Real &a, long b) {
    Real r(a);
    mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}
Real operator/(const Real &a, long b) {
    if (b == 0) throw std::domain_error("division by zero");
    Real r(a);
    mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}
Real operator/(long a, const Real &b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    Real r(b);
    mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
    return r;
}

bool operator==(const Real &a, const Real &b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
bool operator<(const Real &a, const Real &b) { return mpfr_less_p(a.v_, b.v_) != 0; }
bool operator<=(const Real &a, const Real &b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
bool Real::operator<(long n) const { return mpfr_cmp_si(v_, n) < 0; }
bool Real::operator>(long n) const { return mpfr_cmp_si(v_, n) > 0; }
bool Real::operator==(long n) const { return mpfr_cmp_si(v_, n) == 0; }

Real Real::abs() const {
    Real r(*this);
    mpfr_abs(r.v_, r.v_, MPFR_RNDN);
    return r;
}

Real Real::abs_diff(const Real &other) const { return (*this - other).abs(); }

bool Real::agrees_to_digits(const Real &other, long digits) const {
    if (digits < 0) digits = digits_ < other.digits_ ? digits_ : other.digits_;
    Real tol = pow10(digits, Precision(digits_));
    return abs_diff(other) <= tol;
}

std::string Real::str(long sig, bool round) const {
    if (sig < 1) sig = 1;
    mpfr_exp_t e;
    char *raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(sig),
                             v_, round ? MPFR_RNDN : MPFR_RNDZ);
    std::string m(raw);
    mpfr_free_str(raw);
    std::string sgn;
    if (!m.empty() && m[0] == '-') {
        sgn = "-";
        m.erase(0, 1);
    }
    if (mpfr_zero_p(v_)) return "0";
    std::string out;
    if (e <= 0) {
        out = "0." + std::string(static_cast<size_t>(-e), '0') + m;
    } else if (static_cast<size_t>(e) >= m.size()) {
        out = m + std::string(static_cast<size_t>(e) - m.size(), '0');
    } else {
        out = m.substr(0, static_cast<size_t>(e)) + "." + m.substr(static_cast<size_t>(e));
    }
    // drop a trailing dot from integer-valued output
    if (!out.empty() && out.back() == '.') out.pop_back();
    return sgn + out;
}

std::string Real::sci(int mantissa) const {
    char buf[64];
    mpfr_snprintf(buf, sizeof(buf), "%.*Re", mantissa, v_);
    return std::string(buf);
}

namespace {

using UnaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

Real unary(const Real &x, UnaryOp op) {
    Real r(x);
    op(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

}  // namespace

Real sqrt(const Real &x) {
    if (x.sign() < 0) throw std::domain_error("sqrt of a negative value");
    return unary(x, mpfr_sqrt);
}

Real exp(const Real &x) { return unary(x, mpfr_exp); }

Real log(const Real &x) {
    if (x.sign() <= 0) throw std::domain_error("log of a non-positive value");
    return unary(x, mpfr_log);
}

Real atan(const Real &x) { return unary(x, mpfr_atan); }
Real sin(const Real &x) { return unary(x, mpfr_sin); }
Real sinh(const Real &x) { return unary(x, mpfr_sinh); }
Real cosh(const Real &x) { return unary(x, mpfr_cosh); }
Real tanh(const Real &x) { return unary(x, mpfr_tanh); }

Real pow_si(const Real &x, long e) {
    Real r(x);
    mpfr_pow_si(r.raw(), x.raw(), e, MPFR_RNDN);
    return r;
}

Real root(const Real &x, unsigned long n) {
    if (x.sign() < 0) throw std::domain_error("root of a negative value");
    Real r(x);
    mpfr_rootn_ui(r.raw(), x.raw(), n, MPFR_RNDN);
    return r;
}

Real min(const Real &a, const Real &b) { return a < b ? a : b; }
Real max(const Real &a, const Real &b) { return a < b ? b : a; }

Real pow10(long digits_negated, Precision p) {
    Real r(p);
    mpfr_set_ui(r.raw(), 10, MPFR_RNDN);
    mpfr_pow_si(r.raw(), r.raw(), -digits_negated, MPFR_RNDN);
    return r;
}

namespace {

// Scaled arctan: floor-ish of atan(1/m) * 10^scale_digits, all in integers.
// Each truncated division loses at most one unit in the last place, and the
// series has ~scale_digits/(2 log10 m) terms, so the result is accurate to
// a few thousand ulps of the scale; callers add guard digits accordingly.
Int atan_reciprocal_scaled(unsigned long m, long scale_digits) {
    Int scale = Int::pow(10, static_cast<unsigned long>(scale_digits));
    Int term = scale / Int(static_cast<long>(m));
    Int acc = term;
    unsigned long m2 = m * m;  // callers keep m small (<= 239)
    unsigned long k = 1;
    while (!term.is_zero()) {
        term /= m2;
        if (term.is_zero()) break;
        Int t = term / Int(static_cast<long>(2 * k + 1));
        if (k % 2 == 1)
            acc -= t;
        else
            acc += t;
        ++k;
    }
    return acc;
}

Real from_scaled(const Int &value, long scale_digits, Precision p) {
    Real num = Real::from(value, p);
    Real den = Real::from(Int::pow(10, static_cast<unsigned long>(scale_digits)), p);
    return num / den;
}

}  // namespace

Real atan_reciprocal(unsigned long m, Precision p) {
    if (m == 0) throw std::domain_error("atan_reciprocal needs m >= 1");
    long scale = p.digits + guard_digits(p.digits);
    return from_scaled(atan_reciprocal_scaled(m, scale), scale, Precision(scale));
}

Real pi_oracle(Precision p) {
    long scale = p.digits + guard_digits(p.digits);
    Int v = atan_reciprocal_scaled(5, scale) * Int(16) -
            atan_reciprocal_scaled(239, scale) * Int(4);
    return from_scaled(v, scale, Precision(scale));
}

Real pi_oracle_alt(Precision p) {
    long scale = p.digits + guard_digits(p.digits);
    Int v = (atan_reciprocal_scaled(2, scale) + atan_reciprocal_scaled(3, scale)) * Int(4);
    return from_scaled(v, scale, Precision(scale));
}

}  // namespace rampi
