// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <mpfr.h>

#include <string>

#include "rampi/bigint.hpp"

namespace rampi {

/// Target accuracy in decimal digits. Every numeric routine in this library
/// takes a Precision and promises an absolute error of at most 10^(-digits)
/// on values of moderate magnitude; callers choose the working headroom via
/// guard_digits().
struct Precision {
    long digits;

    explicit Precision(long d);

    /// Binary precision used for the underlying floats, with headroom so that
    /// rounding at the bit level never eats into the decimal contract.
    mpfr_prec_t bits() const;

    Precision plus(long extra) const { return Precision(digits + extra); }
};

/// Guard-digit policy for composed computations: 10 digits plus one digit per
/// decade of series terms, which bounds accumulated rounding across up to
/// ~10^6 elementary operations.
long guard_digits(long term_count_estimate = 1);

/// Arbitrary-precision real tagged with its decimal working precision.
///
/// Values are immutable after construction as far as callers are concerned;
/// all arithmetic returns fresh values carrying max(operand precisions).
/// Raw comparisons (<, ==) act on the stored values; agreement up to an
/// explicit tolerance goes through agrees_to_digits()/abs_diff() so that no
/// comparison hides its epsilon.
class Real {
public:
    Real();  // zero at a minimal 2-digit tag; containers only
    explicit Real(Precision p);
    Real(long n, Precision p);
    Real(const std::string &decimal, Precision p);
    static Real from(const Rat &q, Precision p);
    static Real from(const Int &n, Precision p);
    static Real from_double(double d, Precision p);

    Real(const Real &o);
    Real(Real &&o) noexcept;
    Real &operator=(Real o) noexcept;
    ~Real();

    long digits() const { return digits_; }
    Precision precision() const { return Precision(digits_); }

    friend Real operator+(const Real &a, const Real &b);
    friend Real operator-(const Real &a, const Real &b);
    friend Real operator*(const Real &a, const Real &b);
    friend Real operator/(const Real &a, const Real &b);
    friend Real operator-(const Real &a);
    friend Real operator+(const Real &a, long b);
    friend Real operator+(long a, const Real &b) { return b + a; }
    friend Real operator-(const Real &a, long b);
    friend Real operator-(long a, const Real &b);
    friend Real operator*(const Real &a, long b);
    friend Real operator*(long a, const Real &b) { return b * a; }
    friend Real operator/(const Real &a, long b);
    friend Real operator/(long a, const Real &b);

    friend bool operator==(const Real &a, const Real &b);
    friend bool operator<(const Real &a, const Real &b);
    friend bool operator<=(const Real &a, const Real &b);
    friend bool operator>(const Real &a, const Real &b) { return b < a; }
    friend bool operator>=(const Real &a, const Real &b) { return b <= a; }
    bool operator<(long n) const;
    bool operator>(long n) const;
    bool operator==(long n) const;

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    Real abs() const;

    /// |*this - other| as a Real; the explicit-tolerance comparison primitive.
    Real abs_diff(const Real &other) const;
    /// True iff |*this - other| <= 10^(-digits); digits defaults to the
    /// weaker of the two precision tags.
    bool agrees_to_digits(const Real &other, long digits = -1) const;

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    /// Decimal expansion with `sig` significant digits. Truncates toward zero
    /// when round=false, so digit strings of lower-bounded-accurate values
    /// are prefix-stable.
    std::string str(long sig, bool round = true) const;
    /// Scientific form "d.dd...e+xx" with `mantissa` digits after the point.
    std::string sci(int mantissa = 3) const;

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

private:
    explicit Real(mpfr_prec_t bits, long digits);
    static Real binary(const Real &a, const Real &b,
                       int (*op)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t));
    mpfr_t v_;
    long digits_;
};

// Kernel functions. Domain violations throw std::domain_error.
Real sqrt(const Real &x);        // x >= 0
Real exp(const Real &x);
Real log(const Real &x);         // x > 0
Real atan(const Real &x);
Real sin(const Real &x);
Real sinh(const Real &x);
Real cosh(const Real &x);
Real tanh(const Real &x);
Real pow_si(const Real &x, long e);
Real root(const Real &x, unsigned long n);  // x^(1/n), x >= 0
Real min(const Real &a, const Real &b);
Real max(const Real &a, const Real &b);

/// 10^(-digits) at a matching working precision; the unit for tolerances.
Real pow10(long digits_negated, Precision p);

/// arctan(1/m) by the alternating integer series, evaluated entirely in
/// fixed-point integer arithmetic. Independent of the mpfr transcendental
/// code; this is the building block of the pi reference below.
Real atan_reciprocal(unsigned long m, Precision p);

/// pi to p digits by a Machin arctangent formula (16 atan 1/5 - 4 atan 1/239),
/// the independent reference every series result is validated against.
Real pi_oracle(Precision p);
/// Second arctangent formula (4 atan 1/2 + 4 atan 1/3), kept distinct so the
/// two references can be cross-checked against each other.
Real pi_oracle_alt(Precision p);

}  // namespace rampi
