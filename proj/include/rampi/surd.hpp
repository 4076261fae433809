// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <string>
#include <vector>

#include "rampi/bigint.hpp"
#include "rampi/numeric.hpp"

namespace rampi {

/// Exact element a + b*sqrt(d) of a real quadratic field, d squarefree > 1.
/// Equality is component-wise; arithmetic is exact.
class QuadraticSurd {
public:
    QuadraticSurd(Rat a, Rat b, long d);

    const Rat &a() const { return a_; }
    const Rat &b() const { return b_; }
    long d() const { return d_; }

    friend QuadraticSurd operator+(const QuadraticSurd &x, const QuadraticSurd &y);
    friend QuadraticSurd operator-(const QuadraticSurd &x, const QuadraticSurd &y);
    friend QuadraticSurd operator*(const QuadraticSurd &x, const QuadraticSurd &y);
    friend bool operator==(const QuadraticSurd &x, const QuadraticSurd &y);
    friend bool operator!=(const QuadraticSurd &x, const QuadraticSurd &y) { return !(x == y); }

    QuadraticSurd conjugate() const { return {a_, -b_, d_}; }
    /// Field norm a^2 - d b^2, exact.
    Rat norm() const;
    /// Exact inverse via conjugate/norm; throws on norm zero.
    QuadraticSurd inverse() const;
    /// u^n for any integer n (negative n uses the exact inverse).
    QuadraticSurd pow(long n) const;

    bool is_rational() const { return b_.is_zero(); }
    Real to_real(Precision p) const;
    std::string str() const;

private:
    Rat a_, b_;
    long d_;
};

/// Exact element c0 + c1*sqrt(r) + c2*sqrt(s) + c3*sqrt(r*s) of the
/// biquadratic field Q(sqrt(r), sqrt(s)); r, s distinct squarefree > 1.
/// Defaults to the field Q(sqrt(2), sqrt(29)) used throughout.
class BiquadraticSurd {
public:
    BiquadraticSurd(Rat c0, Rat c1, Rat c2, Rat c3, long r = 2, long s = 29);
    static BiquadraticSurd rational(const Rat &q, long r = 2, long s = 29) {
        return {q, Rat(0), Rat(0), Rat(0), r, s};
    }

    const Rat &c(int i) const { return c_[static_cast<size_t>(i)]; }
    long r() const { return r_; }
    long s() const { return s_; }

    friend BiquadraticSurd operator+(const BiquadraticSurd &x, const BiquadraticSurd &y);
    friend BiquadraticSurd operator-(const BiquadraticSurd &x, const BiquadraticSurd &y);
    friend BiquadraticSurd operator*(const BiquadraticSurd &x, const BiquadraticSurd &y);
    friend BiquadraticSurd operator*(const Rat &q, const BiquadraticSurd &x);
    friend bool operator==(const BiquadraticSurd &x, const BiquadraticSurd &y);
    friend bool operator!=(const BiquadraticSurd &x, const BiquadraticSurd &y) { return !(x == y); }

    BiquadraticSurd conj_r() const;  // sqrt(r) -> -sqrt(r)
    BiquadraticSurd conj_s() const;  // sqrt(s) -> -sqrt(s)
    /// Product over the four Galois conjugates; always rational.
    Rat norm() const;
    BiquadraticSurd inverse() const;
    BiquadraticSurd pow(long n) const;

    bool is_rational() const;
    /// The rational part, valid only when is_rational().
    const Rat &rational_value() const;
    Real to_real(Precision p) const;
    std::string str() const;

private:
    std::array<Rat, 4> c_;
    long r_, s_;
};

/// Exact solution of x^2 - D y^2 = norm_sign with x, y > 0.
struct PellSolution {
    Int x, y;
    long D;
    int norm_sign;  // +1 or -1

    bool check() const;  // exact re-verification of the defining equation
};

/// Least positive solution of x^2 - D y^2 = +1 by the periodic continued
/// fraction of sqrt(D). D must be >= 2 and not a perfect square.
PellSolution pell_fundamental(long D);

/// Least positive solution of x^2 - D y^2 = -1 when the period is odd.
/// Returns false in `exists` otherwise.
struct NegativePell {
    bool exists;
    PellSolution sol;
};
NegativePell pell_negative(long D);

/// Fundamental unit eps = (a + b sqrt(d))/2 of Q(sqrt(d)) for squarefree
/// d = 1 (mod 4), from the continued fraction of (1 + sqrt(d))/2, together
/// with its norm and the norm-one power E (= eps if N(eps) = 1, else eps^2).
struct FundamentalUnit {
    QuadraticSurd eps;
    int norm_sign;
    QuadraticSurd E;
};
FundamentalUnit fundamental_unit(long d);

/// Exact integer identities tying the Pell data for D = 29 to the constants
/// 396^4 and 26390 of the final series.
struct CoincidenceReport {
    bool unit_cube_is_70_13;        // u^3 = 70 + 13 sqrt(29)
    bool unit_sixth_is_9801_1820;   // u^6 = 9801 + 1820 sqrt(29)
    bool norm_cube_minus_one;       // 70^2 - 29*13^2 = -1
    bool pell_identity;             // 9801^2 - 29*1820^2 = 1
    bool power_sum_is_396_fourth;   // 2^6 (u^6 + u^-6)^2 = 396^4
    bool factor_26390;              // 26390 = 29*70*13
    bool all() const {
        return unit_cube_is_70_13 && unit_sixth_is_9801_1820 && norm_cube_minus_one &&
               pell_identity && power_sum_is_396_fourth && factor_26390;
    }
};
CoincidenceReport coincidence_checks();

}  // namespace rampi
