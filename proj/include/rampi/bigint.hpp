// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmp.h>

#include <cstdint>
#include <string>
#include <utility>

namespace rampi {

/// Arbitrary-precision signed integer (thin RAII wrapper over GMP mpz).
class Int {
public:
    Int() { mpz_init(v_); }
    Int(long n) { mpz_init_set_si(v_, n); }
    explicit Int(const std::string &dec) {
        if (mpz_init_set_str(v_, dec.c_str(), 10) != 0) {
            mpz_clear(v_);
            throw_parse(dec);
        }
    }
    Int(const Int &o) { mpz_init_set(v_, o.v_); }
    Int(Int &&o) noexcept {
        mpz_init(v_);
        mpz_swap(v_, o.v_);
    }
    Int &operator=(Int o) noexcept {
        mpz_swap(v_, o.v_);
        return *this;
    }
    ~Int() { mpz_clear(v_); }

    friend Int operator+(const Int &a, const Int &b) { Int r; mpz_add(r.v_, a.v_, b.v_); return r; }
    friend Int operator-(const Int &a, const Int &b) { Int r; mpz_sub(r.v_, a.v_, b.v_); return r; }
    friend Int operator*(const Int &a, const Int &b) { Int r; mpz_mul(r.v_, a.v_, b.v_); return r; }
    friend Int operator-(const Int &a) { Int r; mpz_neg(r.v_, a.v_); return r; }
    Int &operator+=(const Int &b) { mpz_add(v_, v_, b.v_); return *this; }
    Int &operator-=(const Int &b) { mpz_sub(v_, v_, b.v_); return *this; }
    Int &operator*=(const Int &b) { mpz_mul(v_, v_, b.v_); return *this; }
    Int &operator*=(long m) { mpz_mul_si(v_, v_, m); return *this; }

    /// Truncated quotient (toward zero).
    friend Int operator/(const Int &a, const Int &b) { Int r; mpz_tdiv_q(r.v_, a.v_, b.v_); return r; }
    Int &operator/=(unsigned long d) { mpz_tdiv_q_ui(v_, v_, d); return *this; }

    friend bool operator==(const Int &a, const Int &b) { return mpz_cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Int &a, const Int &b) { return !(a == b); }
    friend bool operator<(const Int &a, const Int &b) { return mpz_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Int &a, const Int &b) { return mpz_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Int &a, const Int &b) { return b < a; }
    friend bool operator>=(const Int &a, const Int &b) { return b <= a; }
    bool operator==(long n) const { return mpz_cmp_si(v_, n) == 0; }

    int sign() const { return mpz_sgn(v_); }
    bool is_zero() const { return mpz_sgn(v_) == 0; }
    Int abs() const { Int r; mpz_abs(r.v_, v_); return r; }

    static Int pow(const Int &base, unsigned long e) {
        Int r;
        mpz_pow_ui(r.v_, base.v_, e);
        return r;
    }
    static Int pow(unsigned long base, unsigned long e) {
        Int r;
        mpz_ui_pow_ui(r.v_, base, e);
        return r;
    }
    static Int factorial(unsigned long n) {
        Int r;
        mpz_fac_ui(r.v_, n);
        return r;
    }
    /// floor(sqrt(n)); n must be non-negative.
    static Int isqrt(const Int &n) {
        Int r;
        mpz_sqrt(r.v_, n.v_);
        return r;
    }
    bool is_perfect_square() const { return mpz_perfect_square_p(v_) != 0; }

    bool fits_long() const { return mpz_fits_slong_p(v_) != 0; }
    long to_long() const { return mpz_get_si(v_); }
    double to_double() const { return mpz_get_d(v_); }
    std::string str() const;

    mpz_srcptr raw() const { return v_; }
    mpz_ptr raw() { return v_; }

private:
    [[noreturn]] static void throw_parse(const std::string &s);
    mpz_t v_;
};

/// Exact rational, always canonical (lowest terms, positive denominator).
class Rat {
public:
    Rat() { mpq_init(v_); }
    Rat(long n) { mpq_init(v_); mpq_set_si(v_, n, 1); }
    Rat(long num, long den);
    Rat(const Int &num, const Int &den);
    explicit Rat(const Int &n) { mpq_init(v_); mpq_set_z(v_, n.raw()); }
    Rat(const Rat &o) { mpq_init(v_); mpq_set(v_, o.v_); }
    Rat(Rat &&o) noexcept { mpq_init(v_); mpq_swap(v_, o.v_); }
    Rat &operator=(Rat o) noexcept { mpq_swap(v_, o.v_); return *this; }
    ~Rat() { mpq_clear(v_); }

    friend Rat operator+(const Rat &a, const Rat &b) { Rat r; mpq_add(r.v_, a.v_, b.v_); return r; }
    friend Rat operator-(const Rat &a, const Rat &b) { Rat r; mpq_sub(r.v_, a.v_, b.v_); return r; }
    friend Rat operator*(const Rat &a, const Rat &b) { Rat r; mpq_mul(r.v_, a.v_, b.v_); return r; }
    friend Rat operator/(const Rat &a, const Rat &b);
    friend Rat operator-(const Rat &a) { Rat r; mpq_neg(r.v_, a.v_); return r; }
    Rat &operator+=(const Rat &b) { mpq_add(v_, v_, b.v_); return *this; }
    Rat &operator-=(const Rat &b) { mpq_sub(v_, v_, b.v_); return *this; }
    Rat &operator*=(const Rat &b) { mpq_mul(v_, v_, b.v_); return *this; }
    Rat &operator/=(const Rat &b) { *this = *this / b; return *this; }

    friend bool operator==(const Rat &a, const Rat &b) { return mpq_equal(a.v_, b.v_) != 0; }
    friend bool operator!=(const Rat &a, const Rat &b) { return !(a == b); }
    friend bool operator<(const Rat &a, const Rat &b) { return mpq_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rat &a, const Rat &b) { return mpq_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rat &a, const Rat &b) { return b < a; }
    bool operator==(long n) const { return mpq_cmp_si(v_, n, 1) == 0; }

    int sign() const { return mpq_sgn(v_); }
    bool is_zero() const { return mpq_sgn(v_) == 0; }
    bool is_integer() const;
    Rat abs() const { Rat r; mpq_abs(r.v_, v_); return r; }
    Rat inverse() const;
    static Rat pow(const Rat &base, long e);

    Int num() const { Int r; mpq_get_num(r.raw(), v_); return r; }
    Int den() const { Int r; mpq_get_den(r.raw(), v_); return r; }
    double to_double() const { return mpq_get_d(v_); }
    std::string str() const;

    mpq_srcptr raw() const { return v_; }

private:
    mpq_t v_;
};

}  // namespace rampi
