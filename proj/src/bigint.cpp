// SPDX-License-Identifier: Apache-2.0

#include "rampi/bigint.hpp"

#include <stdexcept>
#include <vector>

namespace rampi {

void Int::throw_parse(const std::string &s) {
    throw std::invalid_argument("not a decimal integer: '" + s + "'");
}

std::string Int::str() const {
    std::vector<char> buf(mpz_sizeinbase(v_, 10) + 2);
    mpz_get_str(buf.data(), 10, v_);
    return std::string(buf.data());
}

Rat::Rat(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    mpq_init(v_);
    mpq_set_si(v_, num, 1);
    mpq_t d;
    mpq_init(d);
    mpq_set_si(d, den, 1);
    mpq_div(v_, v_, d);
    mpq_clear(d);
}

Rat::Rat(const Int &num, const Int &den) {
    if (den.is_zero()) throw std::domain_error("rational with zero denominator");
    mpq_init(v_);
    mpq_set_num(v_, num.raw());
    mpq_set_den(v_, den.raw());
    mpq_canonicalize(v_);
}

Rat operator/(const Rat &a, const Rat &b) {
    if (b.is_zero()) throw std::domain_error("rational division by zero");
    Rat r;
    mpq_div(r.v_, a.v_, b.v_);
    return r;
}

bool Rat::is_integer() const { return mpz_cmp_ui(mpq_denref(v_), 1) == 0; }

Rat Rat::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Rat r;
    mpq_inv(r.v_, v_);
    return r;
}

Rat Rat::pow(const Rat &base, long e) {
    if (e < 0) return pow(base.inverse(), -e);
    Rat r;
    mpz_pow_ui(mpq_numref(r.v_), mpq_numref(base.v_), static_cast<unsigned long>(e));
    mpz_pow_ui(mpq_denref(r.v_), mpq_denref(base.v_), static_cast<unsigned long>(e));
    return r;  // base canonical implies base^e canonical
}

std::string Rat::str() const {
    if (is_integer()) return num().str();
    return num().str() + "/" + den().str();
}

}  // namespace rampi
