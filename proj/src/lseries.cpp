// SPDX-License-Identifier: Apache-2.0

#include "rampi/lseries.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "rampi/surd.hpp"

namespace rampi {

namespace {

// (a/2) component: 0 for even a, +1 for a = +-1 (mod 8), -1 for a = +-3 (mod 8)
int kronecker_two(long a) {
    long m = ((a % 8) + 8) % 8;
    if (m % 2 == 0) return 0;
    return (m == 1 || m == 7) ? 1 : -1;
}

}  // namespace

int kronecker(long d, long n) {
    if (n == 0) return (d == 1 || d == -1) ? 1 : 0;
    int sign = 1;
    if (n < 0) {
        n = -n;
        if (d < 0) sign = -sign;
    }
    // factor out powers of two via the (d/2) rule
    while (n % 2 == 0) {
        int t = kronecker_two(d);
        if (t == 0) return 0;
        sign *= t;
        n /= 2;
    }
    // now n odd and positive: Jacobi-symbol recursion with reciprocity
    long a = ((d % n) + n) % n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long r = n % 8;
            if (r == 3 || r == 5) sign = -sign;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) sign = -sign;
        a %= n;
    }
    if (n != 1) return 0;  // shared factor
    return sign;
}

int DirichletCharacter::operator()(long n) const {
    long idx = ((n - 1) % m + m) % m;
    return values[static_cast<size_t>(idx)];
}

DirichletCharacter character_table(long d) {
    if (d == 0) throw std::domain_error("character modulus undefined for d = 0");
    long mod4 = ((d % 4) + 4) % 4;
    long m = (mod4 == 1) ? std::labs(d) : std::labs(4 * d);
    DirichletCharacter chi{d, m, {}};
    chi.values.reserve(static_cast<size_t>(m));
    for (long k = 1; k <= m; ++k) chi.values.push_back(kronecker(d, k));
    return chi;
}

Int l_negative_inner_sum(long d) {
    if (d >= 0) throw std::domain_error("inner sum defined for d < 0");
    DirichletCharacter chi = character_table(d);
    Int acc(1);
    for (long k = 2; k <= chi.m; ++k) acc += Int(k) * Int(chi(k));
    return acc.abs();
}

LValue l_negative(long d, Precision p) {
    if (d >= 0) throw std::domain_error("l_negative needs d < 0");
    Precision w = p.plus(guard_digits());
    DirichletCharacter chi = character_table(d);
    Real m(chi.m, w);
    Real value = pi_oracle(w) / (m * sqrt(m)) * Real::from(l_negative_inner_sum(d), w);
    return {d, std::move(value), LRoute::negative_closed};
}

LValue l_class_number(long d, long h, Precision p) {
    if (d <= 0 || ((d % 4) + 4) % 4 != 1)
        throw std::domain_error("class number route needs d > 0 with d = 1 (mod 4)");
    if (h <= 0) throw std::domain_error("class number must be positive");
    Precision w = p.plus(guard_digits());
    FundamentalUnit unit = fundamental_unit(d);
    Real value = Real(h, w) * log(unit.E.to_real(w)) / sqrt(Real(d, w));
    return {d, std::move(value), LRoute::class_number};
}

LValue l_trig_product(long d, Precision p) {
    if (d <= 0) throw std::domain_error("trig product route needs d > 0");
    Precision w = p.plus(guard_digits());
    DirichletCharacter chi = character_table(d);
    Real pi = pi_oracle(w);
    Real log_ratio(0, w);
    for (long k = 1; k < chi.m; ++k) {
        int c = chi(k);
        if (c == 0) continue;
        Real s = sin(pi * k / chi.m);
        log_ratio = (c > 0) ? log_ratio + log(s) : log_ratio - log(s);
    }
    // sign of the +- chosen to land on the positive value
    Real value = log_ratio / sqrt(Real(chi.m, w));
    if (value.sign() < 0) value = -value;
    return {d, std::move(value), LRoute::trig_product};
}

double l_partial_sum(long d, long terms) {
    DirichletCharacter chi = character_table(d);
    long blocks = terms / chi.m;
    double acc = 0.0;
    for (long b = 0; b < blocks; ++b) {
        double block = 0.0;
        for (long k = 1; k <= chi.m; ++k) {
            int c = chi(k);
            if (c != 0) block += static_cast<double>(c) / static_cast<double>(b * chi.m + k);
        }
        acc += block;
    }
    return acc;
}

}  // namespace rampi
