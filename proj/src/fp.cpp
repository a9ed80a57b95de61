// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the fano8 authors
#include "fano8/fp.hpp"

namespace fano8 {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p < 2 || p >= (1u << 31) || !is_prime(p))
        throw Error("modulus " + std::to_string(p) + " is not a prime in [2, 2^31)");
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    a %= p_;
    if (a == 0) throw ZeroInverse();
    // extended Euclid on (a, p)
    std::int64_t r0 = a, r1 = p_, s0 = 1, s1 = 0;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    return reduce(s0);
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1 % p_;
    a %= p_;
    while (e != 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint32_t fp_inverse(std::uint32_t a, const PrimeField& F) { return F.inv(a); }

} // namespace fano8
