// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the fano8 authors
#pragma once

#include <cstdint>

#include "fano8/error.hpp"

namespace fano8 {

// Arithmetic in the prime field F_p, 2 <= p < 2^31. Elements are canonical
// representatives in [0, p).
class PrimeField {
  public:
    explicit PrimeField(std::uint32_t p);

    std::uint32_t p() const { return p_; }

    std::uint32_t reduce(std::int64_t a) const {
        std::int64_t r = a % static_cast<std::int64_t>(p_);
        return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
    }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(
            static_cast<std::uint64_t>(a) * b % p_);
    }
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

  private:
    std::uint32_t p_;
};

bool is_prime(std::uint32_t n);

// a^{-1} in F. Throws ZeroInverse if a == 0 mod p.
std::uint32_t fp_inverse(std::uint32_t a, const PrimeField& F);

} // namespace fano8
