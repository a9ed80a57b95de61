// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the fano8 authors
//
// Internal Groebner engine. Monomials are packed into two 64-bit words with
// one byte per exponent (at most 16 variables, exponents at most 127), which
// makes divisibility, lcm and products branch-free SWAR operations.
#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "fano8/groebner.hpp"

namespace fano8::gbe {

constexpr std::size_t kMaxVars = 16;
constexpr std::uint32_t kMaxExp = 127;
constexpr std::uint64_t kHigh = 0x8080808080808080ull;

// Variable 0 sits in the most significant byte of w0, variable 15 in the
// least significant byte of w1; deg caches the total degree and mask the
// support bitset (bit i set iff exponent of variable i is nonzero).
struct PM {
    std::uint64_t w0 = 0, w1 = 0;
    std::uint32_t deg = 0;
    std::uint32_t mask = 0;

    bool operator==(const PM& o) const { return w0 == o.w0 && w1 == o.w1; }
    bool operator!=(const PM& o) const { return !(*this == o); }
};

PM pm_pack(const Monomial& m);
Monomial pm_unpack(const PM& m, std::size_t nvars);

inline std::uint32_t pm_exp(const PM& m, std::size_t i) {
    std::uint64_t w = i < 8 ? m.w0 : m.w1;
    return static_cast<std::uint32_t>((w >> ((7 - (i & 7)) * 8)) & 0xff);
}

// a | b; with both words' lanes <= 127 the masked subtraction never borrows
// across lanes, so the high bit of each lane reports lane-wise >=.
inline bool pm_divides(const PM& a, const PM& b) {
    if ((a.mask & ~b.mask) != 0 || a.deg > b.deg) return false;
    return ((((b.w0 | kHigh) - a.w0) & kHigh) == kHigh) &&
           ((((b.w1 | kHigh) - a.w1) & kHigh) == kHigh);
}

PM pm_mul(const PM& a, const PM& b);      // throws ResourceLimit on lane overflow
PM pm_div(const PM& a, const PM& b);      // a / b, caller guarantees b | a
PM pm_lcm(const PM& a, const PM& b);

inline bool pm_coprime(const PM& a, const PM& b) { return (a.mask & b.mask) == 0; }

// Comparator for the three supported orders over packed monomials.
struct Cmp {
    MonomialOrder ord;
    std::size_t nvars;
    std::uint64_t bm0 = 0, bm1 = 0; // byte masks of the leading block (block order)

    Cmp(MonomialOrder o, std::size_t nv);
    int cmp(const PM& a, const PM& b) const; // <0, 0, >0 as a <, =, > b
    bool less(const PM& a, const PM& b) const { return cmp(a, b) < 0; }
};

struct ETerm {
    PM m;
    std::uint32_t c; // nonzero

    bool operator==(const ETerm& o) const { return m == o.m && c == o.c; }
};

// Terms sorted descending under the active order; leading term first.
using EPoly = std::vector<ETerm>;

EPoly to_engine(const Polynomial& f, const Cmp& cmp);
Polynomial from_engine(const EPoly& f, const Ring& R);

struct Budget {
    std::uint64_t max_pairs;
    std::size_t max_basis;
    std::uint64_t wall_ms;
    std::chrono::steady_clock::time_point start;
    std::uint64_t pairs = 0;

    explicit Budget(const GbBudget& b)
        : max_pairs(b.max_pairs), max_basis(b.max_basis), wall_ms(b.wall_ms),
          start(std::chrono::steady_clock::now()) {}
    void count_pair();
    void check_basis(std::size_t n) const;
};

// Geobucket accumulator for cancellation-heavy sums; buckets are kept in
// ascending order so popping the leading term is O(1) per bucket.
class Geobucket {
  public:
    Geobucket(const Cmp& cmp, const PrimeField& F) : cmp_(&cmp), F_(&F) {}

    void add_poly(const EPoly& g, std::size_t from, const PM* shift, std::uint32_t scale);
    bool pop_leading(ETerm& out);
    void clear() { buckets_.clear(); }

  private:
    const Cmp* cmp_;
    const PrimeField* F_;
    std::vector<std::vector<ETerm>> buckets_; // ascending order within a bucket
    std::vector<ETerm> scratch_;

    static std::size_t cap(std::size_t i) { return std::size_t(4) << (2 * i); }
    void place(std::vector<ETerm>&& g);
    std::vector<ETerm> merge(std::vector<ETerm>& a, std::vector<ETerm>& b) const;
};

struct BasisElem {
    EPoly p; // monic, descending
    PM lt;
    bool redundant = false;
};

// Full normal form of the bucket contents against the non-redundant basis
// elements; emits the remainder in descending order.
EPoly normal_form_bucket(Geobucket& bucket, const std::vector<BasisElem>& basis,
                         const Cmp& cmp, const PrimeField& F);

EPoly normal_form(const EPoly& f, const std::vector<BasisElem>& basis,
                  const Cmp& cmp, const PrimeField& F);

// Reduced Groebner basis of the input generators: monic, pairwise fully
// reduced, sorted ascending by leading monomial.
std::vector<EPoly> reduced_groebner(std::vector<EPoly> gens, const Cmp& cmp,
                                    const PrimeField& F, Budget& budget);

void make_monic(EPoly& f, const PrimeField& F);

} // namespace fano8::gbe
