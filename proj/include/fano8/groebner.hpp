// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the fano8 authors
#pragma once

#include <cstdint>
#include <vector>

#include "fano8/order.hpp"
#include "fano8/poly.hpp"

namespace fano8 {

// Generator list; zero generators are dropped at construction.
struct Ideal {
    Ring ring;
    std::vector<Polynomial> generators;

    Ideal(Ring R, std::vector<Polynomial> gens);
    bool is_zero() const { return generators.empty(); }
    static Ideal zero(const Ring& R) { return Ideal(R, {}); }
};

// Resource budget for Buchberger runs: correct-or-abort. A breached budget
// raises ResourceLimit; a returned basis is always a true reduced basis.
// FANO8_GB_BUDGET=<n> overrides max_pairs from the environment.
struct GbBudget {
    std::uint64_t max_pairs = 4'000'000; // S-pairs processed
    std::size_t max_basis = 100'000;     // intermediate basis elements
    std::uint64_t wall_ms = 0;           // 0 = no wall-clock limit
    static GbBudget from_env();
};

// Unique reduced Groebner basis: monic, pairwise fully reduced, sorted by
// ascending leading monomial under `order`.
struct GroebnerBasis {
    MonomialOrder order;
    std::vector<Polynomial> basis;
    bool is_unit() const;
};

GroebnerBasis buchberger(const Ideal& I,
                         MonomialOrder ord = MonomialOrder::degrevlex(),
                         const GbBudget& budget = GbBudget::from_env());

// Full normal form: no term of the result is divisible by any leading term
// of G, and f - result lies in the ideal of G.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);

bool ideal_membership(const Polynomial& f, const Ideal& I,
                      MonomialOrder ord = MonomialOrder::degrevlex(),
                      const GbBudget& budget = GbBudget::from_env());

} // namespace fano8
