// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the fano8 authors
#pragma once

#include <cstdint>
#include <vector>

#include "fano8/groebner.hpp"
#include "fano8/pfaffian.hpp"

namespace fano8 {

// Plucker coordinates of Gr(2,n): one variable x_<i>_<j> per pair
// 0 <= i < j < n, ordered lexicographically by (i, j).
Ring plucker_ring(std::size_t n, std::uint32_t p);
std::size_t plucker_index(std::size_t n, std::size_t i, std::size_t j);

// The C(n,4) quadrics x_ij x_kl - x_ik x_jl + x_il x_jk for i<j<k<l.
// Requires n >= 4.
Ideal plucker_ideal(std::size_t n, const PrimeField& F);

// Ambient Plucker data together with a linearly independent set of linear
// relations cutting out a subspace of P(wedge^2 F^n).
struct PluckerSpec {
    std::size_t n;
    Ring ring;
    std::vector<Polynomial> linear_relations;

    // validates degrees and independence (rank check over F_p)
    static PluckerSpec make(std::size_t n, Ring ring,
                            std::vector<Polynomial> linear_relations);
};

// The 6x6 alternating matrix of linear forms in (x, y, z, v, w) whose
// Pfaffian cuts out the genus-8 Klein threefold section.
AlternatingMatrix klein_matrix(std::uint32_t p);

// Pfaffian of klein_matrix; equals -(x^2 y + y^2 z + z^2 v + v^2 w + w^2 x).
Polynomial klein_cubic(std::uint32_t p);

// The 5 linear relations x_0_3 - x_1_4, x_0_4 - x_2_5, x_1_3 + x_0_5,
// x_0_1 + x_2_4, x_0_2 + x_3_5 on the Gr(2,6) coordinates.
PluckerSpec klein_spec(const PrimeField& F);

// Minimal presentation of the genus-8 threefold cone: the 15 Plucker quadrics
// with the 5 relations solved and substituted, in the remaining 10 variables.
Ideal klein_section(const PrimeField& F);

} // namespace fano8
