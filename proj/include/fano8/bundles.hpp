// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the fano8 authors
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fano8/schubert.hpp"

namespace fano8 {

// Total Chern class by degree: list[d] = c_d, list[0] = 1, size = rank + 1.
using ChernList = std::vector<SchubertClass>;

// Chern classes of the rank-4 bundle K (c1 = -s1, det O(-1)) and the rank-2
// bundle Q (c(Q) = 1 + s1 + s11, det O(1)) with c(K) c(Q) = 1.
std::pair<ChernList, ChernList> chern_universal();

// Chern classes of wedge^2 E for E of rank r >= 2, by the splitting
// principle: elementary symmetric functions of the pairwise root sums,
// reduced exactly to the elementary symmetric basis and evaluated at c(E).
// A non-symmetric reduction residue throws NonSymmetricResidual.
ChernList chern_wedge2(const ChernList& cE);

// Segre classes s_0..s_upto with s(E) c(E) = 1.
ChernList segre_inverse(const ChernList& cE, int upto);

// Integral over P(E) -> Gr(2,6) of (xi + a pi^* H)^k for the tautological
// quotient convention pi_* xi^m = s_{m-r+1} with s_j = (-1)^j [c^{-1}]_j.
// Requires k = 8 + r - 1; the fiber normalization k = r - 1, a = 0 returns 1.
std::int64_t projbundle_integral(const ChernList& cE, int r, int a, int k);

// Degree of the tautological divisor of P(E) for an abstract rank-2 E on a
// threefold with the given c1(E)^3 and c1(E) c2(E): s_3 = c1^3 - 2 c1 c2.
std::int64_t palatini_degree(std::int64_t c1cube, std::int64_t c1c2);

} // namespace fano8
