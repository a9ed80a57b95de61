// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the fano8 authors
#pragma once

#include <cstdint>
#include <vector>

#include "fano8/ideal_ops.hpp"

namespace fano8 {

// (f, df/dx_0, ..., df/dx_{n-1}) with formal characteristic-p derivatives.
// f must be nonzero.
Ideal jacobian_ideal(const Polynomial& f);

// True iff the projective hypersurface f = 0 is smooth over the algebraic
// closure: saturation(jacobian_ideal(f), m) = (1) for the irrelevant maximal
// ideal m. f must be homogeneous of degree >= 1.
bool is_smooth_hypersurface(const Polynomial& f,
                            const GbBudget& budget = GbBudget::from_env());

// A point of P^{n-1}(F_p) in normalized coordinates (first nonzero = 1).
using ProjectivePoint = std::vector<std::uint32_t>;

// All common projective zeros of the generators over F_p, normalized and
// lexicographically sorted. Throws ScanBudgetExceeded when the number of
// points of P^{n-1}(F_p) exceeds max_points.
std::vector<ProjectivePoint> find_rational_points(
    const Ideal& I, std::uint64_t max_points = 10'000'000);

} // namespace fano8
