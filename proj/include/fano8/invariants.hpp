// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the fano8 authors
#pragma once

#include <cstdint>
#include <vector>

namespace fano8 {

// Intersection numbers on the blowup Y -> X with exceptional divisor E.
struct BlowupInvariants {
    std::int64_t kcube; // (-K_Y)^3
    std::int64_t k2e;   // (-K_Y)^2 E
    std::int64_t ke2;   // (-K_Y) E^2
    std::int64_t e3;    // E^3

    bool operator==(const BlowupInvariants& o) const = default;
};

// Blowup of a threefold X along a curve C with d = -K_X . C and arithmetic
// genus g:  (-K_Y)^3 = (-K_X)^3 - 2d + 2g - 2,  (-K_Y)^2 E = d - 2g + 2,
// (-K_Y) E^2 = 2g - 2,  E^3 = -d - 2g + 2.
BlowupInvariants blowup_curve(std::int64_t kcube_x, std::int64_t d, std::int64_t g);

// (-K_Y)^3 = 2g - 10 for the blowup of a genus-g prime Fano threefold at a
// point; requires g >= 5.
std::int64_t blowup_point(std::int64_t g);

// Delta genus dim + A^3 - h^0.
std::int64_t delta_genus(std::int64_t dim, std::int64_t A3, std::int64_t h0);

// h^0(Gr(2,6), O(k)): Weyl dimension formula for the GL_6 highest weight
// (k, k, 0, 0, 0, 0); requires k >= 0.
std::int64_t weyl_h0(std::int64_t k);

enum class TwoRayMode { flop, divisorial };

struct TwoRaySolution {
    std::int64_t first;  // gamma (flop) or alpha (divisorial)
    std::int64_t second; // beta

    bool operator==(const TwoRaySolution& o) const = default;
};

// Integer solutions of the two-ray-game equations.
//   flop:        kcube g^2 - 2 k2e g b + ke2 b^2 = target, g >= 2, b >= 1
//   divisorial:  kcube a = k2e b, a >= 1, b in {1, 2} (target ignored)
// The returned list is exhaustive in the regimes documented in the
// implementation; configurations with infinitely many solutions throw
// std::invalid_argument("unbounded solution family").
std::vector<TwoRaySolution> tworay_solutions(std::int64_t kcube, std::int64_t k2e,
                                             std::int64_t ke2, std::int64_t target,
                                             TwoRayMode mode);

} // namespace fano8
