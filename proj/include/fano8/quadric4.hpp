// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the fano8 authors
#pragma once

#include <cstdint>
#include <vector>

namespace fano8 {

// Chow class on a smooth quadric fourfold over the basis
// {[Q], H, {V, V'}, line, point} with H^2 = V + V', V^2 = V'^2 = pt,
// V V' = 0, H V = H V' = line, H line = pt.
struct QuadricClass {
    std::int64_t q = 0;  // [Q], codim 0
    std::int64_t h = 0;  // hyperplane H, codim 1
    std::int64_t v = 0;  // V, codim 2
    std::int64_t vp = 0; // V', codim 2
    std::int64_t l = 0;  // line, codim 3
    std::int64_t pt = 0; // point, codim 4

    static QuadricClass one() { return {1, 0, 0, 0, 0, 0}; }
    static QuadricClass H() { return {0, 1, 0, 0, 0, 0}; }
    static QuadricClass V() { return {0, 0, 1, 0, 0, 0}; }
    static QuadricClass Vprime() { return {0, 0, 0, 1, 0, 0}; }
    static QuadricClass line() { return {0, 0, 0, 0, 1, 0}; }
    static QuadricClass point() { return {0, 0, 0, 0, 0, 1}; }
    // class of the Veronese surface, T = V + 3V'
    static QuadricClass veronese() { return {0, 0, 1, 3, 0, 0}; }

    QuadricClass operator+(const QuadricClass& o) const;
    QuadricClass operator-(const QuadricClass& o) const;
    QuadricClass scaled(std::int64_t c) const;
    bool operator==(const QuadricClass& o) const = default;
    bool is_zero() const;
    // -1 for zero; throws Error when mixed-codimension
    int codimension() const;
};

QuadricClass quadric4_mul(const QuadricClass& a, const QuadricClass& b);

// Intersection number of a product of pure-codimension classes; the
// codimensions must sum to 4, else CodimMismatch. A zero factor gives 0.
std::int64_t quadric4_integrate(const std::vector<QuadricClass>& factors);

} // namespace fano8
