// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the fano8 authors
#include "fano8/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "fano8/error.hpp"

namespace fano8 {

BlowupInvariants blowup_curve(std::int64_t kcube_x, std::int64_t d, std::int64_t g) {
    return {kcube_x - 2 * d + 2 * g - 2, d - 2 * g + 2, 2 * g - 2, -d - 2 * g + 2};
}

std::int64_t blowup_point(std::int64_t g) {
    if (g < 5) throw Error("point blowup formula requires genus >= 5");
    return 2 * g - 10;
}

std::int64_t delta_genus(std::int64_t dim, std::int64_t A3, std::int64_t h0) {
    return dim + A3 - h0;
}

std::int64_t weyl_h0(std::int64_t k) {
    if (k < 0) throw Error("weyl_h0 requires k >= 0");
    // lambda = (k, k, 0, 0, 0, 0); dim = prod_{i<j} (l_i - l_j + j - i)/(j - i)
    const std::int64_t lam[6] = {k, k, 0, 0, 0, 0};
    __int128 num = 1, den = 1;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            num *= lam[i] - lam[j] + (j - i);
            den *= j - i;
            // keep the intermediate values small
            __int128 a = num < 0 ? -num : num, b = den < 0 ? -den : den;
            while (b) { __int128 t = a % b; a = b; b = t; }
            if (a > 1) { num /= a; den /= a; }
        }
    if (den != 1 && num % den != 0)
        throw Error("internal: Weyl dimension is not integral");
    __int128 v = num / den;
    if (v > INT64_MAX) throw ResourceLimit("weyl_h0 overflow");
    return static_cast<std::int64_t>(v);
}

namespace {

void push_sorted(std::vector<TwoRaySolution>& out, TwoRaySolution s) {
    out.push_back(s);
}

std::vector<std::int64_t> positive_divisors(std::int64_t n) {
    std::vector<std::int64_t> d;
    std::int64_t a = n < 0 ? -n : n;
    for (std::int64_t i = 1; i * i <= a; ++i) {
        if (a % i != 0) continue;
        d.push_back(i);
        if (i != a / i) d.push_back(a / i);
    }
    std::sort(d.begin(), d.end());
    return d;
}

} // namespace

std::vector<TwoRaySolution> tworay_solutions(std::int64_t kcube, std::int64_t k2e,
                                             std::int64_t ke2, std::int64_t target,
                                             TwoRayMode mode) {
    std::vector<TwoRaySolution> out;

    if (mode == TwoRayMode::divisorial) {
        // kcube a = k2e b with a >= 1, b in {1, 2}
        for (std::int64_t b = 1; b <= 2; ++b) {
            std::int64_t rhs = k2e * b;
            if (kcube == 0) {
                if (rhs == 0)
                    throw std::invalid_argument("unbounded solution family");
                continue;
            }
            if (rhs % kcube != 0) continue;
            std::int64_t a = rhs / kcube;
            if (a >= 1) push_sorted(out, {a, b});
        }
        return out;
    }

    // flop: kcube g^2 - 2 k2e g b + ke2 b^2 = target
    if (ke2 == 0) {
        // g (kcube g - 2 k2e b) = target, so g must divide the target.
        // This divisor enumeration is complete: no bound heuristics needed.
        if (target == 0) {
            // kcube g = 2 k2e b on the ray g >= 2, b >= 1
            if (kcube == 0 && k2e == 0)
                throw std::invalid_argument("unbounded solution family");
            if (k2e != 0 && kcube != 0 && (kcube > 0) == (k2e > 0))
                throw std::invalid_argument("unbounded solution family");
            return out; // opposite signs or one side zero: empty
        }
        for (std::int64_t g : positive_divisors(target)) {
            if (g < 2) continue;
            std::int64_t rem = kcube * g - target / g; // equals 2 k2e b
            if (k2e == 0) {
                if (rem == 0)
                    throw std::invalid_argument("unbounded solution family");
                continue;
            }
            if (rem % (2 * k2e) != 0) continue;
            std::int64_t b = rem / (2 * k2e);
            if (b >= 1) push_sorted(out, {g, b});
        }
        return out;
    }

    // ke2 != 0: treat the quadratic form Q(g,b) = kcube g^2 - 2 k2e g b + ke2 b^2
    std::int64_t det = kcube * ke2 - k2e * k2e;
    std::int64_t sgn = (kcube > 0 || (kcube == 0 && ke2 > 0)) ? 1 : -1;
    if (det > 0 && sgn * kcube > 0 && sgn * ke2 > 0) {
        // definite form: |Q| >= lambda_min (g^2 + b^2) and
        // lambda_min >= det / trace for a 2x2 symmetric matrix, giving the
        // complete bound g^2 + b^2 <= |target| (|kcube| + |ke2|) / det
        std::int64_t st = sgn * target;
        if (st < 0) return out;
        long double bound2 =
            static_cast<long double>(st) *
            (std::llabs(kcube) + std::llabs(ke2)) / static_cast<long double>(det);
        std::int64_t B = static_cast<std::int64_t>(std::sqrt(bound2)) + 2;
        for (std::int64_t g = 2; g <= B; ++g)
            for (std::int64_t b = 1; b <= B; ++b)
                if (kcube * g * g - 2 * k2e * g * b + ke2 * b * b == target)
                    push_sorted(out, {g, b});
        return out;
    }

    // indefinite or degenerate form: scan the documented generic window
    // |target| + |kcube| + 2|k2e| (+ |ke2|); this is a heuristic search
    // range, not a completeness proof, and callers relying on exhaustiveness
    // should stay in the divisor or definite regimes above
    std::int64_t B = std::llabs(target) + std::llabs(kcube) + 2 * std::llabs(k2e) +
                     std::llabs(ke2);
    for (std::int64_t g = 2; g <= B; ++g)
        for (std::int64_t b = 1; b <= B; ++b)
            if (kcube * g * g - 2 * k2e * g * b + ke2 * b * b == target)
                push_sorted(out, {g, b});
    return out;
}

} // namespace fano8
