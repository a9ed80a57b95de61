// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the fano8 authors
#include "fano8/smooth.hpp"

#include <string>

namespace fano8 {

Ideal jacobian_ideal(const Polynomial& f) {
    if (f.is_zero()) throw Error("jacobian_ideal of the zero polynomial");
    const Ring& R = f.ring();
    std::vector<Polynomial> gens;
    gens.reserve(R.nvars() + 1);
    gens.push_back(f);
    for (std::size_t i = 0; i < R.nvars(); ++i) gens.push_back(derivative(f, i));
    return Ideal(R, std::move(gens));
}

bool is_smooth_hypersurface(const Polynomial& f, const GbBudget& budget) {
    if (f.is_zero() || f.degree() < 1)
        throw Error("smoothness test requires degree >= 1");
    if (!f.is_homogeneous())
        throw NotHomogeneous("smoothness test requires a homogeneous polynomial");
    const Ring& R = f.ring();
    std::vector<Polynomial> mgens;
    mgens.reserve(R.nvars());
    for (std::size_t i = 0; i < R.nvars(); ++i)
        mgens.push_back(Polynomial::variable(R, i));
    Ideal sat = saturation(jacobian_ideal(f), Ideal(R, std::move(mgens)), budget);
    return buchberger(sat, MonomialOrder::degrevlex(), budget).is_unit();
}

std::vector<ProjectivePoint> find_rational_points(const Ideal& I,
                                                  std::uint64_t max_points) {
    const Ring& R = I.ring;
    const std::size_t n = R.nvars();
    const std::uint32_t p = R.p();
    if (n == 0) throw Error("point scan requires at least one variable");

    // |P^{n-1}(F_p)| = 1 + p + ... + p^{n-1}
    std::uint64_t total = 0, power = 1;
    for (std::size_t k = 0; k < n; ++k) {
        total += power;
        if (total > max_points || power > max_points)
            throw ScanBudgetExceeded("projective point scan over " +
                                     std::to_string(p) + "^" + std::to_string(n) +
                                     " exceeds the budget");
        if (k + 1 < n) power *= p;
    }

    std::vector<ProjectivePoint> found;
    ProjectivePoint pt(n, 0);
    // first nonzero coordinate = 1 at position k; free coordinates after it
    // run lexicographically, and k descends so the whole output is sorted
    for (std::size_t k = n; k-- > 0;) {
        std::fill(pt.begin(), pt.end(), 0);
        pt[k] = 1;
        bool done = false;
        while (!done) {
            bool zero = true;
            for (const auto& g : I.generators)
                if (evaluate(g, pt) != 0) { zero = false; break; }
            if (zero) found.push_back(pt);
            // odometer over the free coordinates k+1..n-1, last varies fastest
            done = true;
            for (std::size_t i = n; i-- > k + 1;) {
                if (++pt[i] < p) { done = false; break; }
                pt[i] = 0;
            }
        }
    }
    return found;
}

} // namespace fano8
