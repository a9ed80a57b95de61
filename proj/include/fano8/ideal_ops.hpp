// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the fano8 authors
#pragma once

#include "fano8/groebner.hpp"

namespace fano8 {

// (I : J) = {f | f.J in I}, as the intersection over generators f of J of
// (I : f); each (I : f) via the auxiliary-variable trick
//   I cap (f) = eliminate(t, ideal(t.g for g in I, (1-t).f))
// followed by exact division by f. J must be nonzero.
Ideal ideal_quotient(const Ideal& I, const Ideal& J,
                     const GbBudget& budget = GbBudget::from_env());

// (I : f) for a single nonzero polynomial.
Ideal ideal_quotient(const Ideal& I, const Polynomial& f,
                     const GbBudget& budget = GbBudget::from_env());

Ideal ideal_intersection(const Ideal& A, const Ideal& B,
                         const GbBudget& budget = GbBudget::from_env());

// Generators of I cap F_p[x_k, ..., x_{n-1}] (the first k variables
// eliminated), returned in the same ring. Requires 0 < k < nvars.
Ideal eliminate(const Ideal& I, std::size_t k,
                const GbBudget& budget = GbBudget::from_env());

// (I : J^inf), iterating ideal_quotient until the reduced basis stabilizes.
Ideal saturation(const Ideal& I, const Ideal& J,
                 const GbBudget& budget = GbBudget::from_env());

// Krull dimension of R/I: the maximum size of a variable subset S such that
// no leading monomial of the reduced basis is supported inside S. The
// documented contract fixes degrevlex. Throws UnitIdeal if 1 in I.
int krull_dimension(const Ideal& I,
                    MonomialOrder ord = MonomialOrder::degrevlex(),
                    const GbBudget& budget = GbBudget::from_env());

// Exact division f / g; throws Error if g does not divide f.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

// Equality of ideals via reduced degrevlex bases.
bool ideal_equal(const Ideal& A, const Ideal& B,
                 const GbBudget& budget = GbBudget::from_env());

} // namespace fano8
