// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the fano8 authors
#pragma once

#include <optional>

#include "fano8/ideal_ops.hpp"

namespace fano8 {

// Outcome of a Fedder-type F-splitting test at the irrelevant maximal ideal.
// When split, witness lies in (I^[p] : I) but outside m^[p]; both facts are
// re-verified by membership tests before returning.
struct FedderVerdict {
    bool split = false;
    std::optional<Polynomial> witness;
};

// Bracket power I^[q] = ({g^q}), q = p^e with e >= 1; independent of the
// generating set. Throws NotAPowerOfP otherwise.
Ideal frobenius_power(const Ideal& I, std::uint64_t q);

// True iff every term of f has some exponent >= p, i.e. f lies in the
// bracket power m^[p] of the irrelevant ideal (a monomial ideal).
bool in_bracket_m(const Polynomial& f);

// Fedder's criterion for a hypersurface: R/(f) is F-split at m iff
// f^{p-1} is not in m^[p]. f must be homogeneous, nonzero and in m.
FedderVerdict fedder_hypersurface(const Polynomial& f);

// Fedder's criterion in general: R/I is F-split at m iff
// (I^[p] : I) is not contained in m^[p]. I must be homogeneous and proper.
FedderVerdict fedder_general(const Ideal& I,
                             const GbBudget& budget = GbBudget::from_env());

} // namespace fano8
