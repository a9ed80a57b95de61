// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the fano8 authors
#pragma once

#include <cstddef>
#include <string>

#include "fano8/poly.hpp"

namespace fano8 {

// Monomial orders: degrevlex (default), lex, and the elimination block order
// block(k) which compares the first k variables (by degrevlex) before the
// remaining ones (by degrevlex). All are multiplicative well-orders.
struct MonomialOrder {
    enum class Kind { degrevlex, lex, block };
    Kind kind = Kind::degrevlex;
    std::size_t elim = 0; // block only: number of leading variables

    static MonomialOrder degrevlex() { return {Kind::degrevlex, 0}; }
    static MonomialOrder lex() { return {Kind::lex, 0}; }
    static MonomialOrder block(std::size_t k) { return {Kind::block, k}; }

    bool operator==(const MonomialOrder& o) const {
        return kind == o.kind && (kind != Kind::block || elim == o.elim);
    }

    std::string name() const;
    // "degrevlex" | "lex" | "block:<k>"
    static MonomialOrder parse(const std::string& text);
};

// Reference comparator on exponent vectors (strict less-than).
bool monomial_less(const Monomial& a, const Monomial& b, const MonomialOrder& ord);

} // namespace fano8
