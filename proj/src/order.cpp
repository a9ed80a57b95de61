// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the fano8 authors
#include "fano8/order.hpp"

namespace fano8 {

std::string MonomialOrder::name() const {
    switch (kind) {
        case Kind::degrevlex: return "degrevlex";
        case Kind::lex: return "lex";
        case Kind::block: return "block:" + std::to_string(elim);
    }
    return "?";
}

MonomialOrder MonomialOrder::parse(const std::string& text) {
    if (text == "degrevlex") return degrevlex();
    if (text == "lex") return lex();
    if (text.rfind("block:", 0) == 0) {
        try {
            return block(std::stoul(text.substr(6)));
        } catch (const std::logic_error&) {
        }
    }
    throw Error("unknown monomial order '" + text + "'");
}

namespace {

// degrevlex on the half-open variable range [lo, hi)
int cmp_degrevlex_range(const Monomial& a, const Monomial& b,
                        std::size_t lo, std::size_t hi) {
    std::uint32_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) { da += a[i]; db += b[i]; }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = hi; i-- > lo;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

int cmp_lex(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

} // namespace

bool monomial_less(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
    if (a.size() != b.size()) throw Error("monomial width mismatch");
    switch (ord.kind) {
        case MonomialOrder::Kind::degrevlex:
            return cmp_degrevlex_range(a, b, 0, a.size()) < 0;
        case MonomialOrder::Kind::lex:
            return cmp_lex(a, b) < 0;
        case MonomialOrder::Kind::block: {
            std::size_t k = ord.elim;
            if (k == 0 || k >= a.size())
                throw Error("block order: elimination count out of range");
            int c = cmp_degrevlex_range(a, b, 0, k);
            if (c != 0) return c < 0;
            return cmp_degrevlex_range(a, b, k, a.size()) < 0;
        }
    }
    return false;
}

} // namespace fano8
