// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the fano8 authors
#include "fano8/groebner.hpp"

#include <cstdlib>

#include "gb_engine.hpp"

namespace fano8 {

Ideal::Ideal(Ring R, std::vector<Polynomial> gens) : ring(std::move(R)) {
    generators.reserve(gens.size());
    for (auto& g : gens) {
        if (!(g.ring() == ring))
            throw RingMismatch("ideal generator lives in a different ring");
        if (!g.is_zero()) generators.push_back(std::move(g));
    }
}

GbBudget GbBudget::from_env() {
    GbBudget b;
    if (const char* s = std::getenv("FANO8_GB_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end != s && *end == '\0' && v > 0)
            b.max_pairs = static_cast<std::uint64_t>(v);
    }
    return b;
}

bool GroebnerBasis::is_unit() const {
    return basis.size() == 1 && basis.front().degree() == 0;
}

GroebnerBasis buchberger(const Ideal& I, MonomialOrder ord, const GbBudget& budget) {
    gbe::Cmp cmp(ord, I.ring.nvars());
    std::vector<gbe::EPoly> gens;
    gens.reserve(I.generators.size());
    for (const auto& g : I.generators) gens.push_back(gbe::to_engine(g, cmp));
    gbe::Budget b(budget);
    auto res = gbe::reduced_groebner(std::move(gens), cmp, I.ring.field(), b);
    GroebnerBasis G{ord, {}};
    G.basis.reserve(res.size());
    for (const auto& f : res) G.basis.push_back(gbe::from_engine(f, I.ring));
    return G;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
    if (G.basis.empty() || f.is_zero()) return f;
    const Ring& R = G.basis.front().ring();
    if (!(f.ring() == R))
        throw RingMismatch("normal form of a polynomial from a different ring");
    gbe::Cmp cmp(G.order, R.nvars());
    std::vector<gbe::BasisElem> basis;
    basis.reserve(G.basis.size());
    for (const auto& g : G.basis) {
        gbe::EPoly e = gbe::to_engine(g, cmp);
        gbe::make_monic(e, R.field());
        gbe::PM lt = e.front().m;
        basis.push_back({std::move(e), lt, false});
    }
    auto r = gbe::normal_form(gbe::to_engine(f, cmp), basis, cmp, R.field());
    return gbe::from_engine(r, R);
}

bool ideal_membership(const Polynomial& f, const Ideal& I, MonomialOrder ord,
                      const GbBudget& budget) {
    if (f.is_zero()) return true;
    return normal_form(f, buchberger(I, ord, budget)).is_zero();
}

} // namespace fano8
