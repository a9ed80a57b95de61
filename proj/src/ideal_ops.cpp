// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the fano8 authors
#include "fano8/ideal_ops.hpp"

#include <bit>
#include <string>

#include "gb_engine.hpp"

namespace fano8 {

namespace {

// R extended by a fresh auxiliary variable in front (index 0); the block(1)
// order then eliminates it.
Ring extend_ring_front(const Ring& R) {
    std::string tname = "t";
    for (int k = 0; R.index_of(tname) != Ring::npos; ++k)
        tname = "t" + std::to_string(k);
    std::vector<std::string> vars;
    vars.reserve(R.nvars() + 1);
    vars.push_back(tname);
    for (const auto& v : R.variables()) vars.push_back(v);
    return Ring(R.p(), std::move(vars));
}

Polynomial lift_front(const Polynomial& f, const Ring& Rt, std::uint16_t texp) {
    std::vector<Term> ts;
    ts.reserve(f.size());
    for (const auto& t : f.terms()) {
        Monomial m;
        m.reserve(t.mono.size() + 1);
        m.push_back(texp);
        m.insert(m.end(), t.mono.begin(), t.mono.end());
        ts.push_back({std::move(m), t.coeff});
    }
    return Polynomial(Rt, std::move(ts));
}

Polynomial drop_front(const Polynomial& f, const Ring& R) {
    std::vector<Term> ts;
    ts.reserve(f.size());
    for (const auto& t : f.terms())
        ts.push_back({Monomial(t.mono.begin() + 1, t.mono.end()), t.coeff});
    return Polynomial(R, std::move(ts));
}

bool free_of_first(const Polynomial& f, std::size_t k) {
    for (const auto& t : f.terms())
        for (std::size_t i = 0; i < k; ++i)
            if (t.mono[i] != 0) return false;
    return true;
}

// I cap (f) via  eliminate(t, < t.g_i, (1-t).f >)
Ideal intersect_principal(const Ideal& I, const Polynomial& f,
                          const GbBudget& budget) {
    const Ring& R = I.ring;
    Ring Rt = extend_ring_front(R);
    std::vector<Polynomial> gens;
    gens.reserve(I.generators.size() + 1);
    for (const auto& g : I.generators) gens.push_back(lift_front(g, Rt, 1));
    Polynomial ft0 = lift_front(f, Rt, 0);
    Polynomial ft1 = lift_front(f, Rt, 1);
    gens.push_back(ft0 - ft1); // (1 - t) f
    GroebnerBasis G = buchberger(Ideal(Rt, std::move(gens)),
                                 MonomialOrder::block(1), budget);
    std::vector<Polynomial> kept;
    for (const auto& g : G.basis)
        if (free_of_first(g, 1)) kept.push_back(drop_front(g, R));
    return Ideal(R, std::move(kept));
}

Ideal quotient_principal(const Ideal& I, const Polynomial& f,
                         const GbBudget& budget) {
    Ideal cap = intersect_principal(I, f, budget);
    std::vector<Polynomial> gens;
    gens.reserve(cap.generators.size());
    for (const auto& g : cap.generators) gens.push_back(divide_exact(g, f));
    return Ideal(I.ring, std::move(gens));
}

} // namespace

Ideal ideal_intersection(const Ideal& A, const Ideal& B, const GbBudget& budget) {
    if (!(A.ring == B.ring))
        throw RingMismatch("ideal intersection across different rings");
    const Ring& R = A.ring;
    if (A.is_zero() || B.is_zero()) return Ideal::zero(R);
    Ring Rt = extend_ring_front(R);
    std::vector<Polynomial> gens;
    gens.reserve(A.generators.size() + B.generators.size());
    for (const auto& g : A.generators) gens.push_back(lift_front(g, Rt, 1));
    for (const auto& g : B.generators)
        gens.push_back(lift_front(g, Rt, 0) - lift_front(g, Rt, 1));
    GroebnerBasis G = buchberger(Ideal(Rt, std::move(gens)),
                                 MonomialOrder::block(1), budget);
    std::vector<Polynomial> kept;
    for (const auto& g : G.basis)
        if (free_of_first(g, 1)) kept.push_back(drop_front(g, R));
    return Ideal(R, std::move(kept));
}

Ideal ideal_quotient(const Ideal& I, const Ideal& J, const GbBudget& budget) {
    if (!(I.ring == J.ring))
        throw RingMismatch("ideal quotient across different rings");
    if (J.is_zero()) throw Error("ideal quotient by the zero ideal");
    // reduced generators of I keep the per-generator eliminations small
    GroebnerBasis GI = buchberger(I, MonomialOrder::degrevlex(), budget);
    Ideal Ired(I.ring, GI.basis);
    bool first = true;
    Ideal acc = Ideal::zero(I.ring);
    for (const auto& f : J.generators) {
        Ideal Qf = quotient_principal(Ired, f, budget);
        acc = first ? std::move(Qf) : ideal_intersection(acc, Qf, budget);
        first = false;
    }
    return acc;
}

Ideal ideal_quotient(const Ideal& I, const Polynomial& f, const GbBudget& budget) {
    if (!(I.ring == f.ring()))
        throw RingMismatch("ideal quotient across different rings");
    if (f.is_zero()) throw Error("ideal quotient by the zero ideal");
    return quotient_principal(I, f, budget);
}

Ideal eliminate(const Ideal& I, std::size_t k, const GbBudget& budget) {
    if (k == 0 || k >= I.ring.nvars())
        throw Error("eliminate: variable count must satisfy 0 < k < nvars");
    GroebnerBasis G = buchberger(I, MonomialOrder::block(k), budget);
    std::vector<Polynomial> kept;
    for (const auto& g : G.basis)
        if (free_of_first(g, k)) kept.push_back(g);
    return Ideal(I.ring, std::move(kept));
}

Ideal saturation(const Ideal& I, const Ideal& J, const GbBudget& budget) {
    Ideal cur = I;
    for (int step = 0; step < 10000; ++step) {
        Ideal next = ideal_quotient(cur, J, budget);
        if (ideal_equal(next, cur, budget)) return cur;
        cur = std::move(next);
    }
    throw Error("saturation did not stabilize");
}

int krull_dimension(const Ideal& I, MonomialOrder ord, const GbBudget& budget) {
    const Ring& R = I.ring;
    std::size_t n = R.nvars();
    GroebnerBasis G = buchberger(I, ord, budget);
    if (G.is_unit()) throw UnitIdeal("Krull dimension of the zero ring");
    // support masks of the leading terms under the active order
    gbe::Cmp cmp(ord, n);
    std::vector<std::uint32_t> masks;
    masks.reserve(G.basis.size());
    for (const auto& g : G.basis) {
        gbe::EPoly e = gbe::to_engine(g, cmp);
        masks.push_back(e.front().m.mask);
    }
    // dim = largest |S| such that no leading term is supported inside S
    if (masks.empty()) return static_cast<int>(n);
    int best = 0;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        int pc = std::popcount(s);
        if (pc <= best) continue;
        bool ok = true;
        for (std::uint32_t m : masks)
            if ((m & ~s) == 0) { ok = false; break; }
        if (ok) best = pc;
    }
    return best;
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
    if (!(f.ring() == g.ring()))
        throw RingMismatch("exact division across different rings");
    if (g.is_zero()) throw Error("exact division by the zero polynomial");
    const Ring& R = f.ring();
    const PrimeField& F = R.field();
    const Term& gl = g.terms().front();
    std::uint32_t glc_inv = F.inv(gl.coeff);
    Polynomial r = f;
    std::vector<Term> q;
    while (!r.is_zero()) {
        const Term& rl = r.terms().front();
        if (!monomial_divides(gl.mono, rl.mono))
            throw Error("exact division failed: nonzero remainder");
        Monomial qm(rl.mono.size());
        for (std::size_t i = 0; i < qm.size(); ++i)
            qm[i] = static_cast<std::uint16_t>(rl.mono[i] - gl.mono[i]);
        std::uint32_t qc = F.mul(rl.coeff, glc_inv);
        q.push_back({qm, qc});
        r = r - Polynomial(R, {Term{std::move(qm), qc}}) * g;
    }
    return Polynomial(R, std::move(q));
}

bool ideal_equal(const Ideal& A, const Ideal& B, const GbBudget& budget) {
    if (!(A.ring == B.ring))
        throw RingMismatch("ideal comparison across different rings");
    GroebnerBasis GA = buchberger(A, MonomialOrder::degrevlex(), budget);
    GroebnerBasis GB = buchberger(B, MonomialOrder::degrevlex(), budget);
    return GA.basis == GB.basis;
}

} // namespace fano8
