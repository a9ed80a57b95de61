// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the fano8 authors
#include "fano8/frobenius.hpp"

namespace fano8 {

Ideal frobenius_power(const Ideal& I, std::uint64_t q) {
    const std::uint32_t p = I.ring.p();
    std::uint64_t r = q;
    if (r < p) throw NotAPowerOfP();
    while (r > 1) {
        if (r % p != 0) throw NotAPowerOfP();
        r /= p;
    }
    // Frobenius is additive and fixes F_p, so g^q just scales each exponent
    std::vector<Polynomial> gens;
    gens.reserve(I.generators.size());
    for (const auto& g : I.generators) {
        std::vector<Term> ts;
        ts.reserve(g.size());
        for (const auto& t : g.terms()) {
            Monomial m(t.mono.size());
            for (std::size_t i = 0; i < m.size(); ++i) {
                std::uint64_t e = static_cast<std::uint64_t>(t.mono[i]) * q;
                if (e > 0xffff)
                    throw ResourceLimit("bracket power exponent overflow");
                m[i] = static_cast<std::uint16_t>(e);
            }
            ts.push_back({std::move(m), t.coeff});
        }
        gens.push_back(Polynomial(I.ring, std::move(ts)));
    }
    return Ideal(I.ring, std::move(gens));
}

bool in_bracket_m(const Polynomial& f) {
    const std::uint32_t p = f.ring().p();
    for (const auto& t : f.terms()) {
        bool some_ge_p = false;
        for (auto e : t.mono)
            if (e >= p) { some_ge_p = true; break; }
        if (!some_ge_p) return false;
    }
    return true;
}

FedderVerdict fedder_hypersurface(const Polynomial& f) {
    if (f.is_zero()) throw Error("Fedder test on the zero polynomial");
    if (!f.is_homogeneous())
        throw NotHomogeneous("Fedder test requires a homogeneous polynomial");
    if (f.degree() < 1)
        throw Error("Fedder test requires a polynomial in the irrelevant ideal");
    const std::uint32_t p = f.ring().p();
    Polynomial g = f.pow(p - 1);
    if (in_bracket_m(g)) return FedderVerdict{false, std::nullopt};
    return FedderVerdict{true, std::move(g)};
}

namespace {

bool generators_in_bracket_m(const Ideal& I) {
    for (const auto& g : I.generators)
        if (!in_bracket_m(g)) return false;
    return true;
}

} // namespace

FedderVerdict fedder_general(const Ideal& I, const GbBudget& budget) {
    const Ring& R = I.ring;
    // the zero ideal: C = (0 : 0) = (1), and 1 is outside m^[p]
    if (I.is_zero())
        return FedderVerdict{true, Polynomial::constant(R, 1)};
    for (const auto& g : I.generators)
        if (!g.is_homogeneous())
            throw NotHomogeneous("Fedder test requires a homogeneous ideal");

    // reduced generators make the verdict independent of the input basis
    GroebnerBasis GI = buchberger(I, MonomialOrder::degrevlex(), budget);
    if (GI.is_unit()) throw UnitIdeal("Fedder test requires a proper ideal");
    Ideal Ired(R, GI.basis);
    Ideal Ip = frobenius_power(Ired, R.p());
    GroebnerBasis GIp = buchberger(Ip, MonomialOrder::degrevlex(), budget);
    Ideal Ipred(R, GIp.basis);

    // C = (I^[p] : I) as the intersection of the per-generator quotients;
    // any factor (or partial intersection) inside m^[p] already forces
    // C inside m^[p], so the test can stop early
    bool first = true;
    Ideal acc = Ideal::zero(R);
    for (const auto& g : Ired.generators) {
        Ideal Qg = ideal_quotient(Ipred, g, budget);
        if (generators_in_bracket_m(Qg)) return FedderVerdict{false, std::nullopt};
        acc = first ? std::move(Qg) : ideal_intersection(acc, Qg, budget);
        first = false;
        if (generators_in_bracket_m(acc)) return FedderVerdict{false, std::nullopt};
    }

    const Polynomial* witness = nullptr;
    for (const auto& g : acc.generators)
        if (!in_bracket_m(g)) { witness = &g; break; }
    if (witness == nullptr) return FedderVerdict{false, std::nullopt};

    // re-verify the witness: w * g in I^[p] for every generator g of I
    for (const auto& g : Ired.generators)
        if (!normal_form(*witness * g, GIp).is_zero())
            throw Error("internal: Fedder witness failed re-verification");
    return FedderVerdict{true, *witness};
}

} // namespace fano8
