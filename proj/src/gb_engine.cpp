// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the fano8 authors
#include "gb_engine.hpp"

#include <algorithm>
#include <bit>
#include <queue>

namespace fano8::gbe {

namespace {

std::uint32_t byte_sum(std::uint64_t x) {
    x = (x & 0x00ff00ff00ff00ffull) + ((x >> 8) & 0x00ff00ff00ff00ffull);
    x = (x & 0x0000ffff0000ffffull) + ((x >> 16) & 0x0000ffff0000ffffull);
    return static_cast<std::uint32_t>((x & 0xffffffffull) + (x >> 32));
}

inline void set_byte(std::uint64_t& w, std::size_t lane, std::uint32_t v) {
    int sh = static_cast<int>((7 - lane) * 8);
    w = (w & ~(0xffull << sh)) | (static_cast<std::uint64_t>(v) << sh);
}

// lane-wise max via the borrow-free >= trick (lanes <= 127)
std::uint64_t byte_max(std::uint64_t a, std::uint64_t b) {
    std::uint64_t ge = ((((a | kHigh) - b) & kHigh) >> 7) * 0xff;
    return (a & ge) | (b & ~ge);
}

// least significant differing byte decides; larger exponent there means
// smaller monomial (revlex). Returns 0 if the masked words agree.
int revlex_word(std::uint64_t aw, std::uint64_t bw, std::uint64_t m) {
    std::uint64_t x = (aw ^ bw) & m;
    if (x == 0) return 0;
    int sh = std::countr_zero(x) & ~7;
    std::uint32_t av = static_cast<std::uint32_t>((aw >> sh) & 0xff);
    std::uint32_t bv = static_cast<std::uint32_t>((bw >> sh) & 0xff);
    return av > bv ? -1 : 1;
}

} // namespace

PM pm_pack(const Monomial& m) {
    if (m.size() > kMaxVars)
        throw ResourceLimit("Groebner engine supports at most 16 variables, got " +
                            std::to_string(m.size()));
    PM r;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] > kMaxExp)
            throw ResourceLimit("Groebner engine supports exponents up to 127");
        if (m[i] == 0) continue;
        if (i < 8) set_byte(r.w0, i, m[i]);
        else set_byte(r.w1, i - 8, m[i]);
        r.deg += m[i];
        r.mask |= 1u << i;
    }
    return r;
}

Monomial pm_unpack(const PM& m, std::size_t nvars) {
    Monomial r(nvars, 0);
    for (std::size_t i = 0; i < nvars; ++i)
        r[i] = static_cast<std::uint16_t>(pm_exp(m, i));
    return r;
}

PM pm_mul(const PM& a, const PM& b) {
    PM r;
    r.w0 = a.w0 + b.w0;
    r.w1 = a.w1 + b.w1;
    if (((r.w0 | r.w1) & kHigh) != 0)
        throw ResourceLimit("monomial exponent overflow in product");
    r.deg = a.deg + b.deg;
    r.mask = a.mask | b.mask;
    return r;
}

PM pm_div(const PM& a, const PM& b) {
    PM r;
    r.w0 = a.w0 - b.w0;
    r.w1 = a.w1 - b.w1;
    r.deg = a.deg - b.deg;
    r.mask = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (pm_exp(r, i) != 0) r.mask |= 1u << i;
    return r;
}

PM pm_lcm(const PM& a, const PM& b) {
    PM r;
    r.w0 = byte_max(a.w0, b.w0);
    r.w1 = byte_max(a.w1, b.w1);
    r.deg = byte_sum(r.w0) + byte_sum(r.w1);
    r.mask = a.mask | b.mask;
    return r;
}

Cmp::Cmp(MonomialOrder o, std::size_t nv) : ord(o), nvars(nv) {
    if (ord.kind == MonomialOrder::Kind::block) {
        if (ord.elim == 0 || ord.elim >= nvars)
            throw Error("block order: elimination count out of range");
        for (std::size_t i = 0; i < ord.elim && i < 8; ++i)
            bm0 |= 0xffull << ((7 - i) * 8);
        for (std::size_t i = 8; i < ord.elim; ++i)
            bm1 |= 0xffull << ((7 - (i - 8)) * 8);
    }
}

int Cmp::cmp(const PM& a, const PM& b) const {
    switch (ord.kind) {
        case MonomialOrder::Kind::degrevlex: {
            if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
            if (int c = revlex_word(a.w1, b.w1, ~0ull)) return c;
            return revlex_word(a.w0, b.w0, ~0ull);
        }
        case MonomialOrder::Kind::lex: {
            if (a.w0 != b.w0) return a.w0 < b.w0 ? -1 : 1;
            if (a.w1 != b.w1) return a.w1 < b.w1 ? -1 : 1;
            return 0;
        }
        case MonomialOrder::Kind::block: {
            std::uint32_t d1a = byte_sum(a.w0 & bm0) + byte_sum(a.w1 & bm1);
            std::uint32_t d1b = byte_sum(b.w0 & bm0) + byte_sum(b.w1 & bm1);
            if (d1a != d1b) return d1a < d1b ? -1 : 1;
            if (int c = revlex_word(a.w1, b.w1, bm1)) return c;
            if (int c = revlex_word(a.w0, b.w0, bm0)) return c;
            std::uint32_t d2a = a.deg - d1a, d2b = b.deg - d1b;
            if (d2a != d2b) return d2a < d2b ? -1 : 1;
            if (int c = revlex_word(a.w1, b.w1, ~bm1)) return c;
            return revlex_word(a.w0, b.w0, ~bm0);
        }
    }
    return 0;
}

EPoly to_engine(const Polynomial& f, const Cmp& cmp) {
    EPoly r;
    r.reserve(f.size());
    for (const auto& t : f.terms()) r.push_back({pm_pack(t.mono), t.coeff});
    std::sort(r.begin(), r.end(),
              [&](const ETerm& x, const ETerm& y) { return cmp.cmp(x.m, y.m) > 0; });
    return r;
}

Polynomial from_engine(const EPoly& f, const Ring& R) {
    std::vector<Term> ts;
    ts.reserve(f.size());
    for (const auto& t : f) ts.push_back({pm_unpack(t.m, R.nvars()), t.c});
    return Polynomial(R, std::move(ts));
}

void Budget::count_pair() {
    if (++pairs > max_pairs)
        throw ResourceLimit("Groebner pair budget exceeded (" +
                            std::to_string(max_pairs) + " S-pairs)");
    if (wall_ms != 0 && (pairs & 0xff) == 0) {
        auto el = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        if (static_cast<std::uint64_t>(el) > wall_ms)
            throw ResourceLimit("Groebner wall-clock budget exceeded");
    }
}

void Budget::check_basis(std::size_t n) const {
    if (n > max_basis)
        throw ResourceLimit("Groebner basis size budget exceeded");
}

std::vector<ETerm> Geobucket::merge(std::vector<ETerm>& a, std::vector<ETerm>& b) const {
    std::vector<ETerm> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        int c = cmp_->cmp(a[i].m, b[j].m);
        if (c == 0) {
            std::uint32_t s = F_->add(a[i].c, b[j].c);
            if (s != 0) out.push_back({a[i].m, s});
            ++i; ++j;
        } else if (c < 0) {
            out.push_back(a[i++]);
        } else {
            out.push_back(b[j++]);
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return out;
}

void Geobucket::place(std::vector<ETerm>&& g) {
    std::size_t i = 0;
    while (cap(i) < g.size()) ++i;
    for (;;) {
        if (buckets_.size() <= i) {
            buckets_.resize(i + 1);
            buckets_[i] = std::move(g);
            return;
        }
        if (buckets_[i].empty()) {
            buckets_[i] = std::move(g);
            return;
        }
        g = merge(buckets_[i], g);
        buckets_[i].clear();
        if (g.size() <= cap(i)) {
            buckets_[i] = std::move(g);
            return;
        }
        ++i;
    }
}

void Geobucket::add_poly(const EPoly& g, std::size_t from, const PM* shift,
                         std::uint32_t scale) {
    if (from >= g.size()) return;
    std::vector<ETerm> tmp;
    tmp.reserve(g.size() - from);
    for (std::size_t i = g.size(); i-- > from;) { // ascending order
        std::uint32_t c = F_->mul(g[i].c, scale);
        tmp.push_back({shift ? pm_mul(g[i].m, *shift) : g[i].m, c});
    }
    place(std::move(tmp));
}

bool Geobucket::pop_leading(ETerm& out) {
    for (;;) {
        int best = -1;
        for (std::size_t i = 0; i < buckets_.size(); ++i) {
            if (buckets_[i].empty()) continue;
            if (best < 0 || cmp_->cmp(buckets_[i].back().m,
                                      buckets_[best].back().m) > 0)
                best = static_cast<int>(i);
        }
        if (best < 0) return false;
        PM m = buckets_[best].back().m;
        std::uint32_t c = 0;
        for (auto& b : buckets_) {
            if (!b.empty() && b.back().m == m) {
                c = F_->add(c, b.back().c);
                b.pop_back();
            }
        }
        if (c != 0) {
            out = {m, c};
            return true;
        }
    }
}

void make_monic(EPoly& f, const PrimeField& F) {
    if (f.empty() || f[0].c == 1) return;
    std::uint32_t inv = F.inv(f[0].c);
    for (auto& t : f) t.c = F.mul(t.c, inv);
}

EPoly normal_form_bucket(Geobucket& bucket, const std::vector<BasisElem>& basis,
                         const Cmp& cmp, const PrimeField& F) {
    (void)cmp;
    EPoly out;
    ETerm t;
    while (bucket.pop_leading(t)) {
        const BasisElem* red = nullptr;
        for (const auto& be : basis) {
            if (be.redundant) continue;
            if (pm_divides(be.lt, t.m)) { red = &be; break; }
        }
        if (red == nullptr) {
            out.push_back(t);
            continue;
        }
        PM shift = pm_div(t.m, red->lt);
        bucket.add_poly(red->p, 1, &shift, F.neg(t.c));
    }
    return out;
}

EPoly normal_form(const EPoly& f, const std::vector<BasisElem>& basis,
                  const Cmp& cmp, const PrimeField& F) {
    Geobucket bucket(cmp, F);
    bucket.add_poly(f, 0, nullptr, 1 % F.p());
    return normal_form_bucket(bucket, basis, cmp, F);
}

namespace {

struct Pair {
    PM l;
    std::uint32_t i, j;
};

struct PairOrder {
    const Cmp* cmp;
    // min-heap: the pair with the smallest lcm (normal strategy) on top
    bool operator()(const Pair& a, const Pair& b) const {
        int c = cmp->cmp(a.l, b.l);
        if (c != 0) return c > 0;
        if (a.i != b.i) return a.i > b.i;
        return a.j > b.j;
    }
};

using PairQueue = std::priority_queue<Pair, std::vector<Pair>, PairOrder>;

// Gebauer-Moeller update: build the new pairs (idx, old) applying the
// multiple and coprime criteria; the chain criterion on old pairs is applied
// lazily at pop time.
void update_pairs(std::vector<BasisElem>& basis, std::uint32_t idx,
                  PairQueue& queue) {
    const PM& lt = basis[idx].lt;
    struct Cand { PM l; std::uint32_t i; bool coprime; };
    std::vector<Cand> cand, kept;
    for (std::uint32_t i = 0; i < idx; ++i) {
        if (basis[i].redundant) continue;
        cand.push_back({pm_lcm(lt, basis[i].lt), i, pm_coprime(lt, basis[i].lt)});
    }
    for (std::size_t a = 0; a < cand.size(); ++a) {
        bool keep = cand[a].coprime;
        if (!keep) {
            bool dominated = false;
            for (std::size_t b = a + 1; b < cand.size() && !dominated; ++b)
                if (pm_divides(cand[b].l, cand[a].l)) dominated = true;
            for (std::size_t b = 0; b < kept.size() && !dominated; ++b)
                if (pm_divides(kept[b].l, cand[a].l)) dominated = true;
            keep = !dominated;
        }
        if (keep) kept.push_back(cand[a]);
    }
    for (const auto& c : kept)
        if (!c.coprime) queue.push(Pair{c.l, c.i, idx});
    for (std::uint32_t i = 0; i < idx; ++i)
        if (!basis[i].redundant && pm_divides(lt, basis[i].lt))
            basis[i].redundant = true;
}

// interreduce a raw generator list (full normal forms, until stable)
void interreduce(std::vector<EPoly>& gens, const Cmp& cmp, const PrimeField& F) {
    for (int pass = 0;; ++pass) {
        if (pass > 1000) throw Error("interreduction did not stabilize");
        bool changed = false;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            std::vector<BasisElem> others;
            for (std::size_t j = 0; j < gens.size(); ++j)
                if (j != i && !gens[j].empty())
                    others.push_back({gens[j], gens[j][0].m, false});
            if (gens[i].empty()) continue;
            EPoly h = normal_form(gens[i], others, cmp, F);
            make_monic(h, F);
            if (h != gens[i]) {
                gens[i] = std::move(h);
                changed = true;
            }
        }
        std::erase_if(gens, [](const EPoly& g) { return g.empty(); });
        if (!changed) return;
    }
}

} // namespace

std::vector<EPoly> reduced_groebner(std::vector<EPoly> gens, const Cmp& cmp,
                                    const PrimeField& F, Budget& budget) {
    std::erase_if(gens, [](const EPoly& g) { return g.empty(); });
    for (auto& g : gens) make_monic(g, F);
    interreduce(gens, cmp, F);

    std::vector<BasisElem> basis;
    PairQueue queue{PairOrder{&cmp}};
    for (auto& g : gens) {
        PM lt = g[0].m;
        basis.push_back({std::move(g), lt, false});
        update_pairs(basis, static_cast<std::uint32_t>(basis.size() - 1), queue);
    }

    Geobucket bucket(cmp, F);
    while (!queue.empty()) {
        Pair pr = queue.top();
        queue.pop();
        // lazy chain criterion: an element added after this pair whose leading
        // term divides the lcm (with both mixed lcms proper) makes it redundant
        bool chained = false;
        for (std::size_t t = std::max(pr.i, pr.j) + 1; t < basis.size() && !chained; ++t) {
            if (!pm_divides(basis[t].lt, pr.l)) continue;
            if (pm_lcm(basis[pr.i].lt, basis[t].lt) != pr.l &&
                pm_lcm(basis[pr.j].lt, basis[t].lt) != pr.l)
                chained = true;
        }
        if (chained) continue;
        budget.count_pair();

        const BasisElem& fi = basis[pr.i];
        const BasisElem& fj = basis[pr.j];
        PM ui = pm_div(pr.l, fi.lt);
        PM uj = pm_div(pr.l, fj.lt);
        bucket.clear();
        bucket.add_poly(fi.p, 0, &ui, 1 % F.p());
        bucket.add_poly(fj.p, 0, &uj, F.neg(1 % F.p()));
        EPoly h = normal_form_bucket(bucket, basis, cmp, F);
        if (h.empty()) continue;
        make_monic(h, F);
        PM lt = h[0].m;
        basis.push_back({std::move(h), lt, false});
        budget.check_basis(basis.size());
        update_pairs(basis, static_cast<std::uint32_t>(basis.size() - 1), queue);
    }

    // minimal generators: survivors have pairwise indivisible leading terms
    std::vector<BasisElem> kept;
    for (auto& be : basis)
        if (!be.redundant) kept.push_back(std::move(be));

    // full tail reduction (leading terms are stable, one pass suffices)
    for (std::size_t i = 0; i < kept.size(); ++i) {
        kept[i].redundant = true; // exclude self
        EPoly h = normal_form(kept[i].p, kept, cmp, F);
        make_monic(h, F);
        kept[i].p = std::move(h);
        kept[i].lt = kept[i].p[0].m;
        kept[i].redundant = false;
    }

    std::sort(kept.begin(), kept.end(), [&](const BasisElem& x, const BasisElem& y) {
        return cmp.cmp(x.lt, y.lt) < 0;
    });
    std::vector<EPoly> out;
    out.reserve(kept.size());
    for (auto& be : kept) out.push_back(std::move(be.p));
    return out;
}

} // namespace fano8::gbe
