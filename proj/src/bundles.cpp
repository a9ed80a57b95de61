// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the fano8 authors
#include "fano8/bundles.hpp"

#include <map>

#include "fano8/error.hpp"

namespace fano8 {

namespace {

// dense-exponent integer polynomial in the formal Chern roots
using RootMono = std::vector<int>;
using RootPoly = std::map<RootMono, std::int64_t>;

void rp_add(RootPoly& p, const RootMono& m, std::int64_t c) {
    auto [it, fresh] = p.emplace(m, c);
    if (!fresh && (it->second += c) == 0) p.erase(it);
}

RootPoly rp_mul(const RootPoly& a, const RootPoly& b) {
    RootPoly out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            RootMono m(ma.size());
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            rp_add(out, m, ca * cb);
        }
    return out;
}

// elementary symmetric polynomials e_1..e_top of the given linear forms,
// by the usual product DP
std::vector<RootPoly> elementary_of(const std::vector<RootPoly>& forms,
                                    std::size_t top, std::size_t nvars) {
    std::vector<RootPoly> E(top + 1);
    E[0] = RootPoly{{RootMono(nvars, 0), 1}};
    for (const auto& L : forms)
        for (std::size_t d = std::min(top, forms.size()); d >= 1; --d) {
            RootPoly t = rp_mul(E[d - 1], L);
            for (const auto& [m, c] : t) rp_add(E[d], m, c);
        }
    return E;
}

// expression in the elementary symmetric basis: exponent vector over e_1..e_r
using ElemMono = std::vector<int>;
using ElemPoly = std::map<ElemMono, std::int64_t>;

// rewrite a symmetric root polynomial in terms of e_1..e_r; the classical
// leading-monomial descent, which terminates exactly when p is symmetric
ElemPoly symmetric_reduce(RootPoly p, const std::vector<RootPoly>& e,
                          std::size_t r) {
    ElemPoly out;
    while (!p.empty()) {
        auto lead = std::prev(p.end()); // lex-largest monomial
        RootMono lam = lead->first;
        std::int64_t c = lead->second;
        for (std::size_t i = 0; i + 1 < r; ++i)
            if (lam[i] < lam[i + 1])
                throw NonSymmetricResidual(
                    "leading exponent vector is not weakly decreasing");
        ElemMono em(r, 0);
        RootPoly prod{{RootMono(r, 0), 1}};
        for (std::size_t i = 0; i < r; ++i) {
            int k = lam[i] - (i + 1 < r ? lam[i + 1] : 0);
            em[i] = k;
            for (int t = 0; t < k; ++t) prod = rp_mul(prod, e[i + 1]);
        }
        out[em] += c;
        if (out[em] == 0) out.erase(em);
        for (const auto& [m, pc] : prod) rp_add(p, m, -c * pc);
    }
    return out;
}

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

std::int64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    __int128 r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return static_cast<std::int64_t>(r);
}

} // namespace

std::pair<ChernList, ChernList> chern_universal() {
    SchubertClass s1 = SchubertClass::basis(1, 0);
    ChernList cK = {SchubertClass::one(), -s1, SchubertClass::basis(2, 0),
                    -SchubertClass::basis(3, 0), SchubertClass::basis(4, 0)};
    ChernList cQ = {SchubertClass::one(), s1, SchubertClass::basis(1, 1)};
    if (cK[1] != -s1) throw Error("internal: c1(K) != -s1");
    // c(K) c(Q) = 1: every positive-degree component of the product vanishes
    for (int d = 1; d <= 6; ++d) {
        SchubertClass acc;
        for (int i = 0; i <= d; ++i) {
            int j = d - i;
            if (i >= static_cast<int>(cK.size()) || j >= static_cast<int>(cQ.size()))
                continue;
            acc = acc + schubert_mul(cK[i], cQ[j]);
        }
        if (!acc.is_zero()) throw Error("internal: c(K) c(Q) != 1");
    }
    return {std::move(cK), std::move(cQ)};
}

ChernList chern_wedge2(const ChernList& cE) {
    if (cE.size() < 3)
        throw Error("chern_wedge2 requires rank >= 2");
    if (!(cE[0] == SchubertClass::one()))
        throw Error("Chern list must start with the unit class");
    const std::size_t r = cE.size() - 1;
    if (r > 8) throw ResourceLimit("chern_wedge2 supports rank <= 8");

    std::vector<RootPoly> roots;
    for (std::size_t i = 0; i < r; ++i) {
        RootMono m(r, 0);
        m[i] = 1;
        roots.push_back(RootPoly{{std::move(m), 1}});
    }
    std::vector<RootPoly> e = elementary_of(roots, r, r);

    std::vector<RootPoly> pair_sums;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) {
            RootPoly s = roots[i];
            for (const auto& [m, c] : roots[j]) rp_add(s, m, c);
            pair_sums.push_back(std::move(s));
        }
    const std::size_t wrank = pair_sums.size(); // C(r,2)
    std::vector<RootPoly> ew = elementary_of(pair_sums, wrank, r);

    ChernList out;
    out.reserve(wrank + 1);
    out.push_back(SchubertClass::one());
    for (std::size_t d = 1; d <= wrank; ++d) {
        ElemPoly expr = symmetric_reduce(ew[d], e, r);
        SchubertClass acc;
        for (const auto& [em, c] : expr) {
            SchubertClass term = SchubertClass::one();
            for (std::size_t i = 0; i < r; ++i)
                for (int t = 0; t < em[i]; ++t) term = schubert_mul(term, cE[i + 1]);
            acc = acc + term.scaled(c);
        }
        out.push_back(std::move(acc));
    }
    return out;
}

ChernList segre_inverse(const ChernList& cE, int upto) {
    if (cE.empty() || !(cE[0] == SchubertClass::one()))
        throw Error("Chern list must start with the unit class");
    ChernList s;
    s.reserve(static_cast<std::size_t>(upto) + 1);
    s.push_back(SchubertClass::one());
    for (int k = 1; k <= upto; ++k) {
        SchubertClass acc;
        for (int j = 1; j <= k && j < static_cast<int>(cE.size()); ++j)
            acc = acc - schubert_mul(cE[j], s[k - j]);
        s.push_back(std::move(acc));
    }
    return s;
}

std::int64_t projbundle_integral(const ChernList& cE, int r, int a, int k) {
    if (r < 1) throw DimensionMismatch("projective bundle rank must be >= 1");
    if (k == r - 1) {
        if (a != 0)
            throw DimensionMismatch("fiber normalization requires a = 0");
        return 1; // integral of xi^{r-1} over the fiber P^{r-1}
    }
    if (k != 8 + r - 1)
        throw DimensionMismatch("top power must be dim Gr(2,6) + rank - 1 = " +
                                std::to_string(8 + r - 1));
    // pi_* xi^m = s_{m-r+1} with the sign convention s_j = (-1)^j [c(E)^{-1}]_j
    ChernList sp = segre_inverse(cE, k - r + 1);
    SchubertClass H = SchubertClass::basis(1, 0);
    std::int64_t total = 0;
    for (int m = r - 1; m <= k; ++m) {
        int j = m - r + 1;
        SchubertClass seg = (j % 2 == 0) ? sp[j] : -sp[j];
        if (seg.is_zero()) continue;
        SchubertClass term = schubert_mul(seg, schubert_pow(H, k - m));
        total += binom(k, m) * ipow(a, k - m) * schubert_integral(term);
    }
    return total;
}

std::int64_t palatini_degree(std::int64_t c1cube, std::int64_t c1c2) {
    return c1cube - 2 * c1c2;
}

} // namespace fano8
