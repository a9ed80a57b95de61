// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the fano8 authors
#include "fano8/plucker.hpp"

#include <map>
#include <string>

namespace fano8 {

Ring plucker_ring(std::size_t n, std::uint32_t p) {
    std::vector<std::string> vars;
    vars.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            vars.push_back("x_" + std::to_string(i) + "_" + std::to_string(j));
    return Ring(p, std::move(vars));
}

std::size_t plucker_index(std::size_t n, std::size_t i, std::size_t j) {
    // pairs before row i: (n-1) + (n-2) + ... + (n-i)
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

Ideal plucker_ideal(std::size_t n, const PrimeField& F) {
    if (n < 4) throw Error("plucker_ideal requires n >= 4");
    Ring R = plucker_ring(n, F.p());
    auto var = [&](std::size_t i, std::size_t j) {
        return Polynomial::variable(R, plucker_index(n, i, j));
    };
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                for (std::size_t l = k + 1; l < n; ++l)
                    gens.push_back(var(i, j) * var(k, l) - var(i, k) * var(j, l) +
                                   var(i, l) * var(j, k));
    return Ideal(R, std::move(gens));
}

PluckerSpec PluckerSpec::make(std::size_t n, Ring ring,
                              std::vector<Polynomial> linear_relations) {
    std::size_t nv = ring.nvars();
    if (nv != n * (n - 1) / 2)
        throw Error("Plucker ring must have C(n,2) variables");
    const PrimeField& F = ring.field();
    // rank check: rows = relations as coefficient vectors (with constant term)
    std::vector<std::vector<std::uint32_t>> rows;
    for (const auto& rel : linear_relations) {
        if (!(rel.ring() == ring))
            throw RingMismatch("linear relation lives in a different ring");
        if (rel.degree() > 1) throw Error("linear relation has degree > 1");
        std::vector<std::uint32_t> row(nv + 1, 0);
        for (const auto& t : rel.terms()) {
            if (monomial_degree(t.mono) == 0) {
                row[nv] = t.coeff;
                continue;
            }
            for (std::size_t i = 0; i < nv; ++i)
                if (t.mono[i] != 0) row[i] = t.coeff;
        }
        rows.push_back(std::move(row));
    }
    // Gaussian elimination; dependent relation -> zero row
    std::size_t rank = 0;
    for (std::size_t c = 0; c <= nv && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        std::uint32_t inv = F.inv(rows[rank][c]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            std::uint32_t f = F.mul(rows[r][c], inv);
            for (std::size_t j = c; j <= nv; ++j)
                rows[r][j] = F.sub(rows[r][j], F.mul(f, rows[rank][j]));
        }
        ++rank;
    }
    if (rank != linear_relations.size())
        throw Error("linear relations are not independent");
    return PluckerSpec{n, std::move(ring), std::move(linear_relations)};
}

AlternatingMatrix klein_matrix(std::uint32_t p) {
    Ring R(p, {"x", "y", "z", "v", "w"});
    Polynomial x = Polynomial::variable(R, 0), y = Polynomial::variable(R, 1),
               z = Polynomial::variable(R, 2), v = Polynomial::variable(R, 3),
               w = Polynomial::variable(R, 4), o = Polynomial::zero(R);
    std::vector<Polynomial> e = {
        o,  v,  w,  x,  y,  z,  //
        -v, o,  o,  z,  -x, o,  //
        -w, o,  o,  o,  v,  -y, //
        -x, -z, o,  o,  o,  w,  //
        -y, x,  -v, o,  o,  o,  //
        -z, o,  y,  -w, o,  o,
    };
    return AlternatingMatrix::make(std::move(R), 6, std::move(e));
}

Polynomial klein_cubic(std::uint32_t p) { return pfaffian(klein_matrix(p)); }

PluckerSpec klein_spec(const PrimeField& F) {
    Ring R = plucker_ring(6, F.p());
    auto var = [&](std::size_t i, std::size_t j) {
        return Polynomial::variable(R, plucker_index(6, i, j));
    };
    std::vector<Polynomial> rels = {
        var(0, 3) - var(1, 4), var(0, 4) - var(2, 5), var(1, 3) + var(0, 5),
        var(0, 1) + var(2, 4), var(0, 2) + var(3, 5)};
    return PluckerSpec::make(6, std::move(R), std::move(rels));
}

Ideal klein_section(const PrimeField& F) {
    Ideal P = plucker_ideal(6, F);
    const Ring& R15 = P.ring;
    auto idx = [&](std::size_t i, std::size_t j) { return plucker_index(6, i, j); };
    auto var = [&](std::size_t i, std::size_t j) {
        return Polynomial::variable(R15, idx(i, j));
    };
    // solve the relations for x_0_3, x_0_4, x_1_3, x_0_1, x_0_2
    std::map<std::size_t, Polynomial> assign;
    assign.emplace(idx(0, 3), var(1, 4));
    assign.emplace(idx(0, 4), var(2, 5));
    assign.emplace(idx(1, 3), -var(0, 5));
    assign.emplace(idx(0, 1), -var(2, 4));
    assign.emplace(idx(0, 2), -var(3, 5));

    // remaining 10 coordinates, in ambient order
    std::vector<std::size_t> keep;
    std::vector<std::string> names;
    for (std::size_t v = 0; v < R15.nvars(); ++v)
        if (assign.find(v) == assign.end()) {
            keep.push_back(v);
            names.push_back(R15.variable(v));
        }
    Ring R10(F.p(), std::move(names));

    std::vector<Polynomial> gens;
    gens.reserve(P.generators.size());
    for (const auto& g : P.generators) {
        Polynomial s = substitute_linear(g, assign);
        std::vector<Term> ts;
        ts.reserve(s.size());
        for (const auto& t : s.terms()) {
            Monomial m(keep.size());
            for (std::size_t a = 0; a < keep.size(); ++a) m[a] = t.mono[keep[a]];
            ts.push_back({std::move(m), t.coeff});
        }
        gens.push_back(Polynomial(R10, std::move(ts)));
    }
    return Ideal(std::move(R10), std::move(gens));
}

} // namespace fano8
