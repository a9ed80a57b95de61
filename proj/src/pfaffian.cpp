// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the fano8 authors
#include "fano8/pfaffian.hpp"

#include <string>

namespace fano8 {

AlternatingMatrix AlternatingMatrix::make(Ring R, std::size_t n,
                                          std::vector<Polynomial> entries) {
    if (entries.size() != n * n)
        throw NotAlternating("matrix entry count does not match size " +
                             std::to_string(n));
    for (const auto& e : entries)
        if (!(e.ring() == R))
            throw RingMismatch("matrix entry lives in a different ring");
    for (std::size_t i = 0; i < n; ++i) {
        if (!entries[i * n + i].is_zero())
            throw NotAlternating("nonzero diagonal entry at index " +
                                 std::to_string(i));
        for (std::size_t j = i + 1; j < n; ++j)
            if (entries[i * n + j] != -entries[j * n + i])
                throw NotAlternating("entry (" + std::to_string(i) + "," +
                                     std::to_string(j) + ") is not the negative of its transpose");
    }
    return AlternatingMatrix{std::move(R), n, std::move(entries)};
}

namespace {

Polynomial pfaffian_rec(const AlternatingMatrix& A, const std::vector<std::size_t>& idx) {
    if (idx.empty()) return Polynomial::constant(A.ring, 1);
    if (idx.size() % 2 != 0) return Polynomial::zero(A.ring);
    Polynomial sum = Polynomial::zero(A.ring);
    std::size_t i0 = idx.front();
    std::vector<std::size_t> rest;
    rest.reserve(idx.size() - 2);
    for (std::size_t t = 1; t < idx.size(); ++t) {
        const Polynomial& a = A.at(i0, idx[t]);
        if (a.is_zero()) continue;
        rest.clear();
        for (std::size_t s = 1; s < idx.size(); ++s)
            if (s != t) rest.push_back(idx[s]);
        Polynomial term = a * pfaffian_rec(A, rest);
        sum = (t % 2 == 1) ? sum + term : sum - term;
    }
    return sum;
}

Polynomial det_rec(const Ring& R, const std::vector<Polynomial>& e, std::size_t n,
                   std::size_t row, const std::vector<std::size_t>& cols) {
    if (cols.empty()) return Polynomial::constant(R, 1);
    Polynomial sum = Polynomial::zero(R);
    std::vector<std::size_t> rest;
    rest.reserve(cols.size() - 1);
    for (std::size_t t = 0; t < cols.size(); ++t) {
        const Polynomial& a = e[row * n + cols[t]];
        if (a.is_zero()) continue;
        rest.clear();
        for (std::size_t s = 0; s < cols.size(); ++s)
            if (s != t) rest.push_back(cols[s]);
        Polynomial term = a * det_rec(R, e, n, row + 1, rest);
        sum = (t % 2 == 0) ? sum + term : sum - term;
    }
    return sum;
}

} // namespace

Polynomial pfaffian(const AlternatingMatrix& A) {
    std::vector<std::size_t> idx(A.n);
    for (std::size_t i = 0; i < A.n; ++i) idx[i] = i;
    return pfaffian_rec(A, idx);
}

Polynomial poly_determinant(const Ring& R, const std::vector<Polynomial>& entries,
                            std::size_t n) {
    std::vector<std::size_t> cols(n);
    for (std::size_t i = 0; i < n; ++i) cols[i] = i;
    return det_rec(R, entries, n, 0, cols);
}

AlternatingMatrix congruence(const AlternatingMatrix& A,
                             const std::vector<std::uint32_t>& B) {
    const std::size_t n = A.n;
    const PrimeField& F = A.ring.field();
    std::vector<Polynomial> out(n * n, Polynomial::zero(A.ring));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Polynomial acc = Polynomial::zero(A.ring);
            for (std::size_t k = 0; k < n; ++k) {
                if (B[k * n + i] == 0) continue;
                for (std::size_t l = 0; l < n; ++l) {
                    std::uint32_t c = F.mul(B[k * n + i], B[l * n + j]);
                    if (c == 0) continue;
                    acc = acc + A.at(k, l).scaled(c);
                }
            }
            out[i * n + j] = std::move(acc);
        }
    return AlternatingMatrix::make(A.ring, n, std::move(out));
}

std::uint32_t scalar_determinant(const PrimeField& F,
                                 std::vector<std::uint32_t> e, std::size_t n) {
    std::uint32_t det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && e[pivot * n + c] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != c) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(e[pivot * n + j], e[c * n + j]);
            det = F.neg(det);
        }
        std::uint32_t pc = e[c * n + c];
        det = F.mul(det, pc);
        std::uint32_t inv = F.inv(pc);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (e[r * n + c] == 0) continue;
            std::uint32_t factor = F.mul(e[r * n + c], inv);
            for (std::size_t j = c; j < n; ++j)
                e[r * n + j] = F.sub(e[r * n + j], F.mul(factor, e[c * n + j]));
        }
    }
    return det;
}

} // namespace fano8
