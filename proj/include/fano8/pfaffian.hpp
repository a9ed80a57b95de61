// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the fano8 authors
#pragma once

#include <cstdint>
#include <vector>

#include "fano8/poly.hpp"

namespace fano8 {

// Square polynomial matrix with A^T = -A and zero diagonal (the diagonal is
// checked explicitly, which matters in characteristic 2).
struct AlternatingMatrix {
    Ring ring;
    std::size_t n;
    std::vector<Polynomial> entries; // row-major, n*n

    const Polynomial& at(std::size_t i, std::size_t j) const {
        return entries[i * n + j];
    }

    // validates the alternating invariants; throws NotAlternating
    static AlternatingMatrix make(Ring R, std::size_t n,
                                  std::vector<Polynomial> entries);
};

// Pf(A) by recursive expansion along the first row; Pf of the standard
// symplectic block matrix is +1, odd sizes give 0, Pf(A)^2 = det(A).
Polynomial pfaffian(const AlternatingMatrix& A);

// Determinant of a square polynomial matrix by cofactor expansion.
Polynomial poly_determinant(const Ring& R, const std::vector<Polynomial>& entries,
                            std::size_t n);

// B^T A B for a scalar matrix B over the coefficient field (row-major).
AlternatingMatrix congruence(const AlternatingMatrix& A,
                             const std::vector<std::uint32_t>& B);

// Determinant of a scalar matrix over F_p by Gaussian elimination.
std::uint32_t scalar_determinant(const PrimeField& F,
                                 std::vector<std::uint32_t> entries, std::size_t n);

} // namespace fano8
