// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the fano8 authors
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fano8 {

// Integral Chow ring of Gr(2,6) in the Schubert basis: 15 classes s_{a,b}
// with 4 >= a >= b >= 0, codimension a+b, ordered by (codimension, a desc).
// s_{4,4} is the point class.
struct SchubertPartition {
    int a, b;
};

inline constexpr std::size_t kSchubertCount = 15;
const std::array<SchubertPartition, kSchubertCount>& schubert_partitions();

// index of s_{a,b} in the fixed basis order; throws Error on invalid (a,b)
std::size_t schubert_index(int a, int b);

struct SchubertClass {
    std::array<std::int64_t, kSchubertCount> coeff{};

    static SchubertClass zero() { return SchubertClass{}; }
    static SchubertClass one() { return basis(0, 0); }
    static SchubertClass basis(int a, int b);

    std::int64_t operator[](std::size_t i) const { return coeff[i]; }
    bool is_zero() const;
    // -1 for zero; throws Error when mixed-codimension
    int codimension() const;

    SchubertClass operator+(const SchubertClass& o) const;
    SchubertClass operator-(const SchubertClass& o) const;
    SchubertClass operator-() const;
    SchubertClass scaled(std::int64_t c) const;
    bool operator==(const SchubertClass& o) const { return coeff == o.coeff; }
    bool operator!=(const SchubertClass& o) const { return !(*this == o); }
};

// Product in CH(Gr(2,6)): reduction in Z[s1, s11] modulo the degree-5 and
// degree-6 relations from c(K)c(Q) = 1, then back to the Schubert basis via
// Giambelli. Components beyond codimension 8 vanish.
SchubertClass schubert_mul(const SchubertClass& x, const SchubertClass& y);

SchubertClass schubert_pow(const SchubertClass& x, unsigned e);

// Coefficient of the point class s_{4,4}; lower-codimension components
// integrate to zero.
std::int64_t schubert_integral(const SchubertClass& x);

// "s21" style basis names; general classes as signed combinations.
std::string schubert_to_string(const SchubertClass& x);

// Product expressions "s1^8", "s21*s21*s2", "3*s44": factors are basis names
// s<a><b> (b omitted when 0) or integer scalars, joined by '*', each with an
// optional positive '^' power. Returns nullopt on malformed input.
std::optional<SchubertClass> schubert_parse(const std::string& text);

} // namespace fano8
