// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the fano8 authors
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "fano8/fp.hpp"

namespace fano8 {

// Immutable ring descriptor F_p[variables...]; shared by value (cheap handle).
class Ring {
  public:
    Ring(std::uint32_t p, std::vector<std::string> variables);

    const PrimeField& field() const { return data_->field; }
    std::uint32_t p() const { return data_->field.p(); }
    std::size_t nvars() const { return data_->vars.size(); }
    const std::vector<std::string>& variables() const { return data_->vars; }
    const std::string& variable(std::size_t i) const { return data_->vars[i]; }
    // index of a variable name, or npos
    std::size_t index_of(const std::string& name) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    // rings compare structurally: same p and same ordered variable list
    bool operator==(const Ring& o) const;
    bool same(const Ring& o) const { return *this == o; }

  private:
    struct Data {
        PrimeField field;
        std::vector<std::string> vars;
        std::map<std::string, std::size_t> index;
    };
    std::shared_ptr<const Data> data_;
};

// Exponent vector, length = nvars of the owning ring.
using Monomial = std::vector<std::uint16_t>;

std::uint32_t monomial_degree(const Monomial& m);
bool monomial_divides(const Monomial& a, const Monomial& b); // a | b
Monomial monomial_mul(const Monomial& a, const Monomial& b);

// Canonical storage comparator (degrevlex): degree first, then the last
// differing exponent smaller wins. Used for printing and term storage; the
// Groebner engine applies its own active order.
bool canonical_less(const Monomial& a, const Monomial& b);

struct Term {
    Monomial mono;
    std::uint32_t coeff; // nonzero, in [1, p)
};

// Sparse polynomial over F_p; terms sorted descending under canonical_less,
// never storing a zero coefficient.
class Polynomial {
  public:
    explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}
    // normalizes: sorts, combines, drops zeros
    Polynomial(Ring ring, std::vector<Term> terms);

    const Ring& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    // total degree; -1 for the zero polynomial
    int degree() const;
    bool is_homogeneous() const;
    std::uint32_t constant_term() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(std::uint32_t c) const;
    Polynomial pow(std::uint64_t e) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    static Polynomial zero(const Ring& R) { return Polynomial(R); }
    static Polynomial constant(const Ring& R, std::int64_t c);
    static Polynomial variable(const Ring& R, std::size_t i, std::uint16_t exp = 1);

  private:
    Ring ring_;
    std::vector<Term> terms_;
    void check_ring(const Polynomial& o) const;
};

// f op g with op in {add, mul}; throws RingMismatch on different rings.
enum class PolyOp { add, mul };
Polynomial poly_arith(const Polynomial& f, const Polynomial& g, PolyOp op);

// Formal partial derivative d f / d x_i in characteristic p.
Polynomial derivative(const Polynomial& f, std::size_t var);

// Evaluate f at a point, one field element per variable.
std::uint32_t evaluate(const Polynomial& f, const std::vector<std::uint32_t>& point);

// Triangular linear substitution: each key variable is replaced by its image,
// which must be a polynomial of total degree <= 1 not involving any key
// variable (else CyclicSubstitution). The result lives in the same ring.
Polynomial substitute_linear(const Polynomial& f,
                             const std::map<std::size_t, Polynomial>& assignment);

} // namespace fano8
