// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the fano8 authors
#include "fano8/poly.hpp"

#include <algorithm>
#include <set>

namespace fano8 {

Ring::Ring(std::uint32_t p, std::vector<std::string> variables) {
    auto d = std::make_shared<Data>(Data{PrimeField(p), std::move(variables), {}});
    for (std::size_t i = 0; i < d->vars.size(); ++i) {
        if (!d->index.emplace(d->vars[i], i).second)
            throw Error("duplicate variable name '" + d->vars[i] + "'");
    }
    data_ = std::move(d);
}

std::size_t Ring::index_of(const std::string& name) const {
    auto it = data_->index.find(name);
    return it == data_->index.end() ? npos : it->second;
}

bool Ring::operator==(const Ring& o) const {
    if (data_ == o.data_) return true;
    return data_->field == o.data_->field && data_->vars == o.data_->vars;
}

std::uint32_t monomial_degree(const Monomial& m) {
    std::uint32_t d = 0;
    for (auto e : m) d += e;
    return d;
}

bool monomial_divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint32_t s = static_cast<std::uint32_t>(a[i]) + b[i];
        if (s > 0xffffu) throw Error("monomial exponent overflow");
        r[i] = static_cast<std::uint16_t>(s);
    }
    return r;
}

bool canonical_less(const Monomial& a, const Monomial& b) {
    std::uint32_t da = monomial_degree(a), db = monomial_degree(b);
    if (da != db) return da < db;
    // degrevlex tie break: the last differing exponent larger means smaller
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

Polynomial::Polynomial(Ring ring, std::vector<Term> terms) : ring_(std::move(ring)) {
    for (auto& t : terms) {
        if (t.mono.size() != ring_.nvars())
            throw Error("monomial width does not match ring");
        t.coeff %= ring_.p();
    }
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) {
        return canonical_less(y.mono, x.mono); // descending
    });
    terms_.reserve(terms.size());
    const auto& F = ring_.field();
    for (auto& t : terms) {
        if (!terms_.empty() && terms_.back().mono == t.mono) {
            terms_.back().coeff = F.add(terms_.back().coeff, t.coeff);
            if (terms_.back().coeff == 0) terms_.pop_back();
        } else if (t.coeff != 0) {
            terms_.push_back(std::move(t));
        }
    }
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& t : terms_)
        d = std::max(d, static_cast<int>(monomial_degree(t.mono)));
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    std::uint32_t d = monomial_degree(terms_.front().mono);
    for (const auto& t : terms_)
        if (monomial_degree(t.mono) != d) return false;
    return true;
}

std::uint32_t Polynomial::constant_term() const {
    if (!terms_.empty() && monomial_degree(terms_.back().mono) == 0)
        return terms_.back().coeff;
    return 0;
}

void Polynomial::check_ring(const Polynomial& o) const {
    if (!(ring_ == o.ring_)) throw RingMismatch();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_ring(o);
    const auto& F = ring_.field();
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i].mono == o.terms_[j].mono) {
            std::uint32_t c = F.add(terms_[i].coeff, o.terms_[j].coeff);
            if (c != 0) out.push_back({terms_[i].mono, c});
            ++i; ++j;
        } else if (canonical_less(o.terms_[j].mono, terms_[i].mono)) {
            out.push_back(terms_[i++]);
        } else {
            out.push_back(o.terms_[j++]);
        }
    }
    while (i < terms_.size()) out.push_back(terms_[i++]);
    while (j < o.terms_.size()) out.push_back(o.terms_[j++]);
    Polynomial r(ring_);
    r.terms_ = std::move(out);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    r.terms_ = terms_;
    const auto& F = ring_.field();
    for (auto& t : r.terms_) t.coeff = F.neg(t.coeff);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::scaled(std::uint32_t c) const {
    const auto& F = ring_.field();
    c %= F.p();
    Polynomial r(ring_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coeff = F.mul(t.coeff, c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_ring(o);
    std::vector<Term> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    const auto& F = ring_.field();
    for (const auto& a : terms_)
        for (const auto& b : o.terms_)
            prod.push_back({monomial_mul(a.mono, b.mono), F.mul(a.coeff, b.coeff)});
    return Polynomial(ring_, std::move(prod));
}

Polynomial Polynomial::pow(std::uint64_t e) const {
    Polynomial base = *this;
    Polynomial r = Polynomial::constant(ring_, 1);
    while (e != 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e != 0) base = base * base;
    }
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!(ring_ == o.ring_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

Polynomial Polynomial::constant(const Ring& R, std::int64_t c) {
    std::uint32_t v = R.field().reduce(c);
    Polynomial r(R);
    if (v != 0) {
        std::vector<Term> ts{Term{Monomial(R.nvars(), 0), v}};
        return Polynomial(R, std::move(ts));
    }
    return r;
}

Polynomial Polynomial::variable(const Ring& R, std::size_t i, std::uint16_t exp) {
    if (i >= R.nvars()) throw Error("variable index out of range");
    Monomial m(R.nvars(), 0);
    m[i] = exp;
    return Polynomial(R, {Term{std::move(m), 1 % R.p()}});
}

Polynomial poly_arith(const Polynomial& f, const Polynomial& g, PolyOp op) {
    return op == PolyOp::add ? f + g : f * g;
}

Polynomial derivative(const Polynomial& f, std::size_t var) {
    const Ring& R = f.ring();
    if (var >= R.nvars()) throw Error("variable index out of range");
    const auto& F = R.field();
    std::vector<Term> out;
    for (const auto& t : f.terms()) {
        if (t.mono[var] == 0) continue;
        std::uint32_t c = F.mul(t.coeff, F.reduce(t.mono[var]));
        if (c == 0) continue;
        Term d{t.mono, c};
        d.mono[var] -= 1;
        out.push_back(std::move(d));
    }
    return Polynomial(R, std::move(out));
}

Polynomial substitute_linear(const Polynomial& f,
                             const std::map<std::size_t, Polynomial>& assignment) {
    const Ring& R = f.ring();
    for (const auto& [v, img] : assignment) {
        if (v >= R.nvars()) throw Error("substituted variable index out of range");
        if (!(img.ring() == R)) throw RingMismatch();
        if (img.degree() > 1)
            throw Error("substitution image is not a linear form");
        for (const auto& t : img.terms())
            for (const auto& [w, _] : assignment)
                if (t.mono[w] != 0) throw CyclicSubstitution(R.variable(w));
    }
    Polynomial result = Polynomial::zero(R);
    for (const auto& t : f.terms()) {
        Polynomial piece = Polynomial::constant(R, t.coeff);
        Monomial rest(R.nvars(), 0);
        for (std::size_t i = 0; i < R.nvars(); ++i) {
            if (t.mono[i] == 0) continue;
            auto it = assignment.find(i);
            if (it == assignment.end()) {
                rest[i] = t.mono[i];
            } else {
                piece = piece * it->second.pow(t.mono[i]);
            }
        }
        piece = piece * Polynomial(R, {Term{std::move(rest), 1 % R.p()}});
        result = result + piece;
    }
    return result;
}

std::uint32_t evaluate(const Polynomial& f, const std::vector<std::uint32_t>& point) {
    const Ring& R = f.ring();
    if (point.size() != R.nvars())
        throw Error("evaluation point has wrong number of coordinates");
    const PrimeField& F = R.field();
    std::uint32_t acc = 0;
    for (const auto& t : f.terms()) {
        std::uint32_t v = t.coeff;
        for (std::size_t i = 0; i < point.size() && v != 0; ++i)
            if (t.mono[i] != 0) v = F.mul(v, F.pow(point[i], t.mono[i]));
        acc = F.add(acc, v);
    }
    return acc;
}

} // namespace fano8
