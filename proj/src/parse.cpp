// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the fano8 authors
#include "fano8/parse.hpp"

#include <cctype>

namespace fano8 {

namespace {

class Parser {
  public:
    Parser(const std::string& text, const Ring& R) : s_(text), R_(R) {}

    Polynomial run() {
        Polynomial p = parse_sum();
        skip_ws();
        if (pos_ != s_.size())
            throw SyntaxError("unexpected trailing input", pos_);
        return p;
    }

  private:
    const std::string& s_;
    const Ring& R_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    int peek() {
        skip_ws();
        return pos_ < s_.size() ? static_cast<unsigned char>(s_[pos_]) : -1;
    }

    Polynomial parse_sum() {
        bool negate = false;
        if (peek() == '-') { ++pos_; negate = true; }
        Polynomial acc = parse_term();
        if (negate) acc = -acc;
        for (;;) {
            int c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                Polynomial t = parse_term();
                acc = (c == '+') ? acc + t : acc - t;
            } else {
                return acc;
            }
        }
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        while (peek() == '*') {
            ++pos_;
            acc = acc * parse_factor();
        }
        return acc;
    }

    Polynomial parse_factor() {
        int c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial p = parse_sum();
            if (peek() != ')')
                throw SyntaxError("expected ')'", pos_);
            ++pos_;
            return p;
        }
        if (c >= 0 && std::isdigit(c)) return Polynomial::constant(R_, parse_uint());
        if (c >= 0 && std::isalpha(c)) {
            std::size_t start = pos_;
            std::string name;
            while (pos_ < s_.size()) {
                unsigned char ch = s_[pos_];
                if (std::isalnum(ch) || ch == '_') { name += static_cast<char>(ch); ++pos_; }
                else break;
            }
            std::size_t idx = R_.index_of(name);
            if (idx == Ring::npos) {
                pos_ = start;
                throw UnknownVariable(name);
            }
            std::uint64_t exp = 1;
            if (peek() == '^') {
                ++pos_;
                if (!std::isdigit(peek()))
                    throw SyntaxError("expected exponent after '^'", pos_);
                exp = static_cast<std::uint64_t>(parse_uint());
            }
            if (exp > 0xffffu) throw SyntaxError("exponent too large", pos_);
            if (exp == 0) return Polynomial::constant(R_, 1);
            return Polynomial::variable(R_, idx, static_cast<std::uint16_t>(exp));
        }
        throw SyntaxError("expected a variable, number, or '('", pos_);
    }

    std::int64_t parse_uint() {
        skip_ws();
        std::int64_t v = 0;
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > (std::int64_t(1) << 62))
                throw SyntaxError("integer literal too large", start);
            ++pos_;
        }
        if (pos_ == start) throw SyntaxError("expected an integer", start);
        return v;
    }
};

} // namespace

Polynomial parse_poly(const std::string& text, const Ring& R) {
    return Parser(text, R).run();
}

std::string print_monomial(const Ring& R, const Monomial& m) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += R.variable(i);
        if (m[i] > 1) {
            out += '^';
            out += std::to_string(m[i]);
        }
    }
    return out;
}

std::string print_poly(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& t : f.terms()) {
        if (!out.empty()) out += " + ";
        std::string mono = print_monomial(f.ring(), t.mono);
        if (mono.empty()) {
            out += std::to_string(t.coeff);
        } else if (t.coeff == 1) {
            out += mono;
        } else {
            out += std::to_string(t.coeff);
            out += '*';
            out += mono;
        }
    }
    return out;
}

} // namespace fano8
