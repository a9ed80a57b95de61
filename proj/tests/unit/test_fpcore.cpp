// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the fano8 authors
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <sstream>

#include "fano8/error.hpp"
#include "fano8/fp.hpp"
#include "fano8/io.hpp"
#include "fano8/order.hpp"
#include "fano8/parse.hpp"
#include "fano8/poly.hpp"

#include "../support.hpp"

using namespace fano8;
using testsupport::Rng;

TEST_CASE("prime field arithmetic") {
    PrimeField F(101);
    CHECK(F.p() == 101);
    CHECK(F.add(100, 2) == 1);
    CHECK(F.sub(1, 2) == 100);
    CHECK(F.neg(0) == 0);
    CHECK(F.neg(40) == 61);
    CHECK(F.mul(50, 50) == 2500 % 101);
    CHECK(F.reduce(-1) == 100);
    CHECK(F.reduce(202) == 0);
    CHECK(F.pow(3, 100) == 1); // Fermat
    CHECK(F.pow(3, 0) == 1);
    for (std::uint32_t a = 1; a < 101; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
    CHECK_THROWS_AS(F.inv(0), ZeroInverse);
}

TEST_CASE("prime field rejects composite and accepts 2") {
    CHECK_THROWS_AS(PrimeField(1), Error);
    CHECK_THROWS_AS(PrimeField(6), Error);
    CHECK_THROWS_AS(PrimeField(0), Error);
    PrimeField F2(2);
    CHECK(F2.add(1, 1) == 0);
    CHECK(F2.neg(1) == 1);
    CHECK(is_prime(32003));
    CHECK(!is_prime(32001));
}

TEST_CASE("polynomial normalization and arithmetic") {
    Ring R(7, {"x", "y"});
    Polynomial x = Polynomial::variable(R, 0);
    Polynomial y = Polynomial::variable(R, 1);
    Polynomial f = x * x + y.scaled(3);
    CHECK(f.size() == 2);
    CHECK(f.degree() == 2);
    CHECK(!f.is_homogeneous());
    // terms combine and cancel
    CHECK((f - f).is_zero());
    CHECK((f + f) == f.scaled(2));
    Polynomial g = (x + y).pow(7); // Frobenius: (x+y)^7 = x^7 + y^7 mod 7
    CHECK(g == Polynomial::variable(R, 0, 7) + Polynomial::variable(R, 1, 7));
    CHECK(Polynomial::constant(R, 7).is_zero());
    CHECK(Polynomial::constant(R, -1).constant_term() == 6);
    CHECK(Polynomial::zero(R).degree() == -1);

    Ring S(7, {"x", "z"});
    CHECK_THROWS_AS(x + Polynomial::variable(S, 0), RingMismatch);
}

TEST_CASE("parse and print round-trip") {
    Ring R(101, {"x", "y", "z"});
    Rng rng(testsupport::kSeed);
    for (int i = 0; i < 100; ++i) {
        Polynomial f = testsupport::random_poly(R, rng, 6, 5);
        CHECK(parse_poly(print_poly(f), R) == f);
    }
    CHECK(parse_poly("0", R).is_zero());
    CHECK(print_poly(Polynomial::zero(R)) == "0");
    CHECK(parse_poly("-(x - y)*(x - y)", R) ==
          -(parse_poly("x^2 - 2*x*y + y^2", R)));
    CHECK(parse_poly("102*x", R) == parse_poly("x", R));
    CHECK_THROWS_AS(parse_poly("x + q", R), UnknownVariable);
    CHECK_THROWS_AS(parse_poly("x +", R), SyntaxError);
    CHECK_THROWS_AS(parse_poly("x^", R), SyntaxError);
    CHECK_THROWS_AS(parse_poly("", R), SyntaxError);
}

TEST_CASE("derivative and evaluate") {
    Ring R(5, {"x", "y"});
    Polynomial f = parse_poly("x^5 + x^2*y + 3*y", R);
    CHECK(derivative(f, 0) == parse_poly("2*x*y", R)); // d(x^5)/dx = 0 mod 5
    CHECK(derivative(f, 1) == parse_poly("x^2 + 3", R));
    CHECK(evaluate(f, {2, 3}) == (32 + 12 + 9) % 5);
    CHECK(evaluate(Polynomial::zero(R), {1, 1}) == 0);
    CHECK_THROWS_AS(evaluate(f, {1}), Error);
}

TEST_CASE("linear substitution") {
    Ring R(11, {"x", "y", "z"});
    Polynomial f = parse_poly("x^2 + y*z", R);
    std::map<std::size_t, Polynomial> sub;
    sub.emplace(0, parse_poly("y + 1", R)); // x -> y + 1
    CHECK(substitute_linear(f, sub) == parse_poly("y^2 + 2*y + 1 + y*z", R));
    std::map<std::size_t, Polynomial> cyc;
    cyc.emplace(0, parse_poly("y", R));
    cyc.emplace(1, parse_poly("x", R));
    CHECK_THROWS_AS(substitute_linear(f, cyc), CyclicSubstitution);
    std::map<std::size_t, Polynomial> quad;
    quad.emplace(0, parse_poly("y^2", R));
    CHECK_THROWS_AS(substitute_linear(f, quad), Error);
}

TEST_CASE("monomial orders") {
    Ring R(7, {"x", "y", "z"});
    auto mono = [&](const char* s) { return parse_poly(s, R).terms()[0].mono; };
    // degrevlex: degree dominates
    CHECK(monomial_less(mono("x"), mono("y^2"), MonomialOrder::degrevlex()));
    // degrevlex tie-break: x*z < y^2
    CHECK(monomial_less(mono("x*z"), mono("y^2"), MonomialOrder::degrevlex()));
    // lex: x beats any power of y
    CHECK(monomial_less(mono("y^5"), mono("x"), MonomialOrder::lex()));
    // block(1): any x beats everything without x
    CHECK(monomial_less(mono("y^5*z^5"), mono("x"), MonomialOrder::block(1)));
    CHECK(MonomialOrder::parse("degrevlex") == MonomialOrder::degrevlex());
    CHECK(MonomialOrder::parse("lex") == MonomialOrder::lex());
    CHECK(MonomialOrder::parse("block:2") == MonomialOrder::block(2));
    CHECK(MonomialOrder::block(2).name() == "block:2");
    CHECK_THROWS_AS(MonomialOrder::parse("weird"), Error);
}

TEST_CASE("ring file round-trip") {
    Ring R(13, {"a", "b"});
    std::vector<Polynomial> polys{parse_poly("a^2 + 12*b", R),
                                  parse_poly("a*b", R)};
    std::string text = write_ring_file(R, polys);
    std::istringstream in(text);
    RingFile rf = read_ring_file(in);
    CHECK(rf.ring == R);
    CHECK(rf.polys == polys);

    std::istringstream bad("p=4\nx\nx");
    CHECK_THROWS_AS(read_ring_file(bad), Error);
    std::istringstream empty("");
    CHECK_THROWS_AS(read_ring_file(empty), Error);
}

TEST_CASE("matrix file round-trip") {
    Ring R(5, {"x"});
    Polynomial zero = Polynomial::zero(R);
    Polynomial x = Polynomial::variable(R, 0);
    std::vector<std::vector<Polynomial>> entries{{zero, x}, {-x, zero}};
    std::string text = write_matrix_file(R, entries);
    std::istringstream in(text);
    MatrixFile mf = read_matrix_file(in);
    CHECK(mf.ring == R);
    CHECK(mf.n == 2);
    CHECK(mf.entries == entries);
}
