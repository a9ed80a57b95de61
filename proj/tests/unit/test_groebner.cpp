// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the fano8 authors
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>

#include "fano8/error.hpp"
#include "fano8/groebner.hpp"
#include "fano8/ideal_ops.hpp"
#include "fano8/parse.hpp"

#include "../support.hpp"

using namespace fano8;
using testsupport::Rng;

namespace {

std::vector<Polynomial> parse_all(const Ring& R,
                                  const std::vector<std::string>& texts) {
    std::vector<Polynomial> out;
    for (const auto& t : texts) out.push_back(parse_poly(t, R));
    return out;
}

// order-insensitive comparison of polynomial lists
bool same_set(std::vector<Polynomial> a, std::vector<Polynomial> b) {
    auto key = [](const Polynomial& f) { return print_poly(f); };
    auto cmp = [&](const Polynomial& f, const Polynomial& g) {
        return key(f) < key(g);
    };
    std::sort(a.begin(), a.end(), cmp);
    std::sort(b.begin(), b.end(), cmp);
    return a == b;
}

} // namespace

TEST_CASE("cyclic-4 reduced basis matches the reference values") {
    Ring R(32003, {"x", "y", "z", "w"});
    Ideal I(R, parse_all(R, {"x + y + z + w", "x*y + y*z + z*w + w*x",
                             "x*y*z + y*z*w + z*w*x + w*x*y", "x*y*z*w - 1"}));
    GroebnerBasis gb = buchberger(I, MonomialOrder::degrevlex());
    // reference basis computed independently with a second system
    std::vector<Polynomial> expect = parse_all(
        R, {"y*z + 32002*y*w + z^2*w^4 + z*w + 32001*w^2",
            "z^3*w^2 + z^2*w^3 + 32002*z + 32002*w",
            "y*w^4 + 32002*y + w^5 + 32002*w",
            "y*z*w^2 + 32002*y*w^3 + z^2*w^2 + z*w^3 + 32002*w^4 + 32002",
            "y*z^2 + 32002*y*w^2 + z^2*w + 32002*w^3",
            "y^2 + 2*y*w + w^2", "x + y + z + w"});
    CHECK(gb.basis.size() == 7);
    CHECK(same_set(gb.basis, expect));
}

TEST_CASE("katsura-3 reduced bases match the reference values") {
    Ring R(101, {"x", "y", "z"});
    Ideal I(R, parse_all(R, {"x + 2*y + 2*z - 1", "x^2 + 2*y^2 + 2*z^2 - x",
                             "2*x*y + 2*y*z - y"}));
    GroebnerBasis drl = buchberger(I, MonomialOrder::degrevlex());
    CHECK(same_set(drl.basis,
                   parse_all(R, {"64*y + z^3 + 28*z^2 + 13*z",
                                 "y^2 + 20*y + 60*z^2 + 81*z",
                                 "y*z + 10*y + 82*z^2 + 40*z",
                                 "x + 2*y + 2*z + 100"})));
    GroebnerBasis lex = buchberger(I, MonomialOrder::lex());
    CHECK(same_set(lex.basis,
                   parse_all(R, {"x + 41*z^3 + 37*z^2 + 30*z + 100",
                                 "y + 30*z^3 + 32*z^2 + 87*z",
                                 "z^4 + 38*z^3 + 95*z^2 + 95*z"})));
}

TEST_CASE("unit and trivial ideals") {
    Ring R(7, {"x", "y"});
    Ideal unit(R, parse_all(R, {"x", "x + 1"}));
    GroebnerBasis gb = buchberger(unit);
    CHECK(gb.is_unit());
    CHECK(gb.basis.size() == 1);
    CHECK(gb.basis[0] == Polynomial::constant(R, 1));

    CHECK(buchberger(Ideal::zero(R)).basis.empty());
    CHECK_FALSE(buchberger(Ideal::zero(R)).is_unit());

    // zero generators are dropped at construction
    Ideal z(R, {Polynomial::zero(R), parse_poly("x", R)});
    CHECK(z.generators.size() == 1);
}

TEST_CASE("normal form is linear and decides membership") {
    Ring R(101, {"x", "y", "z"});
    Ideal I(R, parse_all(R, {"x^2 + y^2 - 1", "x*y - z"}));
    GroebnerBasis gb = buchberger(I);
    Rng rng(testsupport::kSeed);
    for (int i = 0; i < 100; ++i) {
        Polynomial f = testsupport::random_poly(R, rng, 5, 4);
        Polynomial g = testsupport::random_poly(R, rng, 5, 4);
        Polynomial nf = normal_form(f + g, gb);
        CHECK(nf == normal_form(normal_form(f, gb) + normal_form(g, gb), gb));
        CHECK(normal_form(nf, gb) == nf); // idempotent
        // members reduce to zero
        Polynomial member = f * I.generators[0] + g * I.generators[1];
        CHECK(normal_form(member, gb).is_zero());
        CHECK(ideal_membership(member, I));
    }
}

TEST_CASE("groebner determinism under generator shuffles") {
    Rng rng(testsupport::kSeed);
    Ring R(101, {"x", "y", "z"});
    int done = 0;
    for (int attempt = 0; attempt < 300 && done < 100; ++attempt) {
        std::vector<Polynomial> gens;
        std::uniform_int_distribution<int> ngens(2, 4);
        const int n = ngens(rng);
        for (int i = 0; i < n; ++i)
            gens.push_back(testsupport::random_poly(R, rng, 3, 3));
        GbBudget budget;
        budget.max_pairs = 50'000;
        GroebnerBasis a;
        try {
            a = buchberger(Ideal(R, gens), MonomialOrder::degrevlex(), budget);
        } catch (const ResourceLimit&) {
            continue; // budget-heavy draw; try another
        }
        std::shuffle(gens.begin(), gens.end(), rng);
        GroebnerBasis b =
            buchberger(Ideal(R, gens), MonomialOrder::degrevlex(), budget);
        CHECK(a.basis == b.basis); // identical, including order
        ++done;
    }
    CHECK(done == 100);
}

TEST_CASE("every S-polynomial of a reduced basis reduces to zero") {
    Rng rng(testsupport::kSeed + 1);
    Ring R(101, {"x", "y", "z"});
    auto spoly = [&](const Polynomial& f, const Polynomial& g,
                     const MonomialOrder& ord) {
        // leading terms under ord
        auto lt = [&](const Polynomial& h) {
            const Term* best = &h.terms()[0];
            for (const auto& t : h.terms())
                if (monomial_less(best->mono, t.mono, ord)) best = &t;
            return *best;
        };
        Term tf = lt(f), tg = lt(g);
        Monomial l(tf.mono.size());
        for (std::size_t i = 0; i < l.size(); ++i)
            l[i] = std::max(tf.mono[i], tg.mono[i]);
        auto shift = [&](const Term& t, const Polynomial& h) {
            Monomial q(l.size());
            for (std::size_t i = 0; i < l.size(); ++i)
                q[i] = static_cast<std::uint16_t>(l[i] - t.mono[i]);
            Polynomial m(R, {Term{q, R.field().inv(t.coeff)}});
            return h * m;
        };
        return shift(tf, f) - shift(tg, g);
    };
    int done = 0;
    for (int attempt = 0; attempt < 300 && done < 100; ++attempt) {
        std::vector<Polynomial> gens;
        for (int i = 0; i < 3; ++i)
            gens.push_back(testsupport::random_poly(R, rng, 3, 3));
        GbBudget budget;
        budget.max_pairs = 50'000;
        GroebnerBasis gb;
        try {
            gb = buchberger(Ideal(R, gens), MonomialOrder::degrevlex(), budget);
        } catch (const ResourceLimit&) {
            continue;
        }
        for (std::size_t i = 0; i < gb.basis.size(); ++i)
            for (std::size_t j = i + 1; j < gb.basis.size(); ++j)
                CHECK(normal_form(spoly(gb.basis[i], gb.basis[j], gb.order), gb)
                          .is_zero());
        ++done;
    }
    CHECK(done == 100);
}

TEST_CASE("ideal operations against hand-checked values") {
    Ring R(101, {"x", "y", "z"});
    auto ideal = [&](std::vector<std::string> t) {
        return Ideal(R, parse_all(R, t));
    };
    // (x) cap (y) = (xy)
    CHECK(ideal_equal(ideal_intersection(ideal({"x"}), ideal({"y"})),
                      ideal({"x*y"})));
    // ((x y) : y) = (x)
    CHECK(ideal_equal(ideal_quotient(ideal({"x*y"}), parse_poly("y", R)),
                      ideal({"x"})));
    // ((x^2 y) : y^inf) = (x^2)
    CHECK(ideal_equal(saturation(ideal({"x^2*y"}), ideal({"y"})),
                      ideal({"x^2"})));
    // elimination of x from (x^2 + y^2 - 1, x - y) gives (2y^2 - 1)
    Ideal el = eliminate(ideal({"x^2 + y^2 - 1", "x - y"}), 1);
    CHECK(ideal_equal(el, ideal({"2*y^2 - 1"})));
    for (const auto& g : el.generators)
        for (const auto& t : g.terms()) CHECK(t.mono[0] == 0);
    // ((x(y,z)) : (y,z)) = (x): x is prime to both y and z
    CHECK(ideal_equal(ideal_quotient(ideal({"x*y", "x*z"}), ideal({"y", "z"})),
                      ideal({"x"})));
}

TEST_CASE("quotient generators multiply back into the ideal") {
    Rng rng(testsupport::kSeed + 2);
    Ring R(101, {"x", "y", "z"});
    int done = 0;
    for (int attempt = 0; attempt < 400 && done < 100; ++attempt) {
        std::vector<Polynomial> gi, gj;
        for (int i = 0; i < 2; ++i) {
            gi.push_back(testsupport::random_poly(R, rng, 2, 2));
            gj.push_back(testsupport::random_poly(R, rng, 2, 2));
        }
        GbBudget budget;
        budget.max_pairs = 50'000;
        try {
            Ideal I(R, gi), J(R, gj);
            Ideal Q = ideal_quotient(I, J, budget);
            GroebnerBasis gb = buchberger(I, MonomialOrder::degrevlex(), budget);
            for (const auto& q : Q.generators)
                for (const auto& j : J.generators)
                    CHECK(normal_form(q * j, gb).is_zero());
            ++done;
        } catch (const ResourceLimit&) {
            continue;
        }
    }
    CHECK(done == 100);
}

TEST_CASE("krull dimension of reference ideals") {
    Ring R(101, {"x", "y", "z"});
    CHECK(krull_dimension(Ideal::zero(R)) == 3);
    CHECK(krull_dimension(Ideal(R, parse_all(R, {"x"}))) == 2);
    CHECK(krull_dimension(Ideal(R, parse_all(R, {"x", "y"}))) == 1);
    CHECK(krull_dimension(Ideal(R, parse_all(R, {"x", "y", "z"}))) == 0);
    CHECK(krull_dimension(Ideal(R, parse_all(R, {"x^2 + y^2 - 1"}))) == 2);
    CHECK_THROWS_AS(krull_dimension(Ideal(R, parse_all(R, {"1"}))), UnitIdeal);
}

TEST_CASE("divide_exact and ideal_equal") {
    Ring R(101, {"x", "y"});
    Polynomial f = parse_poly("x^2 - y^2", R);
    Polynomial g = parse_poly("x - y", R);
    CHECK(divide_exact(f, g) == parse_poly("x + y", R));
    CHECK_THROWS_AS(divide_exact(parse_poly("x^2 + 1", R), g), Error);
    CHECK(ideal_equal(Ideal(R, {f, g}), Ideal(R, {g})));
    CHECK_FALSE(ideal_equal(Ideal(R, {f}), Ideal(R, {g})));
}

TEST_CASE("budget limits abort with ResourceLimit") {
    Ring R(32003, {"x", "y", "z", "w"});
    Ideal I(R, parse_all(R, {"x + y + z + w", "x*y + y*z + z*w + w*x",
                             "x*y*z + y*z*w + z*w*x + w*x*y", "x*y*z*w - 1"}));
    GbBudget tiny;
    tiny.max_pairs = 2;
    CHECK_THROWS_AS(buchberger(I, MonomialOrder::degrevlex(), tiny),
                    ResourceLimit);
    Ring R5(32003, {"a", "b", "c", "d", "e"});
    Ideal cyc5(R5, parse_all(R5, {"a + b + c + d + e",
                                  "a*b + b*c + c*d + d*e + e*a",
                                  "a*b*c + b*c*d + c*d*e + d*e*a + e*a*b",
                                  "a*b*c*d + b*c*d*e + c*d*e*a + d*e*a*b + e*a*b*c",
                                  "a*b*c*d*e - 1"}));
    GbBudget wall;
    wall.wall_ms = 1; // aborts at the first wall-clock checkpoint
    CHECK_THROWS_AS(buchberger(cyc5, MonomialOrder::lex(), wall), ResourceLimit);
}

TEST_CASE("FANO8_GB_BUDGET overrides max_pairs") {
    ::setenv("FANO8_GB_BUDGET", "1234", 1);
    CHECK(GbBudget::from_env().max_pairs == 1234);
    ::setenv("FANO8_GB_BUDGET", "junk", 1);
    CHECK(GbBudget::from_env().max_pairs == GbBudget{}.max_pairs);
    ::unsetenv("FANO8_GB_BUDGET");
    CHECK(GbBudget::from_env().max_pairs == GbBudget{}.max_pairs);
}

TEST_CASE("block order elimination structure") {
    Ring R(101, {"t", "x", "y"});
    // t is eliminated: basis elements free of t form a basis of the
    // elimination ideal
    Ideal I(R, parse_all(R, {"t^2 - x", "t^3 - y"}));
    GroebnerBasis gb = buchberger(I, MonomialOrder::block(1));
    bool found = false;
    for (const auto& g : gb.basis) {
        bool free_of_t = true;
        for (const auto& term : g.terms())
            if (term.mono[0] != 0) free_of_t = false;
        if (free_of_t) {
            found = true;
            // the twisted cubic relation x^3 = y^2
            CHECK(normal_form(parse_poly("x^3 - y^2", R), gb).is_zero());
        }
    }
    CHECK(found);
}
