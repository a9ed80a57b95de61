// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the fano8 authors
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <cstdlib>
#include <stdexcept>

#include "fano8/bundles.hpp"
#include "fano8/error.hpp"
#include "fano8/invariants.hpp"
#include "fano8/quadric4.hpp"
#include "fano8/schubert.hpp"

#include "../support.hpp"

using namespace fano8;
using testsupport::Rng;

namespace {

SchubertClass random_pure(int codim, Rng& rng) {
    std::uniform_int_distribution<std::int64_t> d(-5, 5);
    SchubertClass out = SchubertClass::zero();
    const auto& parts = schubert_partitions();
    for (std::size_t i = 0; i < kSchubertCount; ++i)
        if (parts[i].a + parts[i].b == codim)
            out = out + SchubertClass::basis(parts[i].a, parts[i].b).scaled(d(rng));
    return out;
}

} // namespace

TEST_CASE("basis bookkeeping") {
    CHECK(schubert_partitions().size() == 15);
    CHECK(schubert_index(0, 0) == 0);
    CHECK(schubert_index(4, 4) == 14);
    CHECK_THROWS_AS(schubert_index(5, 0), Error);
    CHECK_THROWS_AS(schubert_index(1, 2), Error);
    CHECK(SchubertClass::basis(2, 1).codimension() == 3);
    CHECK(SchubertClass::zero().codimension() == -1);
    SchubertClass mixed = SchubertClass::basis(1, 0) + SchubertClass::basis(2, 0);
    CHECK_THROWS_AS(mixed.codimension(), Error);
}

TEST_CASE("all 225 basis products match the Littlewood-Richardson oracle") {
    const auto& parts = schubert_partitions();
    for (const auto& mu : parts)
        for (const auto& nu : parts) {
            SchubertClass got = schubert_mul(SchubertClass::basis(mu.a, mu.b),
                                             SchubertClass::basis(nu.a, nu.b));
            SchubertClass want =
                testsupport::lr_mul({mu.a, mu.b}, {nu.a, nu.b});
            CHECK(got == want);
        }
}

TEST_CASE("pieri products") {
    SchubertClass s1 = SchubertClass::basis(1, 0);
    CHECK(schubert_mul(s1, s1) ==
          SchubertClass::basis(2, 0) + SchubertClass::basis(1, 1));
    CHECK(schubert_mul(s1, SchubertClass::basis(1, 1)) ==
          SchubertClass::basis(2, 1));
    CHECK(schubert_mul(SchubertClass::basis(4, 0), SchubertClass::basis(1, 0)) ==
          SchubertClass::basis(4, 1));
    CHECK(schubert_mul(SchubertClass::basis(4, 4), s1).is_zero());
}

TEST_CASE("poincare duality pairing") {
    const auto& parts = schubert_partitions();
    for (const auto& mu : parts)
        for (const auto& nu : parts) {
            if (mu.a + mu.b + nu.a + nu.b != 8) continue;
            std::int64_t pairing = schubert_integral(schubert_mul(
                SchubertClass::basis(mu.a, mu.b), SchubertClass::basis(nu.a, nu.b)));
            const bool dual = (nu.a == 4 - mu.b) && (nu.b == 4 - mu.a);
            CHECK(pairing == (dual ? 1 : 0));
        }
}

TEST_CASE("product is associative and commutative on random classes") {
    Rng rng(testsupport::kSeed);
    std::uniform_int_distribution<int> codim(0, 4);
    for (int i = 0; i < 100; ++i) {
        SchubertClass a = random_pure(codim(rng), rng);
        SchubertClass b = random_pure(codim(rng), rng);
        SchubertClass c = random_pure(codim(rng), rng);
        CHECK(schubert_mul(a, b) == schubert_mul(b, a));
        CHECK(schubert_mul(schubert_mul(a, b), c) ==
              schubert_mul(a, schubert_mul(b, c)));
        CHECK(schubert_mul(a, b + c) ==
              schubert_mul(a, b) + schubert_mul(a, c));
    }
}

TEST_CASE("degree of the grassmannian") {
    CHECK(schubert_integral(schubert_pow(SchubertClass::basis(1, 0), 8)) == 14);
    CHECK(schubert_pow(SchubertClass::basis(1, 0), 0) == SchubertClass::one());
}

TEST_CASE("schubert parsing and printing") {
    CHECK(schubert_to_string(SchubertClass::basis(2, 1)) == "s21");
    CHECK(schubert_to_string(SchubertClass::basis(3, 0)) == "s3");
    CHECK(schubert_to_string(SchubertClass::zero()) == "0");
    CHECK(schubert_to_string(SchubertClass::one().scaled(2)) == "2");
    SchubertClass m = SchubertClass::basis(2, 1).scaled(3) -
                      SchubertClass::basis(4, 4);
    CHECK(schubert_to_string(m) == "3*s21 - s44");

    CHECK(*schubert_parse("s1^8") ==
          schubert_pow(SchubertClass::basis(1, 0), 8));
    CHECK(*schubert_parse("s21*s21*s2") ==
          schubert_mul(schubert_mul(SchubertClass::basis(2, 1),
                                    SchubertClass::basis(2, 1)),
                       SchubertClass::basis(2, 0)));
    CHECK(*schubert_parse("3*s44") == SchubertClass::basis(4, 4).scaled(3));
    CHECK(!schubert_parse("s5").has_value());
    CHECK(!schubert_parse("s12").has_value()); // 1 < 2 is not a partition
    CHECK(!schubert_parse("s1 s2").has_value());
    CHECK(!schubert_parse("").has_value());
}

TEST_CASE("universal bundle chern classes") {
    auto [cK, cQ] = chern_universal();
    CHECK(cK.size() == 5);
    CHECK(cQ.size() == 3);
    CHECK(cK[0] == SchubertClass::one());
    CHECK(cK[1] == -SchubertClass::basis(1, 0));
    CHECK(cQ[1] == SchubertClass::basis(1, 0));
    CHECK(cQ[2] == SchubertClass::basis(1, 1));
    // c(K) c(Q) = 1: the convolution vanishes in every positive codimension
    for (int d = 1; d <= 8; ++d) {
        SchubertClass sum = SchubertClass::zero();
        for (int i = 0; i <= d; ++i) {
            if (i >= static_cast<int>(cK.size())) continue;
            if (d - i >= static_cast<int>(cQ.size())) continue;
            sum = sum + schubert_mul(cK[i], cQ[d - i]);
        }
        CHECK(sum.is_zero());
    }
}

TEST_CASE("wedge squared chern classes") {
    auto [cK, cQ] = chern_universal();
    (void)cQ;
    ChernList w = chern_wedge2(cK);
    CHECK(w.size() == 7); // rank C(4,2) = 6
    CHECK(w[0] == SchubertClass::one());
    CHECK(w[1] == SchubertClass::basis(1, 0).scaled(-3));
    CHECK(w[2] == SchubertClass::basis(2, 0).scaled(5) +
                      SchubertClass::basis(1, 1).scaled(3));
    CHECK(w[3] == SchubertClass::basis(3, 0).scaled(-5) +
                      SchubertClass::basis(2, 1).scaled(-6));
    CHECK(w[4] == SchubertClass::basis(3, 1).scaled(6) +
                      SchubertClass::basis(2, 2).scaled(3));
    CHECK(w[5] == SchubertClass::basis(3, 2).scaled(-3));
    CHECK(w[6].is_zero());
    // c1 of wedge^2 E is (r - 1) c1(E) for any rank r
    CHECK(w[1] == cK[1].scaled(3));
}

TEST_CASE("wedge squared of a rank-2 bundle is its determinant") {
    // E of rank 2: wedge^2 E is a line bundle with c1 = c1(E)
    ChernList cE{SchubertClass::one(), SchubertClass::basis(1, 0),
                 SchubertClass::basis(1, 1)};
    ChernList w = chern_wedge2(cE);
    CHECK(w.size() == 2);
    CHECK(w[0] == SchubertClass::one());
    CHECK(w[1] == SchubertClass::basis(1, 0));
    CHECK_THROWS_AS(chern_wedge2(ChernList{SchubertClass::one()}), Error);
}

TEST_CASE("segre inversion") {
    auto [cK, cQ] = chern_universal();
    // c(K) c(Q) = 1 means s(K) = c(Q)
    ChernList sK = segre_inverse(cK, 8);
    for (int i = 0; i <= 8; ++i) {
        SchubertClass want = (i < static_cast<int>(cQ.size()))
                                 ? cQ[i]
                                 : SchubertClass::zero();
        CHECK(sK[i] == want);
    }
    // random chern lists: the defining identity s(E) c(E) = 1
    Rng rng(testsupport::kSeed + 4);
    for (int trial = 0; trial < 100; ++trial) {
        ChernList cE{SchubertClass::one()};
        for (int d = 1; d <= 4; ++d) cE.push_back(random_pure(d, rng));
        ChernList sE = segre_inverse(cE, 8);
        for (int d = 1; d <= 8; ++d) {
            SchubertClass sum = SchubertClass::zero();
            for (int i = 0; i <= d; ++i) {
                if (i >= static_cast<int>(cE.size())) continue;
                if (d - i > 8) continue;
                sum = sum + schubert_mul(cE[i], sE[d - i]);
            }
            CHECK(sum.is_zero());
        }
    }
}

TEST_CASE("projective bundle integrals") {
    auto [cK, cQ] = chern_universal();
    (void)cQ;
    ChernList w = chern_wedge2(cK);
    CHECK(projbundle_integral(w, 6, 1, 13) == 3);
    // fiber normalization: integral of xi^{r-1} over a fiber is 1
    CHECK(projbundle_integral(w, 6, 0, 5) == 1);
    CHECK(projbundle_integral(cK, 4, 0, 3) == 1);
    CHECK_THROWS_AS(projbundle_integral(w, 6, 1, 5), DimensionMismatch);
    CHECK_THROWS_AS(projbundle_integral(w, 6, 1, 12), DimensionMismatch);
}

TEST_CASE("palatini degree") {
    CHECK(palatini_degree(14, 5) == 4);
    CHECK(palatini_degree(0, 0) == 0);
    CHECK(palatini_degree(10, 5) == 0);
}

TEST_CASE("quadric fourfold table") {
    auto H = QuadricClass::H();
    auto V = QuadricClass::V();
    auto Vp = QuadricClass::Vprime();
    CHECK(quadric4_mul(H, H) == V + Vp);
    CHECK(quadric4_mul(V, V) == QuadricClass::point());
    CHECK(quadric4_mul(V, Vp).is_zero());
    CHECK(quadric4_mul(H, V) == QuadricClass::line());
    CHECK(quadric4_mul(QuadricClass::line(), H) == QuadricClass::point());
    CHECK(quadric4_integrate({H, H, H, H}) == 2);
    CHECK(quadric4_integrate({H, H, V}) == 1);
    auto T = QuadricClass::veronese();
    CHECK(quadric4_integrate({T, H, H}) == 4);
    CHECK(quadric4_integrate({T, Vp}) == 3);
    CHECK(quadric4_integrate({T, V}) == 1);
    CHECK(quadric4_integrate({H, QuadricClass{}, H}) == 0);
    CHECK_THROWS_AS(quadric4_integrate({H, H}), CodimMismatch);
    CHECK_THROWS_AS(quadric4_integrate({H, H, H, H, H}), CodimMismatch);
}

TEST_CASE("quadric multiplication is commutative and associative") {
    std::vector<QuadricClass> basis{QuadricClass::one(),   QuadricClass::H(),
                                    QuadricClass::V(),     QuadricClass::Vprime(),
                                    QuadricClass::line(),  QuadricClass::point()};
    for (const auto& a : basis)
        for (const auto& b : basis) {
            CHECK(quadric4_mul(a, b) == quadric4_mul(b, a));
            for (const auto& c : basis)
                CHECK(quadric4_mul(quadric4_mul(a, b), c) ==
                      quadric4_mul(a, quadric4_mul(b, c)));
        }
}

TEST_CASE("blowup invariants") {
    BlowupInvariants b = blowup_curve(14, 5, 1);
    CHECK(b == BlowupInvariants{4, 5, 0, -5});
    CHECK(blowup_curve(14, 0, 0) == BlowupInvariants{12, 2, -2, 2});
    Rng rng(testsupport::kSeed + 5);
    std::uniform_int_distribution<std::int64_t> d(-30, 30);
    for (int i = 0; i < 100; ++i) {
        std::int64_t g = d(rng);
        BlowupInvariants r = blowup_curve(d(rng), d(rng), g);
        CHECK(r.k2e + r.e3 == 4 - 4 * g);
        CHECK(r.ke2 == 2 * g - 2);
    }
    CHECK(blowup_point(8) == 6);
    CHECK(blowup_point(5) == 0);
    CHECK(blowup_point(12) == 14);
    CHECK_THROWS_AS(blowup_point(4), Error);
}

TEST_CASE("delta genus") {
    CHECK(delta_genus(3, 4, 5) == 2);
    CHECK(delta_genus(3, 2, 5) == 0);
    CHECK(delta_genus(0, 0, 1) == -1);
}

TEST_CASE("weyl dimension values") {
    const std::int64_t expect[] = {1,    15,    105,   490,  1764,
                                   5292, 13860, 32670, 70785};
    for (int k = 0; k <= 8; ++k) CHECK(weyl_h0(k) == expect[k]);
    CHECK_THROWS_AS(weyl_h0(-1), Error);
}

TEST_CASE("weyl dimension is a degree-8 polynomial with leading term 14/8!") {
    // 9th finite difference vanishes, 8th equals 8! * (14 / 8!) = 14
    std::int64_t h[10];
    for (int k = 0; k < 10; ++k) h[k] = weyl_h0(k);
    for (int step = 0; step < 8; ++step)
        for (int k = 0; k + 1 < 10 - step; ++k) h[k] = h[k + 1] - h[k];
    CHECK(h[0] == 14); // 8th difference at 0
    CHECK(h[1] == 14); // 8th difference at 1 (degree exactly 8)
}

TEST_CASE("two-ray reference cases") {
    CHECK(tworay_solutions(4, 5, 0, 14, TwoRayMode::flop).empty());
    CHECK(tworay_solutions(4, 5, 0, 0, TwoRayMode::divisorial).empty());
    auto div2 = tworay_solutions(5, 10, 0, 0, TwoRayMode::divisorial);
    REQUIRE(div2.size() == 2);
    CHECK(div2[0] == TwoRaySolution{2, 1});
    CHECK(div2[1] == TwoRaySolution{4, 2});
    // g^2 - 2gb = 3: g divides 3, so g = 3, b = 1
    auto flop1 = tworay_solutions(1, 1, 0, 3, TwoRayMode::flop);
    REQUIRE(flop1.size() == 1);
    CHECK(flop1[0] == TwoRaySolution{3, 1});
    // 2g^2 - 2gb = 16: g in {4, 8} work
    auto flop2 = tworay_solutions(2, 1, 0, 16, TwoRayMode::flop);
    REQUIRE(flop2.size() == 2);
    CHECK(flop2[0] == TwoRaySolution{4, 2});
    CHECK(flop2[1] == TwoRaySolution{8, 7});
}

TEST_CASE("two-ray unbounded families are refused") {
    // g^2 = 4 with b free
    CHECK_THROWS_AS(tworay_solutions(1, 0, 0, 4, TwoRayMode::flop),
                    std::invalid_argument);
    // g = 2b ray through the cone
    CHECK_THROWS_AS(tworay_solutions(1, 1, 0, 0, TwoRayMode::flop),
                    std::invalid_argument);
    // opposite signs: the target-zero ray misses the g, b > 0 quadrant
    CHECK(tworay_solutions(1, -1, 0, 0, TwoRayMode::flop).empty());
    // 0 = 0 in the divisorial equation
    CHECK_THROWS_AS(tworay_solutions(0, 0, 0, 5, TwoRayMode::divisorial),
                    std::invalid_argument);
    CHECK(tworay_solutions(0, 3, 0, 0, TwoRayMode::divisorial).empty());
}

TEST_CASE("two-ray solver matches a wide brute force window") {
    Rng rng(testsupport::kSeed + 6);
    std::uniform_int_distribution<std::int64_t> kd(1, 10), k2d(-5, 5),
        td(-20, 60), modepick(0, 2);
    int done = 0;
    while (done < 100) {
        std::int64_t kcube = kd(rng), k2e = k2d(rng), ke2 = 0, target = td(rng);
        TwoRayMode mode = TwoRayMode::flop;
        const int pick = static_cast<int>(modepick(rng));
        if (pick == 0) {
            mode = TwoRayMode::divisorial;
            kcube = k2d(rng);
            k2e = k2d(rng);
            if (kcube == 0) continue;
        } else if (pick == 1) {
            if (target == 0) continue; // unbounded family regime
        } else {
            // positive definite quadratic form
            ke2 = (k2e * k2e) / kcube + 1 + kd(rng);
        }
        std::vector<TwoRaySolution> got;
        try {
            got = tworay_solutions(kcube, k2e, ke2, target, mode);
        } catch (const std::invalid_argument&) {
            continue; // solver refuses unbounded families; not comparable
        }
        std::vector<TwoRaySolution> want;
        if (mode == TwoRayMode::divisorial) {
            for (std::int64_t beta = 1; beta <= 2; ++beta)
                for (std::int64_t alpha = 1; alpha <= 4000; ++alpha)
                    if (kcube * alpha == k2e * beta)
                        want.push_back({alpha, beta});
        } else {
            const std::int64_t window =
                10 * (std::abs(target) + std::abs(kcube) + 2 * std::abs(k2e) +
                      std::abs(ke2) + 4);
            for (std::int64_t g = 2; g <= window; ++g)
                for (std::int64_t b = 1; b <= window; ++b)
                    if (kcube * g * g - 2 * k2e * g * b + ke2 * b * b == target)
                        want.push_back({g, b});
        }
        CHECK(got == want);
        ++done;
    }
}
