// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the fano8 authors
//
// Python bindings: strings and plain containers in, plain data out. The
// polynomial types stay internal; callers pass generator strings and a ring
// description (p, variable names).
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fano8/bundles.hpp"
#include "fano8/checks.hpp"
#include "fano8/error.hpp"
#include "fano8/frobenius.hpp"
#include "fano8/invariants.hpp"
#include "fano8/parse.hpp"
#include "fano8/pfaffian.hpp"
#include "fano8/plucker.hpp"
#include "fano8/schubert.hpp"
#include "fano8/smooth.hpp"

namespace py = pybind11;
using namespace fano8;

namespace {

Ideal make_ideal(std::uint32_t p, const std::vector<std::string>& vars,
                 const std::vector<std::string>& gens) {
    Ring R(p, vars);
    std::vector<Polynomial> ps;
    ps.reserve(gens.size());
    for (const auto& g : gens) ps.push_back(parse_poly(g, R));
    return Ideal(R, std::move(ps));
}

std::vector<std::string> print_all(const std::vector<Polynomial>& ps) {
    std::vector<std::string> out;
    out.reserve(ps.size());
    for (const auto& f : ps) out.push_back(print_poly(f));
    return out;
}

py::dict verdict_dict(const FedderVerdict& v) {
    py::dict d;
    d["split"] = v.split;
    d["witness"] = v.witness ? py::object(py::str(print_poly(*v.witness)))
                             : py::object(py::none());
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact computer algebra for genus-8 Fano threefold verification";
    py::register_exception<Error>(m, "Fano8Error");

    m.def(
        "klein_cubic",
        [](std::uint32_t p) { return print_poly(klein_cubic(p)); }, py::arg("p"),
        "Pfaffian cubic of the Klein 6x6 alternating matrix over F_p");

    m.def(
        "plucker_generators",
        [](std::size_t n, std::uint32_t p) {
            return print_all(plucker_ideal(n, PrimeField(p)).generators);
        },
        py::arg("n") = 6, py::arg("p") = 2,
        "quadratic generators of the Plucker ideal of Gr(2,n)");

    m.def(
        "klein_section_generators",
        [](std::uint32_t p) {
            return print_all(klein_section(PrimeField(p)).generators);
        },
        py::arg("p"),
        "Plucker quadrics restricted to the 10-variable Klein section");

    m.def(
        "groebner",
        [](std::uint32_t p, const std::vector<std::string>& vars,
           const std::vector<std::string>& gens, const std::string& order) {
            GroebnerBasis gb =
                buchberger(make_ideal(p, vars, gens), MonomialOrder::parse(order));
            return print_all(gb.basis);
        },
        py::arg("p"), py::arg("vars"), py::arg("gens"),
        py::arg("order") = "degrevlex",
        "reduced Groebner basis (orders: degrevlex, lex, block:<k>)");

    m.def(
        "krull_dim",
        [](std::uint32_t p, const std::vector<std::string>& vars,
           const std::vector<std::string>& gens) {
            return krull_dimension(make_ideal(p, vars, gens));
        },
        py::arg("p"), py::arg("vars"), py::arg("gens"),
        "affine Krull dimension of the quotient ring");

    m.def(
        "fedder",
        [](std::uint32_t p, const std::vector<std::string>& vars,
           const std::vector<std::string>& gens) {
            return verdict_dict(fedder_general(make_ideal(p, vars, gens)));
        },
        py::arg("p"), py::arg("vars"), py::arg("gens"),
        "F-splitting verdict {'split': bool, 'witness': str | None}");

    m.def(
        "fedder_klein",
        [](std::uint32_t p) {
            return verdict_dict(fedder_general(klein_section(PrimeField(p))));
        },
        py::arg("p"), "F-splitting verdict for the Klein section over F_p");

    m.def(
        "is_smooth",
        [](std::uint32_t p, const std::vector<std::string>& vars,
           const std::string& poly) {
            return is_smooth_hypersurface(parse_poly(poly, Ring(p, vars)));
        },
        py::arg("p"), py::arg("vars"), py::arg("poly"),
        "projective smoothness of a homogeneous hypersurface");

    m.def(
        "smooth_klein",
        [](std::uint32_t p) { return is_smooth_hypersurface(klein_cubic(p)); },
        py::arg("p"));

    m.def(
        "rational_points",
        [](std::uint32_t p, const std::vector<std::string>& vars,
           const std::vector<std::string>& gens, std::uint64_t max_points) {
            return find_rational_points(make_ideal(p, vars, gens), max_points);
        },
        py::arg("p"), py::arg("vars"), py::arg("gens"),
        py::arg("max_points") = 10'000'000,
        "normalized projective zeros over F_p, lexicographically sorted");

    m.def(
        "klein_singular_points",
        [](std::uint32_t p) {
            return find_rational_points(jacobian_ideal(klein_cubic(p)));
        },
        py::arg("p"), "singular locus of the Klein cubic in P^4(F_p)");

    m.def(
        "schubert_integral",
        [](const std::string& expr) {
            auto cls = schubert_parse(expr);
            if (!cls) throw Error("cannot parse Schubert expression: " + expr);
            return schubert_integral(*cls);
        },
        py::arg("expr"),
        "integral over Gr(2,6) of a Schubert product such as 's1^8'");

    m.def(
        "projbundle_wedge2k",
        [](int twist, int power) {
            auto [cK, cQ] = chern_universal();
            (void)cQ;
            return projbundle_integral(chern_wedge2(cK), 6, twist, power);
        },
        py::arg("twist"), py::arg("power"),
        "integral of (xi + twist * pi^* s1)^power over P(wedge^2 K)");

    m.def("palatini", &palatini_degree, py::arg("c1cube"), py::arg("c1c2"),
          "tautological divisor degree s3 = c1^3 - 2 c1 c2");

    m.def("weyl_h0", &weyl_h0, py::arg("k"), "h^0(Gr(2,6), O(k))");

    m.def(
        "blowup_curve",
        [](std::int64_t kcube, std::int64_t d, std::int64_t g) {
            BlowupInvariants b = blowup_curve(kcube, d, g);
            return py::make_tuple(b.kcube, b.k2e, b.ke2, b.e3);
        },
        py::arg("kcube"), py::arg("d"), py::arg("g"),
        "((-K)^3, (-K)^2 E, (-K) E^2, E^3) of a curve blowup");

    m.def("blowup_point", &blowup_point, py::arg("g"));

    m.def("delta_genus", &delta_genus, py::arg("dim"), py::arg("A3"),
          py::arg("h0"));

    m.def(
        "tworay",
        [](std::int64_t kcube, std::int64_t k2e, std::int64_t ke2,
           std::int64_t target, const std::string& mode) {
            TwoRayMode md;
            if (mode == "flop")
                md = TwoRayMode::flop;
            else if (mode == "divisorial")
                md = TwoRayMode::divisorial;
            else
                throw Error("mode must be flop or divisorial");
            std::vector<std::pair<std::int64_t, std::int64_t>> out;
            for (const auto& s : tworay_solutions(kcube, k2e, ke2, target, md))
                out.emplace_back(s.first, s.second);
            return out;
        },
        py::arg("kcube"), py::arg("k2e"), py::arg("ke2"), py::arg("target") = 0,
        py::arg("mode") = "flop", "integer solutions of the two-ray equations");

    m.def(
        "verify_paper_json",
        [](const std::string& profile) {
            return report_to_json(run_verify_paper(profile));
        },
        py::arg("profile") = "quick",
        "run the verification checks, returning the JSON report text");
}
