// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the fano8 authors
#include "fano8/checks.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "fano8/bundles.hpp"
#include "fano8/error.hpp"
#include "fano8/frobenius.hpp"
#include "fano8/invariants.hpp"
#include "fano8/parse.hpp"
#include "fano8/pfaffian.hpp"
#include "fano8/plucker.hpp"
#include "fano8/quadric4.hpp"
#include "fano8/schubert.hpp"
#include "fano8/smooth.hpp"

namespace fano8 {

namespace {

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& s : parts) {
        if (!out.empty()) out += ",";
        out += s;
    }
    return out;
}

const std::vector<std::uint32_t> kSmallPrimes{2, 3, 5, 7};

CheckOutcome chk_pfaffian_klein() {
    Ring R(101, {"x", "y", "z", "v", "w"});
    const std::string cycle = "x^2*y + y^2*z + z^2*v + v^2*w + w^2*x";
    const Polynomial target = parse_poly(cycle, R);
    const Polynomial pf = pfaffian(klein_matrix(101));
    const std::string expected = "+-(" + cycle + ")";
    std::string computed =
        (pf == target || pf == -target) ? expected : print_poly(pf);
    return CheckOutcome::values(expected, std::move(computed));
}

CheckOutcome chk_plucker_generators() {
    Ideal I = plucker_ideal(6, PrimeField(2));
    return CheckOutcome::values("15", std::to_string(I.generators.size()));
}

CheckOutcome chk_plucker_dim() {
    std::vector<std::string> dims;
    for (std::uint32_t p : kSmallPrimes)
        dims.push_back(std::to_string(krull_dimension(plucker_ideal(6, PrimeField(p)))));
    return CheckOutcome::values("9,9,9,9", join(dims));
}

CheckOutcome chk_klein_section_generators() {
    Ideal I = klein_section(PrimeField(2));
    return CheckOutcome::values("15", std::to_string(I.generators.size()));
}

CheckOutcome chk_klein_section_dim() {
    std::vector<std::string> dims;
    for (std::uint32_t p : kSmallPrimes)
        dims.push_back(std::to_string(krull_dimension(klein_section(PrimeField(p)))));
    return CheckOutcome::values("4,4,4,4", join(dims));
}

CheckOutcome chk_smooth_klein() {
    std::vector<std::string> verdicts;
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u})
        verdicts.push_back(is_smooth_hypersurface(klein_cubic(p)) ? "true" : "false");
    return CheckOutcome::values("true,true,true,true,false", join(verdicts));
}

CheckOutcome chk_singular_point_p11() {
    auto pts = find_rational_points(jacobian_ideal(klein_cubic(11)));
    return CheckOutcome::values("singular point exists",
                                pts.empty() ? "no singular point"
                                            : "singular point exists");
}

CheckOutcome chk_fedder_p2_klein() {
    FedderVerdict v = fedder_general(klein_section(PrimeField(2)));
    return CheckOutcome::values("not-split", v.split ? "split" : "not-split");
}

CheckOutcome chk_fedder_p3_klein() {
    GbBudget budget = GbBudget::from_env();
    if (budget.wall_ms == 0) budget.wall_ms = 600'000;
    try {
        FedderVerdict v = fedder_general(klein_section(PrimeField(3)), budget);
        return CheckOutcome::values("split", v.split ? "split" : "not-split");
    } catch (const ResourceLimit& e) {
        return CheckOutcome::skip("split",
                                  std::string("resource budget exceeded: ") + e.what());
    }
}

CheckOutcome chk_schubert_degree() {
    std::int64_t d = schubert_integral(schubert_pow(SchubertClass::basis(1, 0), 8));
    return CheckOutcome::values("14", std::to_string(d));
}

CheckOutcome chk_univ_bundle_det() {
    auto [cK, cQ] = chern_universal();
    std::string computed = "c1(Q)=" + schubert_to_string(cQ[1]) +
                           "; c1(K)=" + schubert_to_string(cK[1]);
    return CheckOutcome::values("c1(Q)=s1; c1(K)=-s1", std::move(computed));
}

CheckOutcome chk_chern_wedge2_c1() {
    auto [cK, cQ] = chern_universal();
    (void)cQ;
    ChernList w = chern_wedge2(cK);
    return CheckOutcome::values("-3*s1", schubert_to_string(w[1]));
}

CheckOutcome chk_projbundle_wedge2k() {
    auto [cK, cQ] = chern_universal();
    (void)cQ;
    std::int64_t d = projbundle_integral(chern_wedge2(cK), 6, 1, 13);
    return CheckOutcome::values("3", std::to_string(d));
}

CheckOutcome chk_palatini_degree() {
    return CheckOutcome::values("4", std::to_string(palatini_degree(14, 5)));
}

CheckOutcome chk_quadric_degree() {
    auto H = QuadricClass::H();
    std::int64_t d = quadric4_integrate({H, H, H, H});
    return CheckOutcome::values("2", std::to_string(d));
}

CheckOutcome chk_veronese_products() {
    auto T = QuadricClass::veronese();
    auto H = QuadricClass::H();
    std::vector<std::string> vals{
        std::to_string(quadric4_integrate({T, H, H})),
        std::to_string(quadric4_integrate({T, QuadricClass::Vprime()})),
        std::to_string(quadric4_integrate({T, QuadricClass::V()}))};
    return CheckOutcome::values("4,3,1", join(vals));
}

CheckOutcome chk_weyl_h0_k1() {
    return CheckOutcome::values("15", std::to_string(weyl_h0(1)));
}

CheckOutcome chk_weyl_h0_k2() {
    return CheckOutcome::values("105", std::to_string(weyl_h0(2)));
}

CheckOutcome chk_blowup_curve() {
    BlowupInvariants b = blowup_curve(14, 5, 1);
    std::ostringstream os;
    os << "(" << b.kcube << ", " << b.k2e << ", " << b.ke2 << ", " << b.e3 << ")";
    return CheckOutcome::values("(4, 5, 0, -5)", os.str());
}

CheckOutcome chk_blowup_point() {
    return CheckOutcome::values("6", std::to_string(blowup_point(8)));
}

CheckOutcome chk_delta_genus() {
    std::vector<std::string> vals{std::to_string(delta_genus(3, 4, 5)),
                                  std::to_string(delta_genus(3, 2, 5))};
    return CheckOutcome::values("2,0", join(vals));
}

std::string tworay_render(const std::vector<TwoRaySolution>& sols) {
    if (sols.empty()) return "no integer solutions";
    std::ostringstream os;
    for (std::size_t i = 0; i < sols.size(); ++i) {
        if (i) os << ", ";
        os << "(" << sols[i].first << ", " << sols[i].second << ")";
    }
    return os.str();
}

CheckOutcome chk_tworay_flop() {
    auto sols = tworay_solutions(4, 5, 0, 14, TwoRayMode::flop);
    return CheckOutcome::values("no integer solutions", tworay_render(sols));
}

CheckOutcome chk_tworay_divisorial() {
    auto sols = tworay_solutions(4, 5, 0, 0, TwoRayMode::divisorial);
    return CheckOutcome::values("no integer solutions", tworay_render(sols));
}

} // namespace

const std::vector<CheckDef>& check_registry() {
    static const std::vector<CheckDef> registry = {
        {"pfaffian_klein", "e Klein cubic", false, chk_pfaffian_klein},
        {"plucker_generators", "e Klein cubic", false, chk_plucker_generators},
        {"plucker_dim_gr26", "e Klein cubic", false, chk_plucker_dim},
        {"klein_section_generators", "e Klein cubic", false,
         chk_klein_section_generators},
        {"klein_section_dim", "e Klein cubic", false, chk_klein_section_dim},
        {"smooth_klein", "e Klein cubic", false, chk_smooth_klein},
        {"singular_point_p11", "e Klein cubic", true, chk_singular_point_p11},
        {"fedder_p2_klein", "p p=2 non-F-split", true, chk_fedder_p2_klein},
        {"fedder_p3_klein", "t Fsplit optimal", true, chk_fedder_p3_klein},
        {"schubert_degree", "Remark on genus 8", false, chk_schubert_degree},
        {"univ_bundle_det", "l univ bdl det", false, chk_univ_bundle_det},
        {"chern_wedge2_c1", "l P(wedge^2K) GFR", false, chk_chern_wedge2_c1},
        {"projbundle_wedge2k", "l P(wedge^2K) GFR", false, chk_projbundle_wedge2k},
        {"palatini_degree", "p Palatini quartic", false, chk_palatini_degree},
        {"quadric_degree", "p quadric CH", false, chk_quadric_degree},
        {"veronese_products", "l Veronese V+3V′", false, chk_veronese_products},
        {"weyl_h0_k1", "l h0 compute", false, chk_weyl_h0_k1},
        {"weyl_h0_k2", "l h0 compute", false, chk_weyl_h0_k2},
        {"blowup_curve_klein", "l qell blowup basic", false, chk_blowup_curve},
        {"blowup_point_g8", "p birationality key", false, chk_blowup_point},
        {"delta_genus_branches", "p qell blowup main", false, chk_delta_genus},
        {"tworay_flop", "p qell blowup main", false, chk_tworay_flop},
        {"tworay_divisorial", "p-div-cont1", false, chk_tworay_divisorial},
    };
    return registry;
}

bool VerificationReport::all_passed() const {
    for (const auto& e : entries)
        if (e.status == "fail") return false;
    return true;
}

CheckResult run_check(const CheckDef& def) {
    CheckResult r;
    r.check_id = def.id;
    r.paper_anchor = def.anchor;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        CheckOutcome out = def.run();
        r.expected = out.expected;
        if (out.skipped) {
            r.computed = out.skip_reason;
            r.status = "skipped";
        } else {
            r.computed = out.computed;
            r.status = (out.expected == out.computed) ? "pass" : "fail";
        }
    } catch (const std::exception& e) {
        r.computed = std::string("error: ") + e.what();
        r.status = "fail";
    }
    const auto t1 = std::chrono::steady_clock::now();
    r.wall_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return r;
}

VerificationReport run_verify_paper(const std::string& profile) {
    if (profile != "quick" && profile != "full")
        throw Error("unknown profile: " + profile + " (expected quick or full)");
    VerificationReport report;
    report.profile = profile;
    for (const auto& def : check_registry()) {
        if (def.full_only && profile != "full") continue;
        report.entries.push_back(run_check(def));
    }
    return report;
}

std::string report_to_json(const VerificationReport& report) {
    nlohmann::ordered_json j;
    j["version"] = 1;
    j["profile"] = report.profile;
    j["entries"] = nlohmann::ordered_json::array();
    for (const auto& e : report.entries) {
        nlohmann::ordered_json je;
        je["check_id"] = e.check_id;
        je["paper_anchor"] = e.paper_anchor;
        je["expected"] = e.expected;
        je["computed"] = e.computed;
        je["status"] = e.status;
        je["wall_ms"] = e.wall_ms;
        j["entries"].push_back(std::move(je));
    }
    return j.dump(2) + "\n";
}

std::string report_to_text(const VerificationReport& report) {
    std::ostringstream os;
    std::size_t pass = 0, fail = 0, skip = 0;
    for (const auto& e : report.entries) {
        const char* tag = e.status == "pass"   ? "[pass]"
                          : e.status == "fail" ? "[FAIL]"
                                               : "[skip]";
        (e.status == "pass" ? pass : e.status == "fail" ? fail : skip) += 1;
        char buf[32];
        std::snprintf(buf, sizeof buf, "%6lld ms", static_cast<long long>(e.wall_ms));
        os << tag << " " << e.check_id;
        for (std::size_t pad = e.check_id.size(); pad < 26; ++pad) os << ' ';
        os << buf << "  expected: " << e.expected << "  computed: " << e.computed
           << "\n";
    }
    os << pass << " passed, " << fail << " failed, " << skip << " skipped ("
       << report.profile << " profile)\n";
    return os.str();
}

} // namespace fano8
