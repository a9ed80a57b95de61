// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the fano8 authors
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace fano8 {

// One verification check: recomputes a published value and renders both the
// reference value and the recomputed one as strings. A check may declare
// itself skipped (resource budget) instead of returning a value pair.
struct CheckOutcome {
    std::string expected;
    std::string computed;
    bool skipped = false;
    std::string skip_reason;

    static CheckOutcome values(std::string expected, std::string computed) {
        return {std::move(expected), std::move(computed), false, {}};
    }
    static CheckOutcome skip(std::string expected, std::string reason) {
        return {std::move(expected), {}, true, std::move(reason)};
    }
};

struct CheckDef {
    std::string id;
    std::string anchor;    // source label carried verbatim into reports
    bool full_only = false; // excluded from the quick profile
    std::function<CheckOutcome()> run;
};

// Fixed registration order; shared by the CLI and the acceptance suite.
const std::vector<CheckDef>& check_registry();

struct CheckResult {
    std::string check_id;
    std::string paper_anchor;
    std::string expected;
    std::string computed;
    std::string status; // "pass" | "fail" | "skipped"
    std::int64_t wall_ms = 0;
};

struct VerificationReport {
    std::string profile; // "quick" | "full"
    std::vector<CheckResult> entries;

    bool all_passed() const; // no "fail" entries ("skipped" is not a failure)
};

// Runs one check, timing it; exceptions become a "fail" entry, never abort.
CheckResult run_check(const CheckDef& def);

// profile "quick" runs every check not marked full_only; "full" runs all.
// Any other profile name throws Error.
VerificationReport run_verify_paper(const std::string& profile);

// {"version":1,"profile":...,"entries":[{check_id,paper_anchor,expected,
//  computed,status,wall_ms}]} with fixed key order, 2-space indent.
std::string report_to_json(const VerificationReport& report);

// One aligned human-readable line per entry plus a summary line.
std::string report_to_text(const VerificationReport& report);

} // namespace fano8
