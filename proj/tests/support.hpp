// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the fano8 authors
#pragma once

#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "fano8/poly.hpp"
#include "fano8/schubert.hpp"

namespace testsupport {

// One fixed seed for every randomized suite; cases are reproducible runs.
inline constexpr std::uint64_t kSeed = 20260825;

using Rng = std::mt19937_64;

inline std::uint32_t nonzero_coeff(const fano8::PrimeField& F, Rng& rng) {
    std::uniform_int_distribution<std::uint32_t> d(1, F.p() - 1);
    return d(rng);
}

// Random polynomial with at most max_terms terms of total degree <= max_deg;
// may normalize to fewer terms but never to zero.
inline fano8::Polynomial random_poly(const fano8::Ring& R, Rng& rng,
                                     int max_terms, int max_deg) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> degd(0, max_deg);
    std::uniform_int_distribution<std::size_t> vard(0, R.nvars() - 1);
    for (;;) {
        std::vector<fano8::Term> terms;
        const int n = nterms(rng);
        for (int t = 0; t < n; ++t) {
            fano8::Monomial m(R.nvars(), 0);
            const int deg = degd(rng);
            for (int i = 0; i < deg; ++i) m[vard(rng)] += 1;
            terms.push_back({m, nonzero_coeff(R.field(), rng)});
        }
        fano8::Polynomial f(R, terms);
        if (!f.is_zero()) return f;
    }
}

// Random homogeneous polynomial of exact degree deg (nonzero).
inline fano8::Polynomial random_homogeneous(const fano8::Ring& R, Rng& rng,
                                            int deg, int max_terms) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<std::size_t> vard(0, R.nvars() - 1);
    for (;;) {
        std::vector<fano8::Term> terms;
        const int n = nterms(rng);
        for (int t = 0; t < n; ++t) {
            fano8::Monomial m(R.nvars(), 0);
            for (int i = 0; i < deg; ++i) m[vard(rng)] += 1;
            terms.push_back({m, nonzero_coeff(R.field(), rng)});
        }
        fano8::Polynomial f(R, terms);
        if (!f.is_zero()) return f;
    }
}

// ---------------------------------------------------------------------------
// Independent Schubert-product oracle: the Littlewood-Richardson rule for
// two-row partitions, evaluated by exhaustive enumeration of skew tableaux.
// Shares no code with the production Chow-ring model (which reduces in
// Z[s1, s11] via Giambelli); agreement on all 225 basis products is the
// cross-check.
// ---------------------------------------------------------------------------

struct TwoRow {
    int a, b; // a >= b >= 0
};

// Number of LR skew tableaux of shape lambda/mu with content nu: entries in
// {1, 2}, rows weakly increasing, columns strictly increasing, reverse
// reading word a lattice word.
inline int lr_count(TwoRow lambda, TwoRow mu, TwoRow nu) {
    if (mu.a > lambda.a || mu.b > lambda.b) return 0;
    const int cells1 = lambda.a - mu.a; // row 1 columns [mu.a, lambda.a)
    const int cells2 = lambda.b - mu.b; // row 2 columns [mu.b, lambda.b)
    if (cells1 + cells2 != nu.a + nu.b) return 0;
    const int total = cells1 + cells2;
    int count = 0;
    for (int mask = 0; mask < (1 << total); ++mask) {
        // bit c set = entry 2; row-1 cells first, then row-2 cells
        auto entry1 = [&](int c) { return ((mask >> c) & 1) + 1; };
        auto entry2 = [&](int c) { return ((mask >> (cells1 + c)) & 1) + 1; };
        int ones = 0, twos = 0;
        for (int c = 0; c < total; ++c) ((mask >> c) & 1 ? twos : ones) += 1;
        if (ones != nu.a || twos != nu.b) continue;
        bool ok = true;
        for (int c = 0; ok && c + 1 < cells1; ++c)
            if (entry1(c) > entry1(c + 1)) ok = false;
        for (int c = 0; ok && c + 1 < cells2; ++c)
            if (entry2(c) > entry2(c + 1)) ok = false;
        // column-strict: both rows occupy absolute column x when
        // mu.a <= x < lambda.b
        for (int x = mu.a; ok && x < lambda.b; ++x)
            if (entry1(x - mu.a) >= entry2(x - mu.b)) ok = false;
        // reverse reading word: row 1 right-to-left, then row 2 right-to-left
        if (ok) {
            int seen1 = 0, seen2 = 0;
            for (int c = cells1 - 1; c >= 0 && ok; --c) {
                (entry1(c) == 1 ? seen1 : seen2) += 1;
                if (seen2 > seen1) ok = false;
            }
            for (int c = cells2 - 1; c >= 0 && ok; --c) {
                (entry2(c) == 1 ? seen1 : seen2) += 1;
                if (seen2 > seen1) ok = false;
            }
        }
        if (ok) ++count;
    }
    return count;
}

// Product of basis classes in CH(Gr(2,6)) by the LR rule, truncating
// partitions that do not fit the 2 x 4 box.
inline fano8::SchubertClass lr_mul(TwoRow mu, TwoRow nu) {
    fano8::SchubertClass out = fano8::SchubertClass::zero();
    const int size = mu.a + mu.b + nu.a + nu.b;
    for (int e = 0; e <= 4; ++e)
        for (int f = 0; f <= e; ++f) {
            if (e + f != size) continue;
            int c = lr_count({e, f}, mu, nu);
            if (c != 0)
                out = out + fano8::SchubertClass::basis(e, f).scaled(c);
        }
    return out;
}

// ---------------------------------------------------------------------------
// Subprocess helper for CLI tests.
// ---------------------------------------------------------------------------

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Runs a shell command, capturing stdout; stderr is discarded.
inline RunResult run_cmd(const std::string& cmd) {
    RunResult r;
    FILE* p = ::popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!p) return r;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    const int status = ::pclose(p);
    if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    return r;
}

// Path of the fano8 binary under test (FANO8_BIN) or a data file directory
// (FANO8_DATA); fails the test when unset.
inline std::string env_path(const char* name) {
    const char* v = std::getenv(name);
    return v ? std::string(v) : std::string();
}

} // namespace testsupport
