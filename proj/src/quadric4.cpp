// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the fano8 authors
#include "fano8/quadric4.hpp"

#include "fano8/error.hpp"

namespace fano8 {

QuadricClass QuadricClass::operator+(const QuadricClass& o) const {
    return {q + o.q, h + o.h, v + o.v, vp + o.vp, l + o.l, pt + o.pt};
}

QuadricClass QuadricClass::operator-(const QuadricClass& o) const {
    return {q - o.q, h - o.h, v - o.v, vp - o.vp, l - o.l, pt - o.pt};
}

QuadricClass QuadricClass::scaled(std::int64_t c) const {
    return {q * c, h * c, v * c, vp * c, l * c, pt * c};
}

bool QuadricClass::is_zero() const {
    return q == 0 && h == 0 && v == 0 && vp == 0 && l == 0 && pt == 0;
}

int QuadricClass::codimension() const {
    int d = -1;
    auto see = [&](std::int64_t c, int dc) {
        if (c == 0) return;
        if (d == -1) d = dc;
        else if (d != dc) throw Error("mixed-codimension quadric class");
    };
    see(q, 0);
    see(h, 1);
    see(v, 2);
    see(vp, 2);
    see(l, 3);
    see(pt, 4);
    return d;
}

QuadricClass quadric4_mul(const QuadricClass& a, const QuadricClass& b) {
    QuadricClass r;
    // identity component
    r = b.scaled(a.q) + a.scaled(b.q);
    r.q = a.q * b.q; // counted twice above minus the product
    // H * H = V + V'; H * V = H * V' = line; H * line = point
    r.v += a.h * b.h;
    r.vp += a.h * b.h;
    r.l += a.h * (b.v + b.vp) + b.h * (a.v + a.vp);
    r.pt += a.h * b.l + b.h * a.l;
    // V^2 = V'^2 = point, V V' = 0
    r.pt += a.v * b.v + a.vp * b.vp;
    return r;
}

std::int64_t quadric4_integrate(const std::vector<QuadricClass>& factors) {
    int total = 0;
    for (const auto& f : factors) {
        if (f.is_zero()) return 0;
        total += f.codimension();
    }
    if (total != 4)
        throw CodimMismatch("total codimension " + std::to_string(total) +
                            " != 4");
    QuadricClass acc = QuadricClass::one();
    for (const auto& f : factors) acc = quadric4_mul(acc, f);
    return acc.pt;
}

} // namespace fano8
