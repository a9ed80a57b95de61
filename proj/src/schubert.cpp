// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the fano8 authors
#include "fano8/schubert.hpp"

#include <cctype>
#include <numeric>

#include "fano8/error.hpp"

namespace fano8 {

namespace {

// Exact rational scalar for the basis-change solves; intermediate linear
// algebra is rational, final Schubert coordinates must come out integral.
struct Rat {
    std::int64_t n = 0, d = 1;

    Rat() = default;
    Rat(std::int64_t num) : n(num), d(1) {}
    Rat(std::int64_t num, std::int64_t den) : n(num), d(den) { norm(); }

    void norm() {
        if (d == 0) throw Error("rational division by zero");
        if (d < 0) { n = -n; d = -d; }
        std::int64_t g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
    }
    static Rat make(__int128 num, __int128 den) {
        if (den < 0) { num = -num; den = -den; }
        __int128 a = num < 0 ? -num : num, b = den;
        while (b) { __int128 t = a % b; a = b; b = t; }
        if (a > 1) { num /= a; den /= a; }
        constexpr __int128 lim = 0x7fffffffffffffffll;
        if (num > lim || num < -lim || den > lim)
            throw Error("rational overflow in Schubert basis change");
        Rat r;
        r.n = static_cast<std::int64_t>(num);
        r.d = static_cast<std::int64_t>(den);
        return r;
    }
    Rat operator+(const Rat& o) const {
        return make(static_cast<__int128>(n) * o.d + static_cast<__int128>(o.n) * d,
                    static_cast<__int128>(d) * o.d);
    }
    Rat operator-(const Rat& o) const {
        return make(static_cast<__int128>(n) * o.d - static_cast<__int128>(o.n) * d,
                    static_cast<__int128>(d) * o.d);
    }
    Rat operator*(const Rat& o) const {
        return make(static_cast<__int128>(n) * o.n, static_cast<__int128>(d) * o.d);
    }
    Rat operator/(const Rat& o) const {
        return make(static_cast<__int128>(n) * o.d, static_cast<__int128>(d) * o.n);
    }
    bool is_zero() const { return n == 0; }
};

// Degree-d slice of Z[g1, g2] with deg g1 = 1, deg g2 = 2: index j holds the
// coefficient of g1^{d-2j} g2^j.
using Slice = std::vector<std::int64_t>;

Slice slice_zero(int d) { return Slice(static_cast<std::size_t>(d / 2 + 1), 0); }

Slice slice_conv(const Slice& x, const Slice& y, int dx, int dy) {
    Slice out = slice_zero(dx + dy);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
    }
    return out;
}

void slice_acc(Slice& dst, const Slice& src, std::int64_t c) {
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] += c * src[i];
}

constexpr int kTopCodim = 8;

struct Tables {
    std::array<SchubertPartition, kSchubertCount> parts;
    std::array<Slice, 7> h;                       // h_0..h_6, h_m = s_{m,0} lift
    std::array<Slice, kSchubertCount> rep;        // Giambelli lifts, degree a+b
    // per degree: partition indices, matrix inverse (columns: partitions,
    // then relation multiples), so solve is one matrix-vector product
    struct Deg {
        std::vector<std::size_t> parts;
        std::vector<std::vector<Rat>> inv;
    };
    std::array<Deg, kTopCodim + 1> deg;

    Tables() {
        std::size_t k = 0;
        for (int codim = 0; codim <= 8; ++codim)
            for (int a = 4; a >= 0; --a) {
                int b = codim - a;
                if (b >= 0 && b <= a) parts[k++] = {a, b};
            }

        // h_m = g1 h_{m-1} - g2 h_{m-2}
        h[0] = {1};
        h[1] = {1};
        for (int m = 2; m <= 6; ++m) {
            h[m] = slice_zero(m);
            for (std::size_t j = 0; j < h[m - 1].size(); ++j)
                h[m][j] += h[m - 1][j];
            for (std::size_t j = 0; j < h[m - 2].size(); ++j)
                h[m][j + 1] -= h[m - 2][j];
        }

        // Giambelli: s_{a,b} = h_a h_b - h_{a+1} h_{b-1} (as exact symmetric
        // function identities in two variables, no quotient involved)
        for (std::size_t i = 0; i < kSchubertCount; ++i) {
            auto [a, b] = parts[i];
            Slice r = slice_conv(h[a], h[b], a, b);
            if (b >= 1) {
                Slice s = slice_conv(h[a + 1], h[b - 1], a + 1, b - 1);
                for (std::size_t j = 0; j < s.size(); ++j) r[j] -= s[j];
            }
            rep[i] = std::move(r);
        }

        for (int d = 0; d <= kTopCodim; ++d) build_degree(d);
    }

    void build_degree(int d) {
        auto& D = deg[d];
        for (std::size_t i = 0; i < kSchubertCount; ++i)
            if (parts[i].a + parts[i].b == d) D.parts.push_back(i);
        const std::size_t m = static_cast<std::size_t>(d / 2 + 1);

        // columns: Schubert lifts of codimension d, then g1^x g2^j-multiples
        // of the relations h5 and h6
        std::vector<Slice> cols;
        for (std::size_t i : D.parts) cols.push_back(rep[i]);
        for (int rel = 5; rel <= 6; ++rel) {
            if (d < rel) continue;
            const int rem = d - rel;
            for (int j = 0; 2 * j <= rem; ++j) {
                Slice mono = slice_zero(rem);
                mono[static_cast<std::size_t>(j)] = 1;
                cols.push_back(slice_conv(h[rel], mono, rel, rem));
            }
        }
        if (cols.size() != m)
            throw Error("internal: Schubert basis column count mismatch");

        // invert the m x m matrix by Gauss-Jordan over Q
        std::vector<std::vector<Rat>> A(m, std::vector<Rat>(2 * m));
        for (std::size_t r = 0; r < m; ++r) {
            for (std::size_t c = 0; c < m; ++c) A[r][c] = Rat(cols[c][r]);
            A[r][m + r] = Rat(1);
        }
        for (std::size_t c = 0; c < m; ++c) {
            std::size_t piv = c;
            while (piv < m && A[piv][c].is_zero()) ++piv;
            if (piv == m) throw Error("internal: singular Schubert basis matrix");
            std::swap(A[c], A[piv]);
            Rat inv_p = Rat(1) / A[c][c];
            for (auto& v : A[c]) v = v * inv_p;
            for (std::size_t r = 0; r < m; ++r) {
                if (r == c || A[r][c].is_zero()) continue;
                Rat f = A[r][c];
                for (std::size_t cc = 0; cc < 2 * m; ++cc)
                    A[r][cc] = A[r][cc] - f * A[c][cc];
            }
        }
        D.inv.assign(m, std::vector<Rat>(m));
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < m; ++c) D.inv[r][c] = A[r][m + c];
    }
};

const Tables& tables() {
    static const Tables t;
    return t;
}

// graded element of Z[g1,g2] truncated beyond codimension 8
struct Graded {
    std::array<Slice, kTopCodim + 1> comp;
    Graded() {
        for (int d = 0; d <= kTopCodim; ++d) comp[d] = slice_zero(d);
    }
};

Graded lift(const SchubertClass& x) {
    const Tables& T = tables();
    Graded g;
    for (std::size_t i = 0; i < kSchubertCount; ++i) {
        if (x.coeff[i] == 0) continue;
        int d = T.parts[i].a + T.parts[i].b;
        slice_acc(g.comp[d], T.rep[i], x.coeff[i]);
    }
    return g;
}

// solve the degree-d slice back into Schubert coordinates; the relation
// coefficients are discarded and the Schubert part must be integral
void unlift_degree(int d, const Slice& v, SchubertClass& out) {
    const Tables::Deg& D = tables().deg[d];
    const std::size_t m = v.size();
    bool all_zero = true;
    for (auto c : v)
        if (c != 0) { all_zero = false; break; }
    if (all_zero) return;
    for (std::size_t r = 0; r < D.parts.size(); ++r) {
        Rat acc;
        for (std::size_t c = 0; c < m; ++c)
            acc = acc + D.inv[r][c] * Rat(v[c]);
        if (acc.d != 1)
            throw Error("non-integral Schubert coordinate (internal inconsistency)");
        out.coeff[D.parts[r]] += acc.n;
    }
}

} // namespace

const std::array<SchubertPartition, kSchubertCount>& schubert_partitions() {
    return tables().parts;
}

std::size_t schubert_index(int a, int b) {
    const auto& P = tables().parts;
    for (std::size_t i = 0; i < kSchubertCount; ++i)
        if (P[i].a == a && P[i].b == b) return i;
    throw Error("invalid Schubert partition (" + std::to_string(a) + "," +
                std::to_string(b) + ")");
}

SchubertClass SchubertClass::basis(int a, int b) {
    SchubertClass r;
    r.coeff[schubert_index(a, b)] = 1;
    return r;
}

bool SchubertClass::is_zero() const {
    for (auto c : coeff)
        if (c != 0) return false;
    return true;
}

int SchubertClass::codimension() const {
    const auto& P = schubert_partitions();
    int d = -1;
    for (std::size_t i = 0; i < kSchubertCount; ++i) {
        if (coeff[i] == 0) continue;
        int di = P[i].a + P[i].b;
        if (d == -1) d = di;
        else if (d != di) throw Error("mixed-codimension Schubert class");
    }
    return d;
}

SchubertClass SchubertClass::operator+(const SchubertClass& o) const {
    SchubertClass r;
    for (std::size_t i = 0; i < kSchubertCount; ++i)
        r.coeff[i] = coeff[i] + o.coeff[i];
    return r;
}

SchubertClass SchubertClass::operator-(const SchubertClass& o) const {
    SchubertClass r;
    for (std::size_t i = 0; i < kSchubertCount; ++i)
        r.coeff[i] = coeff[i] - o.coeff[i];
    return r;
}

SchubertClass SchubertClass::operator-() const { return zero() - *this; }

SchubertClass SchubertClass::scaled(std::int64_t c) const {
    SchubertClass r;
    for (std::size_t i = 0; i < kSchubertCount; ++i) r.coeff[i] = coeff[i] * c;
    return r;
}

SchubertClass schubert_mul(const SchubertClass& x, const SchubertClass& y) {
    Graded X = lift(x), Y = lift(y);
    Graded Z;
    for (int dx = 0; dx <= kTopCodim; ++dx)
        for (int dy = 0; dx + dy <= kTopCodim; ++dy) {
            Slice s = slice_conv(X.comp[dx], Y.comp[dy], dx, dy);
            for (std::size_t j = 0; j < s.size(); ++j) Z.comp[dx + dy][j] += s[j];
        }
    SchubertClass out;
    for (int d = 0; d <= kTopCodim; ++d) unlift_degree(d, Z.comp[d], out);
    return out;
}

SchubertClass schubert_pow(const SchubertClass& x, unsigned e) {
    SchubertClass r = SchubertClass::one();
    for (unsigned i = 0; i < e; ++i) r = schubert_mul(r, x);
    return r;
}

std::int64_t schubert_integral(const SchubertClass& x) {
    return x.coeff[schubert_index(4, 4)];
}

std::string schubert_to_string(const SchubertClass& x) {
    if (x.is_zero()) return "0";
    const auto& P = schubert_partitions();
    std::string out;
    for (std::size_t i = 0; i < kSchubertCount; ++i) {
        std::int64_t c = x.coeff[i];
        if (c == 0) continue;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::int64_t ab = c < 0 ? -c : c;
        std::string name = "s" + std::to_string(P[i].a) +
                           (P[i].b > 0 ? std::to_string(P[i].b) : std::string());
        if (P[i].a == 0 && P[i].b == 0) {
            out += std::to_string(ab);
        } else {
            if (ab != 1) out += std::to_string(ab) + "*";
            out += name;
        }
    }
    return out;
}

std::optional<SchubertClass> schubert_parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) return std::nullopt;
    SchubertClass acc = SchubertClass::one();
    std::size_t pos = 0;
    bool first = true;
    while (pos < s.size()) {
        if (!first) {
            if (s[pos] != '*') return std::nullopt;
            ++pos;
        }
        first = false;
        if (pos >= s.size()) return std::nullopt;
        SchubertClass factor = SchubertClass::one();
        if (s[pos] == 's') {
            ++pos;
            if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
                return std::nullopt;
            int a = s[pos++] - '0';
            int b = 0;
            if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                b = s[pos++] - '0';
            if (a > 4 || b > a) return std::nullopt;
            factor = SchubertClass::basis(a, b);
        } else if (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '-') {
            bool neg = s[pos] == '-';
            if (neg) ++pos;
            if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
                return std::nullopt;
            std::int64_t v = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                v = v * 10 + (s[pos++] - '0');
            factor = SchubertClass::one().scaled(neg ? -v : v);
        } else {
            return std::nullopt;
        }
        unsigned e = 1;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
                return std::nullopt;
            e = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                e = e * 10 + static_cast<unsigned>(s[pos++] - '0');
            if (e > 64) return std::nullopt;
        }
        acc = schubert_mul(acc, schubert_pow(factor, e));
    }
    return acc;
}

} // namespace fano8
