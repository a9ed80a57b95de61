// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the fano8 authors
#include "fano8/io.hpp"

#include <fstream>
#include <sstream>

#include "fano8/parse.hpp"

namespace fano8 {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

// next meaningful line (skips comments and blanks); false at EOF
bool next_line(std::istream& in, std::string& out) {
    std::string line;
    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        out = t;
        return true;
    }
    return false;
}

Ring read_ring_header(std::istream& in) {
    std::string line;
    if (!next_line(in, line) || line.rfind("p=", 0) != 0)
        throw Error("ring file: expected first line 'p=<prime>'");
    std::uint32_t p = 0;
    try {
        unsigned long v = std::stoul(trim(line.substr(2)));
        if (v >= (1ul << 31)) throw Error("ring file: modulus out of range");
        p = static_cast<std::uint32_t>(v);
    } catch (const std::logic_error&) {
        throw Error("ring file: cannot parse modulus '" + line + "'");
    }
    if (!next_line(in, line))
        throw Error("ring file: expected a variable list on the second line");
    std::vector<std::string> vars;
    std::stringstream ss(line);
    std::string name;
    while (std::getline(ss, name, ',')) {
        name = trim(name);
        if (name.empty()) throw Error("ring file: empty variable name");
        vars.push_back(name);
    }
    if (vars.empty()) throw Error("ring file: no variables declared");
    return Ring(p, std::move(vars));
}

} // namespace

RingFile read_ring_file(std::istream& in) {
    Ring R = read_ring_header(in);
    std::vector<Polynomial> polys;
    std::string line;
    while (next_line(in, line)) polys.push_back(parse_poly(line, R));
    return RingFile{std::move(R), std::move(polys)};
}

RingFile load_ring_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error("cannot open file '" + path + "'");
    return read_ring_file(f);
}

std::string write_ring_file(const Ring& R, const std::vector<Polynomial>& polys) {
    std::string out = "p=" + std::to_string(R.p()) + "\n";
    for (std::size_t i = 0; i < R.nvars(); ++i) {
        if (i) out += ", ";
        out += R.variable(i);
    }
    out += '\n';
    for (const auto& f : polys) out += print_poly(f) + "\n";
    return out;
}

MatrixFile read_matrix_file(std::istream& in) {
    Ring R = read_ring_header(in);
    std::string line;
    if (!next_line(in, line)) throw Error("matrix file: expected the size n");
    std::size_t n = 0;
    try {
        n = static_cast<std::size_t>(std::stoul(line));
    } catch (const std::logic_error&) {
        throw Error("matrix file: cannot parse size '" + line + "'");
    }
    if (n == 0 || n > 64) throw Error("matrix file: size out of range");
    std::vector<std::vector<Polynomial>> entries(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!next_line(in, line))
                throw Error("matrix file: expected " + std::to_string(n * n) + " entries");
            entries[i].push_back(parse_poly(line, R));
        }
    return MatrixFile{std::move(R), n, std::move(entries)};
}

MatrixFile load_matrix_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error("cannot open file '" + path + "'");
    return read_matrix_file(f);
}

std::string write_matrix_file(const Ring& R,
                              const std::vector<std::vector<Polynomial>>& entries) {
    std::string out = "p=" + std::to_string(R.p()) + "\n";
    for (std::size_t i = 0; i < R.nvars(); ++i) {
        if (i) out += ", ";
        out += R.variable(i);
    }
    out += '\n' + std::to_string(entries.size()) + '\n';
    for (const auto& row : entries)
        for (const auto& f : row) out += print_poly(f) + "\n";
    return out;
}

} // namespace fano8
