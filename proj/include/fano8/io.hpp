// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the fano8 authors
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fano8/poly.hpp"

namespace fano8 {

// Ring declaration file: first line "p=<prime>", second line comma-separated
// variable names, then one polynomial per line. Lines starting with '#' and
// blank lines are ignored.
struct RingFile {
    Ring ring;
    std::vector<Polynomial> polys;
};

RingFile read_ring_file(std::istream& in);
RingFile load_ring_file(const std::string& path);
std::string write_ring_file(const Ring& R, const std::vector<Polynomial>& polys);

// Matrix file: a ring header as above, then a line with the size n, then n*n
// polynomial entries row-major, one per line.
struct MatrixFile {
    Ring ring;
    std::size_t n;
    std::vector<std::vector<Polynomial>> entries;
};

MatrixFile read_matrix_file(std::istream& in);
MatrixFile load_matrix_file(const std::string& path);
std::string write_matrix_file(const Ring& R,
                              const std::vector<std::vector<Polynomial>>& entries);

} // namespace fano8
