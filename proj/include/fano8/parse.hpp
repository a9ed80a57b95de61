// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the fano8 authors
#pragma once

#include <string>

#include "fano8/poly.hpp"

namespace fano8 {

// Grammar (whitespace-insensitive):
//   poly   := ['-']? term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := var ('^' uint)? | uint | '(' poly ')'
//   var    := [A-Za-z][A-Za-z0-9_]*
// Integer literals are reduced mod p. Throws SyntaxError (with 0-based input
// position) or UnknownVariable.
Polynomial parse_poly(const std::string& text, const Ring& R);

// Canonical text form; parse_poly(print_poly(f), R) == f.
std::string print_poly(const Polynomial& f);

std::string print_monomial(const Ring& R, const Monomial& m);

} // namespace fano8
