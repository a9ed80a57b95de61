// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the fano8 authors
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fano8 {

// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// fpcore
struct ZeroInverse : Error {
    ZeroInverse() : Error("inverse of zero in a prime field") {}
};

struct SyntaxError : Error {
    std::size_t position;
    SyntaxError(const std::string& what, std::size_t pos)
        : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct UnknownVariable : Error {
    std::string name;
    explicit UnknownVariable(const std::string& var)
        : Error("unknown variable '" + var + "'"), name(var) {}
};

struct RingMismatch : Error {
    RingMismatch() : Error("operands belong to different rings") {}
    explicit RingMismatch(const std::string& what) : Error(what) {}
};

struct CyclicSubstitution : Error {
    explicit CyclicSubstitution(const std::string& var)
        : Error("substituted variable '" + var + "' appears in an image linear form") {}
};

// groebner
struct ResourceLimit : Error {
    using Error::Error;
};

struct UnitIdeal : Error {
    UnitIdeal() : Error("ideal contains 1") {}
    explicit UnitIdeal(const std::string& what) : Error(what) {}
};

// frobsplit
struct NotAPowerOfP : Error {
    NotAPowerOfP() : Error("exponent is not a positive power of the ring characteristic") {}
};

struct NotHomogeneous : Error {
    using Error::Error;
};

// pfaffgrass
struct NotAlternating : Error {
    using Error::Error;
};

struct ScanBudgetExceeded : Error {
    using Error::Error;
};

// chowcalc
struct NonSymmetricResidual : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct CodimMismatch : Error {
    using Error::Error;
};

} // namespace fano8
