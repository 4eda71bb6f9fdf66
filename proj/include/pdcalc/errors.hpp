#pragma once

#include <stdexcept>
#include <string>

namespace pdcalc {

// Syntax errors carry the byte offset of the failure in the input text.
struct parse_error : std::runtime_error {
    std::size_t offset;
    parse_error(const std::string& msg, std::size_t off)
        : std::runtime_error(msg + " (at offset " + std::to_string(off) + ")"), offset(off) {}
};

// Malformed input data: broken invariants, shape mismatches, axiom violations. Exit code 1.
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The request is well-formed but the computation refuses it, e.g. a spherical
// pairing on a quadruple that is not R-spherical. Exit code 2.
struct refusal_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configured resource bound was exceeded. Exit code 3.
struct bound_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace pdcalc
