#pragma once

#include <stdexcept>
#include <string>

namespace graphcode {

// Mismatched moduli or vector lengths in an algebraic operation.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed user input (files, CLI arguments, out-of-range parameters).
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Family constructor called with parameters outside its constraint.
struct FamilyError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A configured size/time budget would be exceeded (amplitude bound,
// bitmap cap, clique-search time limit, closure bound).
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal certificate failed: a constructed object did not validate.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace graphcode
