#pragma once

#include <stdexcept>
#include <string>

namespace zdg {

// Malformed user input: set syntax, model syntax, function literals, psi files.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A precondition on a mathematical object was violated (point outside the
// locality region, set not contained in the ground set, ...).
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// The operation is well-defined but not computable on this model kind.
class UnsupportedModel : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// |X_P| < 2: the zero-divisor graph has no vertices.
class EmptyGraph : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class CapExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

}  // namespace zdg
