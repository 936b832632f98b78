#pragma once

#include <stdexcept>
#include <string>

namespace lincode {

// Operands belong to different prime fields.
struct field_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Inversion of zero.
struct division_by_zero : std::domain_error {
    using std::domain_error::domain_error;
};

// Non-conformable shapes, bad indices.
struct shape_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Generator matrix violates the code preconditions (rank < k, zero column, k > n).
struct degenerate_code : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A work or enumeration cap was exceeded.
struct budget_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The caller-supplied minimum distance is provably wrong.
struct inconsistent_distance : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed matrix or word input.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace lincode
