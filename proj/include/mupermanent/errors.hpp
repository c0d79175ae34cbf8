#pragma once

#include <stdexcept>

namespace muperm {

// An input file or textual value could not be parsed.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operation's input violates a documented precondition (malformed
// permutation, non-tree graph, invalid labeling, index out of range, ...).
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An exact computation would exceed its configured size cap.
struct resource_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace muperm
