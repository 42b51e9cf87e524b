#pragma once

#include <stdexcept>
#include <string>

namespace indnet {

// Malformed input text: ragged rows, duplicate ids, bad numbers.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input violates a domain precondition (negative value, zero-total row,
// mismatched node sets, bad parameters).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Too few industries remain to form a meaningful network.
struct DegenerateInputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The finite-distance graph is disconnected; message names the components.
struct ConnectivityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal cross-check failed (e.g. threshold inconsistent with clustering).
struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace indnet
