#pragma once

#include <stdexcept>
#include <string>

namespace heronq {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Caller-supplied values violate a documented precondition (CLI exit code 2).
struct InvalidInput : Error {
    using Error::Error;
};

// A bounded search ran out of budget.  Deliberately distinct from
// InvalidInput: exhaustion says nothing about existence.
struct SearchExhausted : Error {
    using Error::Error;
};

// Reduction mod p was requested at a prime of bad reduction.
struct BadReduction : Error {
    using Error::Error;
};

} // namespace heronq
