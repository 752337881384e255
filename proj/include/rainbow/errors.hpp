#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rainbow {

// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A constructor or operation received an argument outside its contract.
struct InvalidParameter : Error {
    using Error::Error;
};

// Malformed textual input; `position` is the byte offset of the offending character.
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// The operation is defined only for a structural class the input is not in.
struct UnsupportedGraph : Error {
    using Error::Error;
};

// The operation is defined only for parameter combinations the input is not in.
struct UnsupportedParameters : Error {
    using Error::Error;
};

// Exhaustive enumeration was requested beyond the size guard.
struct InstanceTooLarge : Error {
    using Error::Error;
};

// A closed-form formula was evaluated outside its domain.
struct OutOfDomain : Error {
    using Error::Error;
};

} // namespace rainbow
