#pragma once

#include <stdexcept>
#include <string>

namespace finring {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad argument: out-of-range index, malformed input, violated precondition.
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// A construction would exceed the configured order limit.
class LimitError : public Error {
public:
    using Error::Error;
};

/// An internal invariant failed. Indicates a bug, never bad input.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

} // namespace finring
