#pragma once

#include <stdexcept>
#include <string>

namespace jsrkit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operand shapes do not agree (matrix dimensions, tuple sizes, vector lengths).
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A precondition on an argument value was violated.
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// NaN or infinity reached a matrix or vector entry.
class NonFiniteError : public Error {
public:
    using Error::Error;
};

/// An enumeration would visit more words than the configured budget allows.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// An iterative kernel hit its iteration cap.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// Malformed serialized input.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace jsrkit
