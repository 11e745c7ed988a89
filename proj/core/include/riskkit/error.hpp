#pragma once

#include <stdexcept>
#include <string>

namespace riskkit {

/// Base of every error raised by the library. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: invalid lottery, bad parameter, wrong answer count.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A value was evaluated outside the domain of a utility/weight function.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A root or interval could not be bracketed.
class RangeError : public Error {
public:
    using Error::Error;
};

/// Relative-weight denominator vanished in WLU.
class DegenerateWeightError : public Error {
public:
    using Error::Error;
};

class NotFoundError : public Error {
public:
    using Error::Error;
};

/// Operation not allowed in the current state (e.g. answering a closed session).
class ConflictError : public Error {
public:
    using Error::Error;
};

class StorageError : public Error {
public:
    using Error::Error;
};

} // namespace riskkit
