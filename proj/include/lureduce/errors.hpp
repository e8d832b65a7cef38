#pragma once

#include <stdexcept>
#include <string>

namespace lureduce {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidIndexError : public Error {
public:
    using Error::Error;
};

class InvalidArgumentError : public Error {
public:
    using Error::Error;
};

class InvalidRotationError : public Error {
public:
    using Error::Error;
};

class CapacityError : public Error {
public:
    using Error::Error;
};

// A stage-preservation check failed after a stage completed. Indicates a bug.
class InternalConsistencyError : public Error {
public:
    using Error::Error;
};

class OracleFailureError : public Error {
public:
    using Error::Error;
};

}  // namespace lureduce
