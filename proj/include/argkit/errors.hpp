#pragma once

#include <stdexcept>
#include <string>

namespace argkit {

/// Caller passed a set or id that does not belong to the framework.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A bounded search was asked to go beyond its configured limit.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The operation has no defined result for the requested semantics.
class UnsupportedError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A value violated the precondition of the callee (e.g. wrong class shape).
class ContractError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace argkit
