#pragma once

#include <stdexcept>
#include <string>

namespace ngon {

/// A mathematical precondition of an operation does not hold
/// (singular matrix, n does not divide m, matrix outside Gamma_0(n), ...).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Serialized input does not follow the documented schema.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Fixed-width integer arithmetic left the int64 range.
class OverflowError : public DomainError {
public:
    using DomainError::DomainError;
};

} // namespace ngon
