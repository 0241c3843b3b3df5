#pragma once

#include <stdexcept>
#include <string>

namespace extropy {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Too few (usable) observations for an estimator.
class InsufficientData : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A bound whose constants are degenerate (zero infimum or infinite supremum).
class BoundUnavailable : public DomainError {
public:
    using DomainError::DomainError;
};

/// Malformed text input (model specs, signatures). `position` is a 0-based
/// character offset into the offending text.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Malformed or unusable data files.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace extropy
