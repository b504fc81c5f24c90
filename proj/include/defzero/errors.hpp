#pragma once

#include <stdexcept>
#include <string>

namespace defzero {

/// Index or id outside its valid range.
class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Argument is in range but semantically invalid (duplicate reaction, bad probability, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An operation was called with its precondition violated.
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Requested computation is outside what the implementation supports.
class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace defzero
