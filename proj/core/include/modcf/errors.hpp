#pragma once

#include <stdexcept>
#include <string>

namespace modcf {

// Error classes are disjoint so that callers (the CLI in particular) can map
// each one to a distinct exit status.

/// Caller supplied malformed or inconsistent arguments.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Arguments are well formed but outside the mathematical domain of the operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// tau mod m requested for a modulus without a known congruence.
class UnsupportedCongruenceError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A configured memory or size budget would be exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A search ran out of its step budget. Never a claim of non-existence.
class BudgetExhaustedError : public ResourceError {
public:
    using ResourceError::ResourceError;
};

/// Enclosure refinement hit the configured digit ceiling.
class PrecisionCeilingError : public ResourceError {
public:
    using ResourceError::ResourceError;
};

} // namespace modcf
