#pragma once

#include <stdexcept>
#include <string>

namespace fgl {

// Raised when an input violates a domain constraint: mixed coefficient
// backends, mismatched truncation orders, malformed configurations,
// inconsistent cycle data. The CLI maps it to exit status 2.
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

class BackendMismatch : public DomainError
{
public:
    using DomainError::DomainError;
};

class TruncationError : public DomainError
{
public:
    using DomainError::DomainError;
};

} // namespace fgl
